#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hecsolve/bench.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Block-ILU preconditioned GMRES benchmark"};
    std::string matrix;
    std::string precond = "bilu0";
    std::string out_path = "results.csv";
    int blocks = 16;
    int overlap = 0;
    int workers = 4;
    int restart = 20;
    int max_iters = 10000;
    double tol = 1e-6;
    app.add_option("--matrix", matrix, "matrix source: poisson:NX,NY,NZ or mm:PATH")->required();
    app.add_option("--precond", precond, "preconditioner: bilu0, bilut:P,TOL, or ras");
    app.add_option("--blocks", blocks, "number of partition blocks");
    app.add_option("--overlap", overlap, "RAS overlap rounds");
    app.add_option("--workers", workers, "worker threads for the parallel run");
    app.add_option("--restart", restart, "GMRES restart length");
    app.add_option("--tol", tol, "relative residual tolerance");
    app.add_option("--max-iters", max_iters, "inner iteration cap");
    app.add_option("--out", out_path, "CSV output path");
    CLI11_PARSE(app, argc, argv);

    try {
        const hec::CsrMatrix a = hec::load_matrix_spec(matrix);
        const hec::PrecondSpec spec = hec::parse_precond_spec(precond);
        hec::SolverConfig cfg;
        cfg.restart = restart;
        cfg.max_iters = max_iters;
        cfg.rel_tol = tol;

        std::cout << "matrix " << matrix << ": n=" << a.n_rows << " nnz=" << a.nnz() << "\n";
        const hec::BenchRow row = hec::run_benchmark(a, spec, blocks, overlap, workers, cfg);
        hec::write_bench_csv({row}, out_path);
        std::cout << hec::bench_csv_header() << "\n" << hec::bench_csv_row(row) << "\n";
        if (!row.converged) std::cout << "note: solver did not converge within the limits\n";
        std::cout << "wrote " << out_path << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
