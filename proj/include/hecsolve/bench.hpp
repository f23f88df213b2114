#pragma once

#include <string>
#include <vector>

#include "hecsolve/csr.hpp"
#include "hecsolve/gmres.hpp"
#include "hecsolve/precond.hpp"

namespace hec {

// One benchmark table line: setup and solve wall times for the serial and
// parallel runs of the same problem, plus their ratios.
struct BenchRow {
    std::string preconditioner;
    int blocks = 0;
    double solve_seconds_serial = 0.0;
    double solve_seconds_parallel = 0.0;
    double solve_speedup = 0.0;
    double precond_seconds_serial = 0.0;
    double precond_seconds_parallel = 0.0;
    double precond_speedup = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct PrecondSpec {
    PrecondKind kind = PrecondKind::bilu0;
    int ilut_p = 7;
    double ilut_tol = 0.1;
};

// "bilu0" | "ras" | "bilut" | "bilut:P,TOL" (the form "bilut(P,TOL)" is
// also accepted). Bare bilut keeps the (7, 0.1) defaults.
PrecondSpec parse_precond_spec(const std::string& text);

// "poisson:NX,NY,NZ" | "mm:PATH".
CsrMatrix load_matrix_spec(const std::string& text);

// Solves a x = b with b = a * ones, once with workers=1 and once with the
// requested worker count; each timing is the median of three runs. The two
// runs must agree on iteration count and final residual (determinism
// guard). Non-convergence is recorded in the row, not an error.
BenchRow run_benchmark(const CsrMatrix& a, const PrecondSpec& spec, int blocks, int overlap,
                       int workers, const SolverConfig& cfg);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);
void write_bench_csv(const std::vector<BenchRow>& rows, const std::string& path);

} // namespace hec
