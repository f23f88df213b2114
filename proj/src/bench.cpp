#include "hecsolve/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hecsolve/matrix_market.hpp"
#include "hecsolve/poisson.hpp"

namespace hec {

namespace {

double median3(std::array<double, 3> t) {
    std::sort(t.begin(), t.end());
    return t[1];
}

// Floor keeps the speedup ratios finite on sub-resolution timings.
double clamp_time(double s) { return std::max(s, 1e-9); }

struct TimedRun {
    double pre_seconds = 0.0;
    double solve_seconds = 0.0;
    SolveReport report;
};

TimedRun timed_run(const CsrMatrix& a, const std::vector<double>& b, const PrecondSpec& spec,
                   int blocks, int overlap, int workers, const SolverConfig& cfg) {
    std::array<double, 3> pre_t{}, solve_t{};
    TimedRun out;
    for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        const BlockPreconditioner m =
            build_preconditioner(a, spec.kind, blocks, overlap, spec.ilut_p, spec.ilut_tol);
        pre_t[rep] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        SolveResult res = gmres(a, b, &m, cfg, workers);
        solve_t[rep] = res.report.solve_seconds;
        res.report.setup_seconds = pre_t[rep];
        out.report = std::move(res.report);
    }
    out.pre_seconds = clamp_time(median3(pre_t));
    out.solve_seconds = clamp_time(median3(solve_t));
    return out;
}

// True when the stream is fully consumed apart from trailing whitespace.
// Clears a pending eofbit first: reaching EOF on the last field is fine.
bool drained(std::istream& is) {
    if (is.fail()) return false;
    is.clear();
    is >> std::ws;
    return is.eof();
}

} // namespace

PrecondSpec parse_precond_spec(const std::string& text) {
    PrecondSpec spec;
    if (text == "bilu0") {
        spec.kind = PrecondKind::bilu0;
        return spec;
    }
    if (text == "ras") {
        spec.kind = PrecondKind::ras;
        return spec;
    }
    if (text.rfind("bilut", 0) == 0) {
        spec.kind = PrecondKind::bilut;
        std::string rest = text.substr(5);
        if (rest.empty()) return spec;
        if (rest.front() == ':') {
            rest.erase(0, 1);
        } else if (rest.front() == '(' && rest.back() == ')') {
            rest = rest.substr(1, rest.size() - 2);
        } else {
            throw std::invalid_argument("parse_precond_spec: expected bilut:P,TOL, got '" + text +
                                        "'");
        }
        std::istringstream is(rest);
        char comma = 0;
        if (!(is >> spec.ilut_p >> comma >> spec.ilut_tol) || comma != ',' || !drained(is) ||
            spec.ilut_p < 1 || spec.ilut_tol < 0.0)
            throw std::invalid_argument("parse_precond_spec: bad bilut parameters '" + text + "'");
        return spec;
    }
    throw std::invalid_argument("parse_precond_spec: unknown preconditioner '" + text + "'");
}

CsrMatrix load_matrix_spec(const std::string& text) {
    if (text.rfind("poisson:", 0) == 0) {
        std::istringstream is(text.substr(8));
        int nx = 0, ny = 0, nz = 0;
        char c1 = 0, c2 = 0;
        if (!(is >> nx >> c1 >> ny >> c2 >> nz) || c1 != ',' || c2 != ',' || !drained(is))
            throw std::invalid_argument("load_matrix_spec: expected poisson:NX,NY,NZ, got '" +
                                        text + "'");
        return gen_poisson7(nx, ny, nz);
    }
    if (text.rfind("mm:", 0) == 0) return read_matrix_market(text.substr(3));
    throw std::invalid_argument("load_matrix_spec: unknown matrix source '" + text + "'");
}

BenchRow run_benchmark(const CsrMatrix& a, const PrecondSpec& spec, int blocks, int overlap,
                       int workers, const SolverConfig& cfg) {
    if (workers < 1) throw std::invalid_argument("run_benchmark: workers must be >= 1");
    const std::vector<double> ones(a.n_rows, 1.0);
    const std::vector<double> b = spmv_csr(a, ones);

    const TimedRun serial = timed_run(a, b, spec, blocks, overlap, 1, cfg);
    const TimedRun parallel = timed_run(a, b, spec, blocks, overlap, workers, cfg);
    if (serial.report.iterations != parallel.report.iterations ||
        serial.report.final_relative_residual != parallel.report.final_relative_residual)
        throw std::runtime_error("run_benchmark: serial and parallel runs diverged");

    BenchRow row;
    row.preconditioner = precond_kind_name(spec.kind);
    row.blocks = blocks;
    row.solve_seconds_serial = serial.solve_seconds;
    row.solve_seconds_parallel = parallel.solve_seconds;
    row.solve_speedup = serial.solve_seconds / parallel.solve_seconds;
    row.precond_seconds_serial = serial.pre_seconds;
    row.precond_seconds_parallel = parallel.pre_seconds;
    row.precond_speedup = serial.pre_seconds / parallel.pre_seconds;
    row.iterations = serial.report.iterations;
    row.converged = serial.report.converged;
    return row;
}

std::string bench_csv_header() {
    return "pre,blocks,solve_cpu_s,solve_par_s,solve_speedup,"
           "pre_cpu_s,pre_par_s,pre_speedup,iters,converged";
}

std::string bench_csv_row(const BenchRow& row) {
    std::ostringstream os;
    os.precision(6);
    os << row.preconditioner << ',' << row.blocks << ',' << row.solve_seconds_serial << ','
       << row.solve_seconds_parallel << ',' << row.solve_speedup << ','
       << row.precond_seconds_serial << ',' << row.precond_seconds_parallel << ','
       << row.precond_speedup << ',' << row.iterations << ',' << (row.converged ? 1 : 0);
    return os.str();
}

void write_bench_csv(const std::vector<BenchRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_bench_csv: cannot open " + path);
    out << bench_csv_header() << '\n';
    for (const auto& row : rows) out << bench_csv_row(row) << '\n';
    if (!out) throw std::runtime_error("write_bench_csv: write failed for " + path);
}

} // namespace hec
