#include "hecsolve/gmres.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace hec {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

std::vector<double> residual(const CsrMatrix& a, const std::vector<double>& b,
                             const std::vector<double>& x, int workers) {
    std::vector<double> r = spmv_csr(a, x, workers);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
    return r;
}

} // namespace

SolveResult gmres(const CsrMatrix& a, const std::vector<double>& b,
                  const BlockPreconditioner* m, const SolverConfig& cfg, int workers) {
    if (a.n_rows != a.n_cols) throw std::invalid_argument("gmres: matrix must be square");
    if (static_cast<int>(b.size()) != a.n_rows)
        throw std::invalid_argument("gmres: dimension mismatch");
    if (cfg.restart < 1) throw std::invalid_argument("gmres: restart must be >= 1");
    if (cfg.max_iters < 0) throw std::invalid_argument("gmres: max_iters must be >= 0");
    if (cfg.rel_tol < 0.0 || cfg.abs_tol < 0.0)
        throw std::invalid_argument("gmres: tolerances must be >= 0");
    if (m && m->n != a.n_rows) throw std::invalid_argument("gmres: preconditioner size mismatch");

    const auto t0 = std::chrono::steady_clock::now();
    const int n = a.n_rows;
    const int mr = cfg.restart;
    const double bnorm = norm2(b);
    const double threshold = std::max(cfg.rel_tol * bnorm, cfg.abs_tol);

    SolveResult out;
    out.x.assign(n, 0.0);
    SolveReport& rep = out.report;

    std::vector<std::vector<double>> v(mr + 1, std::vector<double>(n));
    std::vector<double> h((mr + 1) * mr, 0.0);  // column-major, ld = mr + 1
    std::vector<double> cs(mr), sn(mr), g(mr + 1), y(mr);
    std::vector<double> r = b;  // residual of the zero initial guess
    double rnorm = bnorm;
    bool stalled = false;

    while (true) {
        if (rnorm <= threshold) {
            rep.converged = true;
            break;
        }
        if (rep.iterations >= cfg.max_iters || stalled) break;

        for (int i = 0; i < n; ++i) v[0][i] = r[i] / rnorm;
        std::fill(g.begin(), g.end(), 0.0);
        g[0] = rnorm;

        int j = 0;
        bool lucky = false;
        while (j < mr && rep.iterations < cfg.max_iters) {
            std::vector<double> w =
                m ? spmv_csr(a, apply(*m, v[j], workers), workers) : spmv_csr(a, v[j], workers);
            for (int i = 0; i <= j; ++i) {
                const double hij = dot(w, v[i]);
                h[i + j * (mr + 1)] = hij;
                for (int t = 0; t < n; ++t) w[t] -= hij * v[i][t];
            }
            double hjj1 = norm2(w);
            h[(j + 1) + j * (mr + 1)] = hjj1;
            if (hjj1 > 1e-300) {
                for (int t = 0; t < n; ++t) v[j + 1][t] = w[t] / hjj1;
            } else {
                lucky = true;
            }

            for (int i = 0; i < j; ++i) {
                const double hi = h[i + j * (mr + 1)];
                const double hi1 = h[(i + 1) + j * (mr + 1)];
                h[i + j * (mr + 1)] = cs[i] * hi + sn[i] * hi1;
                h[(i + 1) + j * (mr + 1)] = -sn[i] * hi + cs[i] * hi1;
            }
            const double hjj = h[j + j * (mr + 1)];
            const double denom = std::hypot(hjj, hjj1);
            if (denom > 0.0) {
                cs[j] = hjj / denom;
                sn[j] = hjj1 / denom;
            } else {
                cs[j] = 1.0;
                sn[j] = 0.0;
            }
            h[j + j * (mr + 1)] = denom;
            h[(j + 1) + j * (mr + 1)] = 0.0;
            const double gj = g[j];
            g[j] = cs[j] * gj;
            g[j + 1] = -sn[j] * gj;

            ++rep.iterations;
            ++j;
            const double est = std::fabs(g[j]);
            rep.inner_residuals.push_back(est);
            if (est <= threshold || lucky) break;
        }

        // Least-squares solution of the rotated Hessenberg system, then the
        // iterate update x += M^-1 (V y).
        for (int i = j - 1; i >= 0; --i) {
            double s = g[i];
            for (int t = i + 1; t < j; ++t) s -= h[i + t * (mr + 1)] * y[t];
            y[i] = s / h[i + i * (mr + 1)];
        }
        std::vector<double> xc(n, 0.0);
        for (int i = 0; i < j; ++i)
            for (int t = 0; t < n; ++t) xc[t] += y[i] * v[i][t];
        if (m) xc = apply(*m, xc, workers);
        for (int t = 0; t < n; ++t) out.x[t] += xc[t];

        r = residual(a, b, out.x, workers);
        const double rn = norm2(r);
        // A lucky breakdown that still misses the threshold cannot improve
        // on restart: the Krylov space has become A-invariant.
        if (lucky && rn > threshold) stalled = true;
        rnorm = rn;
    }

    rep.final_relative_residual = bnorm > 0.0 ? rnorm / bnorm : rnorm;
    rep.solve_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace hec
