#pragma once

#include <vector>

#include "hecsolve/csr.hpp"
#include "hecsolve/precond.hpp"

namespace hec {

struct SolverConfig {
    int restart = 20;
    int max_iters = 10000;
    double rel_tol = 1e-6;
    double abs_tol = 0.0;
};

struct SolveReport {
    bool converged = false;
    int iterations = 0;
    double final_relative_residual = 0.0;
    double setup_seconds = 0.0;  // filled by callers that time preconditioner setup
    double solve_seconds = 0.0;
    // Givens recurrence estimates, one per inner step; non-increasing
    // within each restart cycle.
    std::vector<double> inner_residuals;
};

struct SolveResult {
    std::vector<double> x;
    SolveReport report;
};

// Restarted GMRES(cfg.restart) with right preconditioning and zero initial
// guess. Stops when ||b - A x||_2 <= max(rel_tol * ||b||_2, abs_tol); the
// explicit residual is recomputed before convergence is declared, so the
// report's residual is the true one. Pass m = nullptr for no preconditioner.
SolveResult gmres(const CsrMatrix& a, const std::vector<double>& b,
                  const BlockPreconditioner* m, const SolverConfig& cfg, int workers = 1);

} // namespace hec
