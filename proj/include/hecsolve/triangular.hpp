#pragma once

#include <vector>

#include "hecsolve/hec.hpp"
#include "hecsolve/level_schedule.hpp"

namespace hec {

enum class TriKind { lower, upper };

// A triangular matrix preprocessed for level-parallel substitution: the
// dependency levels are computed, rows are permuted level by level, and
// the permuted matrix is stored in hybrid form with the diagonal as the
// last CSR entry of every row. Upper-triangular systems are first turned
// into lower-triangular ones by reversing both row and column indices
// (i -> n-1-i), which is its own inverse.
struct PreparedTriangular {
    TriKind kind = TriKind::lower;
    int n = 0;
    bool reversal_applied = false;
    HecMatrix hec;
    LevelSchedule schedule;
};

PreparedTriangular prepare_lower(const CsrMatrix& l, WidthPolicy policy = {});
PreparedTriangular prepare_upper(const CsrMatrix& u, WidthPolicy policy = {});

// Solves L x = b (or U x = b) in the original ordering. Rows within one
// level are distributed across workers with a barrier between levels;
// each entry of the intermediate vector is written exactly once, so the
// result is bitwise identical for any worker count.
std::vector<double> solve(const PreparedTriangular& p, const std::vector<double>& b,
                          int workers = 1);

// Row-by-row reference substitution on plain CSR. These are the oracles
// the level-parallel path is tested against.
std::vector<double> serial_forward_solve(const CsrMatrix& l, const std::vector<double>& b);
std::vector<double> serial_backward_solve(const CsrMatrix& u, const std::vector<double>& b);

} // namespace hec
