#pragma once

#include <vector>

#include "hecsolve/csr.hpp"

namespace hec {

// Grouping of the rows of a lower-triangular matrix into levels: a row's
// level is one more than the deepest level it depends on, so rows sharing
// a level have no mutual dependencies and can be solved concurrently.
// perm maps original row -> reordered row; reordered rows are laid out
// level by level, ascending original index inside each level.
struct LevelSchedule {
    int n = 0;
    int nlev = 0;
    std::vector<int> level_of;      // 1-based level per original row
    std::vector<int> perm;          // original row -> reordered row
    std::vector<int> inv_perm;      // reordered row -> original row
    std::vector<int> level_starts;  // size nlev + 1, offsets into reordered rows
};

// Level of every row of a lower-triangular matrix, computed in one
// ascending pass over the pattern. Rows with no strict-lower entries get
// level 1. Values only; the numerical entries are never consulted.
std::vector<int> compute_levels(const CsrMatrix& l);

// Builds the permutation and level offsets from 1-based level values,
// which must cover 1..nlev without gaps.
LevelSchedule build_schedule(const std::vector<int>& levels);

// Applies the schedule's permutation symmetrically: entry (i, j) moves to
// (perm[i], perm[j]). Rows of the result are re-sorted by column.
CsrMatrix reorder_matrix(const CsrMatrix& l, const LevelSchedule& s);

// out[perm[i]] = v[i]. Passing inv_perm inverts the permutation.
std::vector<double> permute_vector(const std::vector<double>& v,
                                   const std::vector<int>& perm);

} // namespace hec
