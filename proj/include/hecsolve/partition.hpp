#pragma once

#include <vector>

#include "hecsolve/csr.hpp"

namespace hec {

// Disjoint cover of [0, n) by n_parts non-empty, sorted index lists.
struct Partition {
    int n = 0;
    int n_parts = 0;
    std::vector<int> part_of;            // row -> part id
    std::vector<std::vector<int>> parts; // part id -> sorted rows
};

// Neighbor lists of pattern(a) union pattern(a^T), self-loops dropped,
// each list sorted ascending.
std::vector<std::vector<int>> symmetrized_adjacency(const CsrMatrix& a);

// Greedy BFS graph growing over the symmetrized pattern: each part seeds
// from the lowest unassigned vertex (reseeding when its frontier runs dry)
// and claims ceil(remaining / parts_left) vertices, so all s parts come out
// non-empty and no part exceeds ceil(n/s) rows.
Partition partition_graph(const CsrMatrix& a, int s);

// Grows every part by `overlap` rounds of one-hop neighbor addition in the
// symmetrized pattern. Round zero returns the parts unchanged.
std::vector<std::vector<int>> extend_overlap(const CsrMatrix& a, const Partition& p, int overlap);

} // namespace hec
