#include "hecsolve/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace hec {

std::vector<std::vector<int>> symmetrized_adjacency(const CsrMatrix& a) {
    if (a.n_rows != a.n_cols)
        throw std::invalid_argument("symmetrized_adjacency: matrix must be square");
    const int n = a.n_rows;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        for (int k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k) {
            const int j = a.col_indices[k];
            if (j == i) continue;
            adj[i].push_back(j);
            adj[j].push_back(i);
        }
    }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

Partition partition_graph(const CsrMatrix& a, int s) {
    if (a.n_rows != a.n_cols)
        throw std::invalid_argument("partition_graph: matrix must be square");
    const int n = a.n_rows;
    if (s < 1) throw std::invalid_argument("partition_graph: s must be >= 1");
    if (s > n) throw std::invalid_argument("partition_graph: s must not exceed n");

    const auto adj = symmetrized_adjacency(a);
    Partition part;
    part.n = n;
    part.n_parts = s;
    part.part_of.assign(n, -1);
    part.parts.resize(s);

    int next_seed = 0;
    int assigned = 0;
    std::vector<int> queue;
    queue.reserve(n);
    for (int pid = 0; pid < s; ++pid) {
        // Spreading the remainder over the parts still to come keeps every
        // part non-empty; the quota never exceeds ceil(n/s).
        const int quota = (n - assigned + (s - pid) - 1) / (s - pid);
        auto& rows = part.parts[pid];
        rows.reserve(quota);
        queue.clear();
        std::size_t head = 0;
        while (static_cast<int>(rows.size()) < quota) {
            if (head == queue.size()) {
                while (part.part_of[next_seed] != -1) ++next_seed;
                part.part_of[next_seed] = pid;
                rows.push_back(next_seed);
                queue.push_back(next_seed);
                ++assigned;
                continue;
            }
            const int v = queue[head++];
            for (int u : adj[v]) {
                if (part.part_of[u] != -1) continue;
                part.part_of[u] = pid;
                rows.push_back(u);
                queue.push_back(u);
                ++assigned;
                if (static_cast<int>(rows.size()) == quota) break;
            }
        }
        std::sort(rows.begin(), rows.end());
    }
    return part;
}

std::vector<std::vector<int>> extend_overlap(const CsrMatrix& a, const Partition& p, int overlap) {
    if (a.n_rows != a.n_cols)
        throw std::invalid_argument("extend_overlap: matrix must be square");
    if (p.n != a.n_rows) throw std::invalid_argument("extend_overlap: partition size mismatch");
    if (overlap < 0) throw std::invalid_argument("extend_overlap: overlap must be >= 0");

    auto ext = p.parts;
    if (overlap == 0) return ext;

    const auto adj = symmetrized_adjacency(a);
    std::vector<int> stamp(p.n, -1);
    for (int pid = 0; pid < p.n_parts; ++pid) {
        auto& rows = ext[pid];
        for (int r : rows) stamp[r] = pid;
        std::size_t frontier = 0;
        for (int round = 0; round < overlap; ++round) {
            const std::size_t end = rows.size();
            for (std::size_t t = frontier; t < end; ++t) {
                for (int u : adj[rows[t]]) {
                    if (stamp[u] == pid) continue;
                    stamp[u] = pid;
                    rows.push_back(u);
                }
            }
            frontier = end;
        }
        std::sort(rows.begin(), rows.end());
    }
    return ext;
}

} // namespace hec
