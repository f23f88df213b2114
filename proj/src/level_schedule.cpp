#include "hecsolve/level_schedule.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace hec {

std::vector<int> compute_levels(const CsrMatrix& l) {
    const int n = l.n_rows;
    std::vector<int> level(n, 0);
    for (int i = 0; i < n; ++i) {
        int deepest = 0;
        for (int k = l.row_offsets[i]; k < l.row_offsets[i + 1]; ++k) {
            int j = l.col_indices[k];
            if (j > i)
                throw std::invalid_argument("compute_levels: entry (" + std::to_string(i) +
                                            ", " + std::to_string(j) +
                                            ") above the diagonal");
            if (j < i) deepest = std::max(deepest, level[j]);
        }
        level[i] = deepest + 1;
    }
    return level;
}

LevelSchedule build_schedule(const std::vector<int>& levels) {
    const int n = static_cast<int>(levels.size());
    int nlev = 0;
    for (int v : levels) {
        if (v < 1) throw std::invalid_argument("build_schedule: level values must be >= 1");
        nlev = std::max(nlev, v);
    }

    std::vector<int> counts(nlev, 0);
    for (int v : levels) ++counts[v - 1];
    for (int k = 0; k < nlev; ++k)
        if (counts[k] == 0)
            throw std::invalid_argument("build_schedule: gap at level " + std::to_string(k + 1));

    LevelSchedule s;
    s.n = n;
    s.nlev = nlev;
    s.level_of = levels;
    s.level_starts.assign(nlev + 1, 0);
    for (int k = 0; k < nlev; ++k) s.level_starts[k + 1] = s.level_starts[k] + counts[k];

    s.perm.resize(n);
    s.inv_perm.resize(n);
    std::vector<int> next(s.level_starts.begin(), s.level_starts.end() - 1);
    for (int i = 0; i < n; ++i) {
        int dst = next[levels[i] - 1]++;
        s.perm[i] = dst;
        s.inv_perm[dst] = i;
    }
    return s;
}

CsrMatrix reorder_matrix(const CsrMatrix& l, const LevelSchedule& s) {
    if (l.n_rows != s.n || l.n_cols != s.n)
        throw std::invalid_argument("reorder_matrix: schedule size does not match matrix");

    CsrMatrix out;
    out.n_rows = l.n_rows;
    out.n_cols = l.n_cols;
    out.row_offsets.assign(l.n_rows + 1, 0);
    for (int i = 0; i < l.n_rows; ++i)
        out.row_offsets[s.perm[i] + 1] = l.row_offsets[i + 1] - l.row_offsets[i];
    for (int r = 0; r < l.n_rows; ++r) out.row_offsets[r + 1] += out.row_offsets[r];

    out.col_indices.resize(l.nnz());
    out.values.resize(l.nnz());
    std::vector<std::pair<int, double>> row;
    for (int r = 0; r < l.n_rows; ++r) {
        int i = s.inv_perm[r];
        row.clear();
        for (int k = l.row_offsets[i]; k < l.row_offsets[i + 1]; ++k)
            row.emplace_back(s.perm[l.col_indices[k]], l.values[k]);
        std::sort(row.begin(), row.end());
        int dst = out.row_offsets[r];
        for (const auto& [col, val] : row) {
            out.col_indices[dst] = col;
            out.values[dst] = val;
            ++dst;
        }
    }
    return out;
}

std::vector<double> permute_vector(const std::vector<double>& v, const std::vector<int>& perm) {
    if (v.size() != perm.size())
        throw std::invalid_argument("permute_vector: length mismatch");
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
    return out;
}

} // namespace hec
