#include "hecsolve/hec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hec {

namespace {

int pick_width(const std::vector<int>& ell_counts, WidthPolicy policy) {
    if (policy.mode == WidthPolicy::Mode::fixed) {
        if (policy.width < 0)
            throw std::invalid_argument("hec_from_csr: fixed ELL width must be >= 0");
        return policy.width;
    }
    if (ell_counts.empty()) return 0;
    std::vector<int> sorted = ell_counts;
    auto mid = sorted.begin() + sorted.size() / 2;
    std::nth_element(sorted.begin(), mid, sorted.end());
    int w = *mid;
    int max_count = *std::max_element(ell_counts.begin(), ell_counts.end());
    return std::clamp(w, 0, max_count);
}

} // namespace

HecMatrix hec_from_csr(const CsrMatrix& a, bool triangular, WidthPolicy policy) {
    const int n = a.n_rows;
    const int reserved = triangular ? 1 : 0;

    std::vector<int> ell_counts(n);
    for (int i = 0; i < n; ++i) {
        int rs = a.row_offsets[i];
        int re = a.row_offsets[i + 1];
        if (triangular) {
            // Sorted lower-triangular rows end at the diagonal; it stays in
            // the CSR part.
            if (re == rs || a.col_indices[re - 1] != i)
                throw std::invalid_argument("hec_from_csr: row " + std::to_string(i) +
                                            " has no diagonal entry");
        }
        ell_counts[i] = re - rs - reserved;
    }

    const int width = pick_width(ell_counts, policy);

    HecMatrix h;
    h.n_rows = n;
    h.n_cols = a.n_cols;
    h.ell.n_rows = n;
    h.ell.width = width;
    h.ell.col_indices.resize(static_cast<std::size_t>(n) * width);
    h.ell.values.assign(static_cast<std::size_t>(n) * width, 0.0);
    h.csr.n_rows = n;
    h.csr.n_cols = a.n_cols;
    h.csr.row_offsets.assign(n + 1, 0);

    for (int i = 0; i < n; ++i) {
        int in_ell = std::min(width, ell_counts[i]);
        h.csr.row_offsets[i + 1] = h.csr.row_offsets[i] + (ell_counts[i] - in_ell) + reserved;
    }
    h.csr.col_indices.resize(h.csr.row_offsets[n]);
    h.csr.values.resize(h.csr.row_offsets[n]);

    for (int i = 0; i < n; ++i) {
        int rs = a.row_offsets[i];
        int in_ell = std::min(width, ell_counts[i]);
        int pad_col = a.n_cols > 0 ? std::min(i, a.n_cols - 1) : 0;
        for (int k = 0; k < width; ++k) {
            std::size_t slot = static_cast<std::size_t>(k) * n + i;
            if (k < in_ell) {
                h.ell.col_indices[slot] = a.col_indices[rs + k];
                h.ell.values[slot] = a.values[rs + k];
            } else {
                h.ell.col_indices[slot] = pad_col;
            }
        }
        int dst = h.csr.row_offsets[i];
        for (int k = rs + in_ell; k < a.row_offsets[i + 1]; ++k, ++dst) {
            h.csr.col_indices[dst] = a.col_indices[k];
            h.csr.values[dst] = a.values[k];
        }
    }
    return h;
}

std::vector<double> spmv_hec(const HecMatrix& a, const std::vector<double>& x, int workers) {
    if (static_cast<int>(x.size()) != a.n_cols)
        throw std::invalid_argument("spmv_hec: dimension mismatch");
    if (workers < 1) workers = 1;

    const int n = a.n_rows;
    const int width = a.ell.width;
    std::vector<double> y(n);
#pragma omp parallel for schedule(static) num_threads(workers)
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = 0; k < width; ++k) {
            std::size_t slot = static_cast<std::size_t>(k) * n + i;
            acc += a.ell.values[slot] * x[a.ell.col_indices[slot]];
        }
        for (int k = a.csr.row_offsets[i]; k < a.csr.row_offsets[i + 1]; ++k)
            acc += a.csr.values[k] * x[a.csr.col_indices[k]];
        y[i] = acc;
    }
    return y;
}

CsrMatrix csr_from_hec(const HecMatrix& h) {
    const int n = h.n_rows;
    std::vector<Triplet> triples;
    triples.reserve(h.ell.values.size() + h.csr.values.size());
    for (int i = 0; i < n; ++i) {
        int pad_col = h.n_cols > 0 ? std::min(i, h.n_cols - 1) : 0;
        for (int k = 0; k < h.ell.width; ++k) {
            std::size_t slot = static_cast<std::size_t>(k) * n + i;
            if (h.ell.col_indices[slot] == pad_col && h.ell.values[slot] == 0.0)
                continue;
            triples.push_back({i, h.ell.col_indices[slot], h.ell.values[slot]});
        }
        for (int k = h.csr.row_offsets[i]; k < h.csr.row_offsets[i + 1]; ++k)
            triples.push_back({i, h.csr.col_indices[k], h.csr.values[k]});
    }
    return csr_from_triples(n, h.n_cols, std::move(triples));
}

} // namespace hec
