#include "hecsolve/csr.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hec {

CsrMatrix csr_from_triples(int n_rows, int n_cols, std::vector<Triplet> triples) {
    if (n_rows < 0 || n_cols < 0)
        throw std::invalid_argument("csr_from_triples: negative dimension");
    for (const Triplet& t : triples) {
        if (t.row < 0 || t.row >= n_rows || t.col < 0 || t.col >= n_cols)
            throw std::out_of_range("csr_from_triples: entry (" + std::to_string(t.row) +
                                    ", " + std::to_string(t.col) + ") out of range");
    }

    std::sort(triples.begin(), triples.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t k = 1; k < triples.size(); ++k) {
        if (triples[k].row == triples[k - 1].row && triples[k].col == triples[k - 1].col)
            throw std::invalid_argument("csr_from_triples: duplicate entry (" +
                                        std::to_string(triples[k].row) + ", " +
                                        std::to_string(triples[k].col) + ")");
    }

    CsrMatrix a;
    a.n_rows = n_rows;
    a.n_cols = n_cols;
    a.row_offsets.assign(n_rows + 1, 0);
    a.col_indices.resize(triples.size());
    a.values.resize(triples.size());
    for (const Triplet& t : triples) ++a.row_offsets[t.row + 1];
    for (int i = 0; i < n_rows; ++i) a.row_offsets[i + 1] += a.row_offsets[i];
    for (std::size_t k = 0; k < triples.size(); ++k) {
        a.col_indices[k] = triples[k].col;
        a.values[k] = triples[k].value;
    }
    return a;
}

std::vector<double> spmv_csr(const CsrMatrix& a, const std::vector<double>& x, int workers) {
    if (static_cast<int>(x.size()) != a.n_cols)
        throw std::invalid_argument("spmv_csr: dimension mismatch");
    if (workers < 1) workers = 1;

    std::vector<double> y(a.n_rows);
#pragma omp parallel for schedule(static) num_threads(workers)
    for (int i = 0; i < a.n_rows; ++i) {
        double acc = 0.0;
        for (int k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k)
            acc += a.values[k] * x[a.col_indices[k]];
        y[i] = acc;
    }
    return y;
}

} // namespace hec
