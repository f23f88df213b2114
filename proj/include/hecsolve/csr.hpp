#pragma once

#include <vector>

namespace hec {

struct Triplet {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

// Compressed sparse row storage. Canonical form: row_offsets is
// non-decreasing with row_offsets[0] == 0, columns strictly ascending
// within each row, no duplicate entries. Every other structure in the
// library exchanges matrices through this type.
struct CsrMatrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<int> row_offsets;  // size n_rows + 1
    std::vector<int> col_indices;  // size nnz
    std::vector<double> values;    // size nnz

    int nnz() const { return static_cast<int>(col_indices.size()); }

    bool operator==(const CsrMatrix&) const = default;
};

// Builds canonical CSR from coordinate triples. Duplicate (row, col)
// pairs are rejected rather than summed.
CsrMatrix csr_from_triples(int n_rows, int n_cols, std::vector<Triplet> triples);

// y = A x, accumulated per row in ascending column order. The result is
// bitwise independent of the worker count.
std::vector<double> spmv_csr(const CsrMatrix& a, const std::vector<double>& x,
                             int workers = 1);

} // namespace hec
