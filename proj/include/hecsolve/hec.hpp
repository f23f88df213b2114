#pragma once

#include <vector>

#include "hecsolve/csr.hpp"

namespace hec {

// ELL block of a hybrid matrix: a fixed number of slots per row, stored
// column-major so slot k of row i lives at k * n_rows + i. Unused slots
// are padded with value 0 and the row's own column index, which makes
// them inert in products and substitution sweeps.
struct EllMatrix {
    int n_rows = 0;
    int width = 0;
    std::vector<int> col_indices;  // n_rows * width
    std::vector<double> values;    // n_rows * width

    bool operator==(const EllMatrix&) const = default;
};

// How wide the ELL block of a hybrid matrix should be. `automatic` picks
// the median per-row count of ELL-eligible entries (row nnz minus the
// reserved diagonal in triangular mode), which keeps padding bounded.
struct WidthPolicy {
    enum class Mode { fixed, automatic };

    Mode mode = Mode::automatic;
    int width = 0;

    static WidthPolicy fixed(int w) { return {Mode::fixed, w}; }
    static WidthPolicy automatic() { return {}; }
};

// Hybrid ELL + CSR storage. Logical row i is the ELL row followed by the
// CSR row, with column indices ascending across the concatenation. When
// built from a (lower) triangular matrix, every CSR row is non-empty and
// its last entry is the diagonal.
struct HecMatrix {
    int n_rows = 0;
    int n_cols = 0;
    EllMatrix ell;
    CsrMatrix csr;

    bool operator==(const HecMatrix&) const = default;
};

HecMatrix hec_from_csr(const CsrMatrix& a, bool triangular, WidthPolicy policy = {});

// Same contract as spmv_csr; padding contributes exactly zero and the
// result is bitwise equal to spmv_csr on the source matrix.
std::vector<double> spmv_hec(const HecMatrix& a, const std::vector<double>& x,
                             int workers = 1);

// Flattens back to canonical CSR; inverse of hec_from_csr. ELL slots
// holding (own column, zero value) are treated as padding and skipped.
CsrMatrix csr_from_hec(const HecMatrix& h);

} // namespace hec
