#pragma once

#include "hecsolve/csr.hpp"

namespace hec {

// Incomplete LU factors. l is lower triangular with an explicit unit
// diagonal (1.0, last entry of each row); u is upper triangular with its
// diagonal stored first.
struct IluFactors {
    CsrMatrix l;
    CsrMatrix u;
    int n = 0;
};

// ILU(0): IKJ elimination restricted to pattern(a). Throws ZeroPivotError
// on an absent or zero diagonal pivot; no pivoting.
IluFactors ilu0(const CsrMatrix& a);

// ILU(k): symbolic fill levels (original entries level 0, fill level
// min(lev_ip + lev_pj + 1), entries above k discarded), then the ilu0
// numeric kernel on the augmented pattern. ilu_k(a, 0) == ilu0(a).
IluFactors ilu_k(const CsrMatrix& a, int k);

// ILUT(p, tol): dual-threshold row factorization. Entries below
// tol * ||row_i(a)||_2 are dropped; at most p off-diagonals are kept per
// triangle per row; the diagonal is always kept.
IluFactors ilut(const CsrMatrix& a, int p, double tol);

} // namespace hec
