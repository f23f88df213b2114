#pragma once

#include "hecsolve/csr.hpp"

namespace hec {

// 7-point Poisson stencil on an nx*ny*nz grid with Dirichlet truncation:
// diagonal 6, off-diagonal -1 toward each axis neighbor that exists.
// n = nx*ny*nz, nnz = 7n - 2(nx*ny + ny*nz + nx*nz).
CsrMatrix gen_poisson7(int nx, int ny, int nz);

} // namespace hec
