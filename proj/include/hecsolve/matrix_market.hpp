#pragma once

#include <string>

#include "hecsolve/csr.hpp"

namespace hec {

// Reads a MatrixMarket coordinate file (real, general or symmetric;
// symmetric storage is expanded). File indices are 1-based; the result is
// canonical 0-based CSR. Malformed headers, out-of-range indices, and
// duplicate entries are errors.
CsrMatrix read_matrix_market(const std::string& path);

// Writes coordinate/real/general with 17 significant digits, so a
// write-then-read round trip reproduces the matrix exactly.
void write_matrix_market(const CsrMatrix& a, const std::string& path);

} // namespace hec
