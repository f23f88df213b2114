#pragma once

#include <vector>

#include "hecsolve/csr.hpp"
#include "hecsolve/hec.hpp"
#include "hecsolve/ilu.hpp"
#include "hecsolve/partition.hpp"
#include "hecsolve/triangular.hpp"

namespace hec {

enum class PrecondKind { bilu0, bilut, ras };

const char* precond_kind_name(PrecondKind kind);

// Block-diagonal ILU preconditioner over a graph partition. The per-block
// factors are assembled into one block-diagonal L and U in the concatenated
// local ordering and prepared once, so independent blocks share levels.
struct BlockPreconditioner {
    PrecondKind kind = PrecondKind::bilu0;
    int n = 0;
    int overlap = 0;
    Partition partition;
    std::vector<std::vector<int>> extended_parts;  // == partition.parts when overlap 0
    std::vector<IluFactors> block_factors;
    std::vector<std::vector<char>> restriction;    // per part: local row owned by this part
    std::vector<int> offsets;                      // part start in concatenated order
    PreparedTriangular prepared_l;
    PreparedTriangular prepared_u;
};

// Partitions a into `blocks` parts, extends by `overlap` (ras only), factors
// the principal submatrix of each extended part (ilu0 for bilu0/ras, ilut
// for bilut), and prepares the assembled factors for parallel solves.
BlockPreconditioner build_preconditioner(const CsrMatrix& a, PrecondKind kind, int blocks,
                                         int overlap, int ilut_p = 7, double ilut_tol = 0.1,
                                         WidthPolicy policy = {});

// Applies M^-1 r: gathers r into the concatenated block vectors (overlap
// rows receive copies), runs the two prepared triangular solves, and
// scatters each row back from its owning part only.
std::vector<double> apply(const BlockPreconditioner& m, const std::vector<double>& r,
                          int workers = 1);

} // namespace hec
