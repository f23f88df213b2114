#include "hecsolve/precond.hpp"

#include <stdexcept>

#include "hecsolve/errors.hpp"

namespace hec {

namespace {

// Principal submatrix of a on the sorted row set `rows`. local_of/stamp are
// scratch of size n; entries whose column lies outside the set are dropped.
CsrMatrix extract_block(const CsrMatrix& a, const std::vector<int>& rows, int pid,
                        std::vector<int>& local_of, std::vector<int>& stamp) {
    const int bn = static_cast<int>(rows.size());
    for (int li = 0; li < bn; ++li) {
        local_of[rows[li]] = li;
        stamp[rows[li]] = pid;
    }
    CsrMatrix b;
    b.n_rows = b.n_cols = bn;
    b.row_offsets.assign(bn + 1, 0);
    for (int li = 0; li < bn; ++li) {
        const int g = rows[li];
        for (int k = a.row_offsets[g]; k < a.row_offsets[g + 1]; ++k) {
            const int c = a.col_indices[k];
            if (stamp[c] != pid) continue;
            b.col_indices.push_back(local_of[c]);
            b.values.push_back(a.values[k]);
        }
        b.row_offsets[li + 1] = static_cast<int>(b.col_indices.size());
    }
    return b;
}

// Concatenates the per-block L or U factors into one block-diagonal matrix,
// shifting each block's indices by its offset: diag(L_1, ..., L_s).
CsrMatrix assemble_block_diagonal(const std::vector<IluFactors>& factors,
                                  const std::vector<int>& offsets, bool lower) {
    const int total = offsets.back();
    int nnz = 0;
    for (const auto& f : factors) nnz += lower ? f.l.nnz() : f.u.nnz();
    CsrMatrix out;
    out.n_rows = out.n_cols = total;
    out.row_offsets.reserve(total + 1);
    out.row_offsets.push_back(0);
    out.col_indices.reserve(nnz);
    out.values.reserve(nnz);
    for (std::size_t p = 0; p < factors.size(); ++p) {
        const CsrMatrix& b = lower ? factors[p].l : factors[p].u;
        const int off = offsets[p];
        for (int li = 0; li < b.n_rows; ++li) {
            for (int k = b.row_offsets[li]; k < b.row_offsets[li + 1]; ++k) {
                out.col_indices.push_back(b.col_indices[k] + off);
                out.values.push_back(b.values[k]);
            }
            out.row_offsets.push_back(static_cast<int>(out.col_indices.size()));
        }
    }
    return out;
}

} // namespace

const char* precond_kind_name(PrecondKind kind) {
    switch (kind) {
        case PrecondKind::bilu0: return "bilu0";
        case PrecondKind::bilut: return "bilut";
        case PrecondKind::ras: return "ras";
    }
    return "unknown";
}

BlockPreconditioner build_preconditioner(const CsrMatrix& a, PrecondKind kind, int blocks,
                                         int overlap, int ilut_p, double ilut_tol,
                                         WidthPolicy policy) {
    if (a.n_rows != a.n_cols)
        throw std::invalid_argument("build_preconditioner: matrix must be square");
    if (kind != PrecondKind::ras && overlap != 0)
        throw std::invalid_argument("build_preconditioner: overlap requires kind=ras");

    BlockPreconditioner m;
    m.kind = kind;
    m.n = a.n_rows;
    m.overlap = overlap;
    m.partition = partition_graph(a, blocks);
    m.extended_parts = extend_overlap(a, m.partition, overlap);

    const int s = m.partition.n_parts;
    m.offsets.assign(s + 1, 0);
    for (int p = 0; p < s; ++p)
        m.offsets[p + 1] = m.offsets[p] + static_cast<int>(m.extended_parts[p].size());

    m.restriction.resize(s);
    m.block_factors.resize(s);
    std::vector<int> local_of(m.n, -1), stamp(m.n, -1);
    for (int p = 0; p < s; ++p) {
        const auto& rows = m.extended_parts[p];
        m.restriction[p].resize(rows.size());
        for (std::size_t li = 0; li < rows.size(); ++li)
            m.restriction[p][li] = m.partition.part_of[rows[li]] == p ? 1 : 0;

        const CsrMatrix block = extract_block(a, rows, p, local_of, stamp);
        try {
            m.block_factors[p] =
                kind == PrecondKind::bilut ? ilut(block, ilut_p, ilut_tol) : ilu0(block);
        } catch (const ZeroPivotError& e) {
            throw ZeroPivotError(e.row(), p);
        }
    }

    m.prepared_l =
        prepare_lower(assemble_block_diagonal(m.block_factors, m.offsets, true), policy);
    m.prepared_u =
        prepare_upper(assemble_block_diagonal(m.block_factors, m.offsets, false), policy);
    return m;
}

std::vector<double> apply(const BlockPreconditioner& m, const std::vector<double>& r,
                          int workers) {
    if (static_cast<int>(r.size()) != m.n)
        throw std::invalid_argument("apply: dimension mismatch");

    const int s = m.partition.n_parts;
    std::vector<double> rhat(m.offsets[s]);
    for (int p = 0; p < s; ++p) {
        const auto& rows = m.extended_parts[p];
        const int off = m.offsets[p];
        for (std::size_t li = 0; li < rows.size(); ++li) rhat[off + li] = r[rows[li]];
    }

    const std::vector<double> y = solve(m.prepared_l, rhat, workers);
    const std::vector<double> z = solve(m.prepared_u, y, workers);

    // Restricted scatter: each global row is owned by exactly one part.
    std::vector<double> x(m.n);
    for (int p = 0; p < s; ++p) {
        const auto& rows = m.extended_parts[p];
        const auto& own = m.restriction[p];
        const int off = m.offsets[p];
        for (std::size_t li = 0; li < rows.size(); ++li)
            if (own[li]) x[rows[li]] = z[off + li];
    }
    return x;
}

} // namespace hec
