#include "hecsolve/triangular.hpp"

#include <stdexcept>
#include <string>

#include "hecsolve/errors.hpp"

namespace hec {

namespace {

void require_square(const CsrMatrix& m, const char* who) {
    if (m.n_rows != m.n_cols)
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

// Sorted lower-triangular rows end at the diagonal, sorted upper rows
// start there.
void check_lower(const CsrMatrix& l) {
    for (int i = 0; i < l.n_rows; ++i) {
        int rs = l.row_offsets[i];
        int re = l.row_offsets[i + 1];
        if (re == rs || l.col_indices[re - 1] != i)
            throw std::invalid_argument("prepare_lower: row " + std::to_string(i) +
                                        " is not lower-triangular with a diagonal");
        if (l.values[re - 1] == 0.0) throw ZeroPivotError(i);
    }
}

void check_upper(const CsrMatrix& u) {
    for (int i = 0; i < u.n_rows; ++i) {
        int rs = u.row_offsets[i];
        int re = u.row_offsets[i + 1];
        if (re == rs || u.col_indices[rs] != i)
            throw std::invalid_argument("prepare_upper: row " + std::to_string(i) +
                                        " is not upper-triangular with a diagonal");
        if (u.values[rs] == 0.0) throw ZeroPivotError(i);
    }
}

// Reverses row and column indices (i -> n-1-i). For an upper-triangular
// input the result is lower-triangular with the same row lengths.
CsrMatrix reverse_indices(const CsrMatrix& u) {
    const int n = u.n_rows;
    CsrMatrix out;
    out.n_rows = n;
    out.n_cols = u.n_cols;
    out.row_offsets.assign(n + 1, 0);
    out.col_indices.resize(u.nnz());
    out.values.resize(u.nnz());
    for (int i = 0; i < n; ++i)
        out.row_offsets[n - i] = u.row_offsets[i + 1] - u.row_offsets[i];
    for (int r = 0; r < n; ++r) out.row_offsets[r + 1] += out.row_offsets[r];
    for (int i = 0; i < n; ++i) {
        int dst = out.row_offsets[n - 1 - i];
        // Walking the source row backwards keeps the reversed columns ascending.
        for (int k = u.row_offsets[i + 1] - 1; k >= u.row_offsets[i]; --k, ++dst) {
            out.col_indices[dst] = n - 1 - u.col_indices[k];
            out.values[dst] = u.values[k];
        }
    }
    return out;
}

PreparedTriangular prepare_from_lower(const CsrMatrix& l, TriKind kind, bool reversed,
                                      WidthPolicy policy) {
    PreparedTriangular p;
    p.kind = kind;
    p.n = l.n_rows;
    p.reversal_applied = reversed;
    p.schedule = build_schedule(compute_levels(l));
    p.hec = hec_from_csr(reorder_matrix(l, p.schedule), /*triangular=*/true, policy);
    return p;
}

} // namespace

PreparedTriangular prepare_lower(const CsrMatrix& l, WidthPolicy policy) {
    require_square(l, "prepare_lower");
    check_lower(l);
    return prepare_from_lower(l, TriKind::lower, /*reversed=*/false, policy);
}

PreparedTriangular prepare_upper(const CsrMatrix& u, WidthPolicy policy) {
    require_square(u, "prepare_upper");
    check_upper(u);
    return prepare_from_lower(reverse_indices(u), TriKind::upper, /*reversed=*/true, policy);
}

std::vector<double> solve(const PreparedTriangular& p, const std::vector<double>& b, int workers) {
    const int n = p.n;
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve: dimension mismatch");
    if (workers < 1) workers = 1;

    const auto& perm = p.schedule.perm;
    const auto& starts = p.schedule.level_starts;
    const int nlev = p.schedule.nlev;
    const int width = p.hec.ell.width;
    const auto& ell_cols = p.hec.ell.col_indices;
    const auto& ell_vals = p.hec.ell.values;
    const auto& csr = p.hec.csr;
    const bool rev = p.reversal_applied;

    // Zero-initialized so padding slots read exactly 0.
    std::vector<double> bp(n), xp(n, 0.0), x(n);

#pragma omp parallel num_threads(workers)
    {
#pragma omp for schedule(static)
        for (int i = 0; i < n; ++i) bp[perm[rev ? n - 1 - i : i]] = b[i];

        for (int lev = 0; lev < nlev; ++lev) {
            const int rs = starts[lev];
            const int re = starts[lev + 1];
#pragma omp for schedule(static)
            for (int r = rs; r < re; ++r) {
                double acc = bp[r];
                for (int k = 0; k < width; ++k) {
                    std::size_t slot = static_cast<std::size_t>(k) * n + r;
                    acc -= ell_vals[slot] * xp[ell_cols[slot]];
                }
                int ce = csr.row_offsets[r + 1];
                for (int k = csr.row_offsets[r]; k < ce - 1; ++k)
                    acc -= csr.values[k] * xp[csr.col_indices[k]];
                xp[r] = acc / csr.values[ce - 1];
            }
            // The implicit barrier of the loop above separates levels.
        }

#pragma omp for schedule(static)
        for (int i = 0; i < n; ++i) x[i] = xp[perm[rev ? n - 1 - i : i]];
    }
    return x;
}

std::vector<double> serial_forward_solve(const CsrMatrix& l, const std::vector<double>& b) {
    require_square(l, "serial_forward_solve");
    if (static_cast<int>(b.size()) != l.n_rows)
        throw std::invalid_argument("serial_forward_solve: dimension mismatch");
    check_lower(l);

    std::vector<double> x(l.n_rows);
    for (int i = 0; i < l.n_rows; ++i) {
        double acc = b[i];
        int re = l.row_offsets[i + 1];
        for (int k = l.row_offsets[i]; k < re - 1; ++k)
            acc -= l.values[k] * x[l.col_indices[k]];
        x[i] = acc / l.values[re - 1];
    }
    return x;
}

std::vector<double> serial_backward_solve(const CsrMatrix& u, const std::vector<double>& b) {
    require_square(u, "serial_backward_solve");
    if (static_cast<int>(b.size()) != u.n_rows)
        throw std::invalid_argument("serial_backward_solve: dimension mismatch");
    check_upper(u);

    std::vector<double> x(u.n_rows);
    for (int i = u.n_rows - 1; i >= 0; --i) {
        double acc = b[i];
        int rs = u.row_offsets[i];
        for (int k = rs + 1; k < u.row_offsets[i + 1]; ++k)
            acc -= u.values[k] * x[u.col_indices[k]];
        x[i] = acc / u.values[rs];
    }
    return x;
}

} // namespace hec
