#include "hecsolve/ilu.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hecsolve/errors.hpp"

namespace hec {

namespace {

void require_square(const CsrMatrix& a, const char* who) {
    if (a.n_rows != a.n_cols)
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

// In-place IKJ elimination on a fixed pattern. f carries a's values on the
// original entries and zeros on fill slots; rows are sorted and each must
// contain its diagonal. dpos receives the diagonal index of every row.
void factor_on_pattern(CsrMatrix& f, std::vector<int>& dpos) {
    const int n = f.n_rows;
    dpos.assign(n, -1);
    // pos[j] >= row start identifies membership in the current row: indices
    // grow monotonically across rows, so stale values always fall below it.
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        const int rs = f.row_offsets[i];
        const int re = f.row_offsets[i + 1];
        for (int k = rs; k < re; ++k) pos[f.col_indices[k]] = k;
        if (pos[i] < rs) throw ZeroPivotError(i);
        dpos[i] = pos[i];
        for (int k = rs; k < re && f.col_indices[k] < i; ++k) {
            const int p = f.col_indices[k];
            const double m = f.values[k] / f.values[dpos[p]];
            f.values[k] = m;
            for (int t = dpos[p] + 1; t < f.row_offsets[p + 1]; ++t) {
                const int j = f.col_indices[t];
                if (pos[j] >= rs) f.values[pos[j]] -= m * f.values[t];
            }
        }
        if (f.values[dpos[i]] == 0.0) throw ZeroPivotError(i);
    }
}

// Splits a factored combined matrix into L (strict lower + unit diagonal)
// and U (diagonal first).
IluFactors split_factors(const CsrMatrix& f, const std::vector<int>& dpos) {
    const int n = f.n_rows;
    IluFactors out;
    out.n = n;
    out.l.n_rows = out.l.n_cols = n;
    out.u.n_rows = out.u.n_cols = n;
    out.l.row_offsets.assign(n + 1, 0);
    out.u.row_offsets.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        out.l.row_offsets[i + 1] = out.l.row_offsets[i] + (dpos[i] - f.row_offsets[i]) + 1;
        out.u.row_offsets[i + 1] = out.u.row_offsets[i] + (f.row_offsets[i + 1] - dpos[i]);
    }
    out.l.col_indices.reserve(out.l.row_offsets[n]);
    out.l.values.reserve(out.l.row_offsets[n]);
    out.u.col_indices.reserve(out.u.row_offsets[n]);
    out.u.values.reserve(out.u.row_offsets[n]);
    for (int i = 0; i < n; ++i) {
        for (int k = f.row_offsets[i]; k < dpos[i]; ++k) {
            out.l.col_indices.push_back(f.col_indices[k]);
            out.l.values.push_back(f.values[k]);
        }
        out.l.col_indices.push_back(i);
        out.l.values.push_back(1.0);
        for (int k = dpos[i]; k < f.row_offsets[i + 1]; ++k) {
            out.u.col_indices.push_back(f.col_indices[k]);
            out.u.values.push_back(f.values[k]);
        }
    }
    return out;
}

// Computes the level-k fill pattern and returns it as a CSR matrix holding
// a's values on the original entries and zeros on the fill.
CsrMatrix symbolic_pattern(const CsrMatrix& a, int k) {
    const int n = a.n_rows;
    // Strict-upper columns and fill levels of the finalized rows.
    std::vector<std::vector<int>> ucols(n);
    std::vector<std::vector<int>> ulev(n);
    std::vector<int> stamp(n, -1);
    std::vector<int> lw(n, 0);

    CsrMatrix f;
    f.n_rows = n;
    f.n_cols = n;
    f.row_offsets.assign(n + 1, 0);

    std::vector<int> wcols;
    for (int i = 0; i < n; ++i) {
        wcols.assign(a.col_indices.begin() + a.row_offsets[i],
                     a.col_indices.begin() + a.row_offsets[i + 1]);
        for (int c : wcols) {
            stamp[c] = i;
            lw[c] = 0;
        }
        // Pivot columns are consumed in ascending order; fill created at
        // column j > p is inserted past the cursor, so every level is final
        // when its column becomes the pivot. Candidates above k are never
        // added: anything they would generate also exceeds k.
        for (std::size_t idx = 0; idx < wcols.size() && wcols[idx] < i; ++idx) {
            const int p = wcols[idx];
            const int lp = lw[p];
            const auto& uc = ucols[p];
            const auto& ul = ulev[p];
            for (std::size_t t = 0; t < uc.size(); ++t) {
                const int j = uc[t];
                const int cand = lp + ul[t] + 1;
                if (cand > k) continue;
                if (stamp[j] == i) {
                    if (cand < lw[j]) lw[j] = cand;
                } else {
                    stamp[j] = i;
                    lw[j] = cand;
                    wcols.insert(std::lower_bound(wcols.begin() + idx + 1, wcols.end(), j), j);
                }
            }
        }
        for (int c : wcols) {
            if (c > i) {
                ucols[i].push_back(c);
                ulev[i].push_back(lw[c]);
            }
        }
        // Merge a's row (a subset of wcols, both sorted) to place values.
        int ak = a.row_offsets[i];
        const int ae = a.row_offsets[i + 1];
        for (int c : wcols) {
            f.col_indices.push_back(c);
            if (ak < ae && a.col_indices[ak] == c) {
                f.values.push_back(a.values[ak]);
                ++ak;
            } else {
                f.values.push_back(0.0);
            }
        }
        f.row_offsets[i + 1] = static_cast<int>(f.col_indices.size());
    }
    return f;
}

// Keeps the cap largest-magnitude entries; ties break toward the smaller
// column so the result is deterministic.
void keep_largest(std::vector<std::pair<int, double>>& part, int cap) {
    if (static_cast<int>(part.size()) <= cap) return;
    std::nth_element(part.begin(), part.begin() + cap, part.end(),
                     [](const std::pair<int, double>& a, const std::pair<int, double>& b) {
                         const double ma = std::fabs(a.second);
                         const double mb = std::fabs(b.second);
                         if (ma != mb) return ma > mb;
                         return a.first < b.first;
                     });
    part.resize(cap);
}

} // namespace

IluFactors ilu0(const CsrMatrix& a) {
    require_square(a, "ilu0");
    CsrMatrix f = a;
    std::vector<int> dpos;
    factor_on_pattern(f, dpos);
    return split_factors(f, dpos);
}

IluFactors ilu_k(const CsrMatrix& a, int k) {
    require_square(a, "ilu_k");
    if (k < 0) throw std::invalid_argument("ilu_k: k must be >= 0");
    CsrMatrix f = symbolic_pattern(a, k);
    std::vector<int> dpos;
    factor_on_pattern(f, dpos);
    return split_factors(f, dpos);
}

IluFactors ilut(const CsrMatrix& a, int p, double tol) {
    require_square(a, "ilut");
    if (p < 1) throw std::invalid_argument("ilut: p must be >= 1");
    if (tol < 0.0) throw std::invalid_argument("ilut: tol must be >= 0");

    const int n = a.n_rows;
    std::vector<std::vector<std::pair<int, double>>> lrows(n), urows(n);
    std::vector<double> udiag(n, 0.0);
    std::vector<double> w(n, 0.0);
    std::vector<int> stamp(n, -1);

    std::vector<int> wcols;
    std::vector<std::pair<int, double>> lpart, upart;
    for (int i = 0; i < n; ++i) {
        double nrm2 = 0.0;
        wcols.clear();
        for (int k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k) {
            const int c = a.col_indices[k];
            const double v = a.values[k];
            nrm2 += v * v;
            w[c] = v;
            stamp[c] = i;
            wcols.push_back(c);
        }
        const double tau = tol * std::sqrt(nrm2);

        for (std::size_t idx = 0; idx < wcols.size() && wcols[idx] < i; ++idx) {
            const int pcol = wcols[idx];
            const double m = w[pcol] / udiag[pcol];
            if (std::fabs(m) < tau) {
                // Dropped multiplier: the final pass below removes the zero.
                w[pcol] = 0.0;
                continue;
            }
            w[pcol] = m;
            for (const auto& [j, uv] : urows[pcol]) {
                if (stamp[j] == i) {
                    w[j] -= m * uv;
                } else {
                    stamp[j] = i;
                    w[j] = -m * uv;
                    wcols.insert(std::lower_bound(wcols.begin() + idx + 1, wcols.end(), j), j);
                }
            }
        }

        double dval = 0.0;
        lpart.clear();
        upart.clear();
        for (int c : wcols) {
            const double v = w[c];
            if (c == i) {
                dval = v;
            } else if (std::fabs(v) >= tau) {
                (c < i ? lpart : upart).emplace_back(c, v);
            }
        }
        if (dval == 0.0) throw ZeroPivotError(i);
        keep_largest(lpart, p);
        keep_largest(upart, p);
        std::sort(lpart.begin(), lpart.end());
        std::sort(upart.begin(), upart.end());
        lrows[i] = lpart;
        udiag[i] = dval;
        urows[i] = upart;
    }

    IluFactors out;
    out.n = n;
    out.l.n_rows = out.l.n_cols = n;
    out.u.n_rows = out.u.n_cols = n;
    out.l.row_offsets.assign(n + 1, 0);
    out.u.row_offsets.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        out.l.row_offsets[i + 1] = out.l.row_offsets[i] + static_cast<int>(lrows[i].size()) + 1;
        out.u.row_offsets[i + 1] = out.u.row_offsets[i] + static_cast<int>(urows[i].size()) + 1;
        for (const auto& [c, v] : lrows[i]) {
            out.l.col_indices.push_back(c);
            out.l.values.push_back(v);
        }
        out.l.col_indices.push_back(i);
        out.l.values.push_back(1.0);
        out.u.col_indices.push_back(i);
        out.u.values.push_back(udiag[i]);
        for (const auto& [c, v] : urows[i]) {
            out.u.col_indices.push_back(c);
            out.u.values.push_back(v);
        }
    }
    return out;
}

} // namespace hec
