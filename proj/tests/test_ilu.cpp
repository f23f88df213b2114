#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hecsolve/errors.hpp"
#include "hecsolve/ilu.hpp"
#include "test_helpers.hpp"

using namespace hec;

namespace {

CsrMatrix tridiag(int n) {
    std::vector<Triplet> trips;
    for (int i = 0; i < n; ++i) {
        if (i > 0) trips.push_back({i, i - 1, -1.0});
        trips.push_back({i, i, 2.0});
        if (i + 1 < n) trips.push_back({i, i + 1, -1.0});
    }
    return csr_from_triples(n, n, std::move(trips));
}

// Dense first row and column plus the diagonal.
CsrMatrix arrow4() {
    std::vector<Triplet> trips;
    const int n = 4;
    for (int j = 0; j < n; ++j) trips.push_back({0, j, j == 0 ? 10.0 : 1.0});
    for (int i = 1; i < n; ++i) {
        trips.push_back({i, 0, 1.0});
        trips.push_back({i, i, 10.0});
    }
    return csr_from_triples(n, n, std::move(trips));
}

// Structural checks shared by every factorization result.
void check_factor_shape(const IluFactors& f) {
    REQUIRE(f.l.n_rows == f.n);
    REQUIRE(f.u.n_rows == f.n);
    for (int i = 0; i < f.n; ++i) {
        const int ls = f.l.row_offsets[i];
        const int le = f.l.row_offsets[i + 1];
        REQUIRE(le > ls);
        CHECK(f.l.col_indices[le - 1] == i);
        CHECK(f.l.values[le - 1] == 1.0);
        for (int k = ls; k + 1 < le; ++k) CHECK(f.l.col_indices[k] < i);

        const int us = f.u.row_offsets[i];
        const int ue = f.u.row_offsets[i + 1];
        REQUIRE(ue > us);
        CHECK(f.u.col_indices[us] == i);
        CHECK(f.u.values[us] != 0.0);
        for (int k = us + 1; k < ue; ++k) CHECK(f.u.col_indices[k] > i);
    }
}

// max |(A - L U)[i,j]| over the pattern of a (dense product oracle).
double pattern_residual(const CsrMatrix& a, const IluFactors& f) {
    const int n = a.n_rows;
    const std::vector<double> dl = test::csr_to_dense(f.l);
    const std::vector<double> du = test::csr_to_dense(f.u);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k) {
            const int j = a.col_indices[k];
            double prod = 0.0;
            for (int t = 0; t < n; ++t) prod += dl[i * n + t] * du[t * n + j];
            worst = std::max(worst, std::fabs(a.values[k] - prod));
        }
    }
    return worst;
}

// Splits a combined dense LU into the library's factor layout for
// comparisons against the incomplete variants run with unlimited fill.
double max_diff_vs_dense_lu(const CsrMatrix& a, const IluFactors& f) {
    const int n = a.n_rows;
    const std::vector<double> lu = test::dense_lu(test::csr_to_dense(a), n);
    const std::vector<double> dl = test::csr_to_dense(f.l);
    const std::vector<double> du = test::csr_to_dense(f.u);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double want = i == j ? 1.0 : (i > j ? lu[i * n + j] : 0.0);
            worst = std::max(worst, std::fabs(dl[i * n + j] - want));
            const double uwant = i <= j ? lu[i * n + j] : 0.0;
            worst = std::max(worst, std::fabs(du[i * n + j] - uwant));
        }
    }
    return worst;
}

} // namespace

TEST_CASE("ilu0 on tridiagonal equals the hand LU") {
    const IluFactors f = ilu0(tridiag(3));
    check_factor_shape(f);
    // u diag [2, 3/2, 4/3], l subdiag [-1/2, -2/3].
    CHECK(std::fabs(f.u.values[f.u.row_offsets[0]] - 2.0) <= 1e-14);
    CHECK(std::fabs(f.u.values[f.u.row_offsets[1]] - 1.5) <= 1e-14);
    CHECK(std::fabs(f.u.values[f.u.row_offsets[2]] - 4.0 / 3.0) <= 1e-14);
    CHECK(std::fabs(f.l.values[f.l.row_offsets[1]] + 0.5) <= 1e-14);
    CHECK(std::fabs(f.l.values[f.l.row_offsets[2]] + 2.0 / 3.0) <= 1e-14);
    CHECK(pattern_residual(tridiag(3), f) <= 1e-14);
}

TEST_CASE("ilu0 on a diagonal matrix gives identity L") {
    const CsrMatrix d = csr_from_triples(3, 3, {{0, 0, 4.0}, {1, 1, -2.0}, {2, 2, 7.0}});
    const IluFactors f = ilu0(d);
    check_factor_shape(f);
    CHECK(f.u == d);
    CHECK(f.l.nnz() == 3);
}

TEST_CASE("ilu0 pattern residual vanishes on random matrices") {
    std::mt19937 rng(19);
    for (int rep = 0; rep < 15; ++rep) {
        const CsrMatrix a = test::random_diag_dominant(80, 0.15, rng);
        const IluFactors f = ilu0(a);
        check_factor_shape(f);
        CHECK(pattern_residual(a, f) <= 1e-12);
    }
}

TEST_CASE("ilu0 error reporting") {
    CHECK_THROWS_AS(ilu0(csr_from_triples(2, 3, {{0, 0, 1.0}})), std::invalid_argument);

    // Structurally missing diagonal in row 1.
    const CsrMatrix missing = csr_from_triples(2, 2, {{0, 0, 1.0}, {1, 0, 1.0}});
    try {
        ilu0(missing);
        FAIL("expected ZeroPivotError");
    } catch (const ZeroPivotError& e) {
        CHECK(e.row() == 1);
        CHECK(e.block() == -1);
    }

    // Numerically zero pivot: elimination makes row 1's diagonal 0.
    const CsrMatrix singular =
        csr_from_triples(2, 2, {{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0}, {1, 1, 1.0}});
    CHECK_THROWS_AS(ilu0(singular), ZeroPivotError);
}

TEST_CASE("ilu_k(a, 0) is exactly ilu0(a)") {
    std::mt19937 rng(29);
    for (int rep = 0; rep < 10; ++rep) {
        const CsrMatrix a = test::random_diag_dominant(60, 0.1, rng);
        const IluFactors f0 = ilu0(a);
        const IluFactors fk = ilu_k(a, 0);
        CHECK(fk.l == f0.l);
        CHECK(fk.u == f0.u);
    }
}

TEST_CASE("ilu_k(arrow, 1) fills the dense pattern and matches LU") {
    const CsrMatrix a = arrow4();
    const IluFactors f = ilu_k(a, 1);
    check_factor_shape(f);
    // Every (i,j) with i,j >= 1 receives level-1 fill through column 0, so
    // the pattern is dense and the factorization is exact.
    CHECK(f.l.nnz() + f.u.nnz() - f.n == f.n * f.n);
    CHECK(max_diff_vs_dense_lu(a, f) <= 1e-12);
    // k=0 must keep the original arrow pattern instead.
    const IluFactors f0 = ilu_k(a, 0);
    int strict_fill = 0;
    const auto orig = test::pattern_of(a);
    for (const auto& [i, j] : test::pattern_of(f0.l))
        if (i != j && !orig.count({i, j})) ++strict_fill;
    for (const auto& [i, j] : test::pattern_of(f0.u))
        if (i != j && !orig.count({i, j})) ++strict_fill;
    CHECK(strict_fill == 0);
}

TEST_CASE("ilu_k with unlimited fill reproduces the dense LU") {
    std::mt19937 rng(31);
    const CsrMatrix a = test::random_diag_dominant(25, 0.4, rng);
    const IluFactors f = ilu_k(a, a.n_rows);
    CHECK(max_diff_vs_dense_lu(a, f) <= 1e-12);
}

TEST_CASE("ilu_k patterns grow monotonically in k") {
    std::mt19937 rng(37);
    for (int rep = 0; rep < 5; ++rep) {
        const CsrMatrix a = test::random_diag_dominant(40, 0.08, rng);
        auto prev_l = test::pattern_of(ilu_k(a, 0).l);
        auto prev_u = test::pattern_of(ilu_k(a, 0).u);
        for (int k = 1; k <= 3; ++k) {
            const IluFactors f = ilu_k(a, k);
            const auto cur_l = test::pattern_of(f.l);
            const auto cur_u = test::pattern_of(f.u);
            CHECK(std::includes(cur_l.begin(), cur_l.end(), prev_l.begin(), prev_l.end()));
            CHECK(std::includes(cur_u.begin(), cur_u.end(), prev_u.begin(), prev_u.end()));
            prev_l = cur_l;
            prev_u = cur_u;
        }
    }
    CHECK_THROWS_AS(ilu_k(tridiag(3), -1), std::invalid_argument);
}

TEST_CASE("ilut with no dropping reproduces the dense LU") {
    std::mt19937 rng(41);
    for (int n : {5, 12, 20}) {
        const CsrMatrix a = test::random_diag_dominant(n, 1.0, rng);
        const IluFactors f = ilut(a, n, 0.0);
        check_factor_shape(f);
        CHECK(max_diff_vs_dense_lu(a, f) <= 1e-12);
    }
}

TEST_CASE("ilut on a diagonal matrix gives identity L for any parameters") {
    const CsrMatrix d = csr_from_triples(3, 3, {{0, 0, 4.0}, {1, 1, -2.0}, {2, 2, 7.0}});
    for (const auto& [p, tol] : std::vector<std::pair<int, double>>{{1, 0.0}, {2, 0.5}}) {
        const IluFactors f = ilut(d, p, tol);
        CHECK(f.u == d);
        CHECK(f.l.nnz() == 3);
    }
}

TEST_CASE("ilut(1, 0) on tridiagonal is bitwise ilu0") {
    const CsrMatrix a = tridiag(6);
    const IluFactors f0 = ilu0(a);
    const IluFactors ft = ilut(a, 1, 0.0);
    CHECK(ft.l == f0.l);
    CHECK(ft.u == f0.u);
}

TEST_CASE("ilut honors the per-triangle cap p") {
    std::mt19937 rng(43);
    const CsrMatrix a = test::random_diag_dominant(15, 1.0, rng);
    const IluFactors f = ilut(a, 3, 0.0);
    for (int i = 0; i < f.n; ++i) {
        CHECK(f.l.row_offsets[i + 1] - f.l.row_offsets[i] <= 3 + 1);
        CHECK(f.u.row_offsets[i + 1] - f.u.row_offsets[i] <= 3 + 1);
    }
}

TEST_CASE("ilut drops entries below tol times the row norm") {
    std::mt19937 rng(47);
    const CsrMatrix a = test::random_diag_dominant(30, 0.4, rng);
    const double tol = 0.3;
    const IluFactors f = ilut(a, a.n_rows, tol);
    std::vector<double> tau(a.n_rows);
    for (int i = 0; i < a.n_rows; ++i) {
        double nrm2 = 0.0;
        for (int k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k)
            nrm2 += a.values[k] * a.values[k];
        tau[i] = tol * std::sqrt(nrm2);
    }
    for (int i = 0; i < f.n; ++i) {
        for (int k = f.l.row_offsets[i]; k + 1 < f.l.row_offsets[i + 1]; ++k)
            CHECK(std::fabs(f.l.values[k]) >= tau[i]);
        for (int k = f.u.row_offsets[i] + 1; k < f.u.row_offsets[i + 1]; ++k)
            CHECK(std::fabs(f.u.values[k]) >= tau[i]);
    }
}

TEST_CASE("ilut error reporting") {
    CHECK_THROWS_AS(ilut(tridiag(3), 0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(ilut(tridiag(3), 2, -0.5), std::invalid_argument);

    // No structural diagonal and no fill reaching it: zero pivot.
    const CsrMatrix offdiag = csr_from_triples(2, 2, {{0, 1, 1.0}, {1, 0, 1.0}});
    try {
        ilut(offdiag, 2, 0.0);
        FAIL("expected ZeroPivotError");
    } catch (const ZeroPivotError& e) {
        CHECK(e.row() == 0);
    }
}
