#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hecsolve/partition.hpp"
#include "test_helpers.hpp"

using namespace hec;

namespace {

// Path graph 0 - 1 - ... - (n-1) stored one-sided (upper neighbors only),
// so these tests also exercise the pattern symmetrization.
CsrMatrix path_matrix(int n) {
    std::vector<Triplet> trips;
    for (int i = 0; i < n; ++i) {
        trips.push_back({i, i, 2.0});
        if (i + 1 < n) trips.push_back({i, i + 1, -1.0});
    }
    return csr_from_triples(n, n, std::move(trips));
}

CsrMatrix diagonal_matrix(int n) {
    std::vector<Triplet> trips;
    for (int i = 0; i < n; ++i) trips.push_back({i, i, 1.0});
    return csr_from_triples(n, n, std::move(trips));
}

// Two disjoint triangles {0,1,2} and {3,4,5}.
CsrMatrix two_triangles() {
    std::vector<Triplet> trips;
    for (int base : {0, 3}) {
        for (int i = 0; i < 3; ++i) {
            trips.push_back({base + i, base + i, 3.0});
            trips.push_back({base + i, base + (i + 1) % 3, 1.0});
        }
    }
    return csr_from_triples(6, 6, std::move(trips));
}

void check_partition_invariants(const Partition& p) {
    REQUIRE(p.n_parts == static_cast<int>(p.parts.size()));
    REQUIRE(static_cast<int>(p.part_of.size()) == p.n);
    const int cap = (p.n + p.n_parts - 1) / p.n_parts;
    std::vector<int> seen(p.n, 0);
    for (int pid = 0; pid < p.n_parts; ++pid) {
        const auto& rows = p.parts[pid];
        CHECK(!rows.empty());
        CHECK(static_cast<int>(rows.size()) <= cap);
        CHECK(std::is_sorted(rows.begin(), rows.end()));
        for (int r : rows) {
            REQUIRE(r >= 0);
            REQUIRE(r < p.n);
            ++seen[r];
            CHECK(p.part_of[r] == pid);
        }
    }
    // Disjoint cover: every row appears exactly once.
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

} // namespace

TEST_CASE("symmetrized_adjacency mirrors one-sided entries without duplicates") {
    const CsrMatrix oneside = csr_from_triples(2, 2, {{0, 1, 1.0}});
    const auto adj = symmetrized_adjacency(oneside);
    CHECK(adj[0] == std::vector<int>{1});
    CHECK(adj[1] == std::vector<int>{0});

    // Both directions present: still one neighbor each, self-loops dropped.
    const CsrMatrix both =
        csr_from_triples(2, 2, {{0, 0, 2.0}, {0, 1, 1.0}, {1, 0, 1.0}, {1, 1, 2.0}});
    const auto adj2 = symmetrized_adjacency(both);
    CHECK(adj2[0] == std::vector<int>{1});
    CHECK(adj2[1] == std::vector<int>{0});

    CHECK_THROWS_AS(symmetrized_adjacency(csr_from_triples(2, 3, {})), std::invalid_argument);
}

TEST_CASE("partition_graph with one part takes everything") {
    const Partition p = partition_graph(path_matrix(5), 1);
    check_partition_invariants(p);
    std::vector<int> all(5);
    std::iota(all.begin(), all.end(), 0);
    CHECK(p.parts[0] == all);
}

TEST_CASE("partition_graph splits a path at the midpoint") {
    const Partition p = partition_graph(path_matrix(4), 2);
    check_partition_invariants(p);
    CHECK(p.parts[0] == std::vector<int>{0, 1});
    CHECK(p.parts[1] == std::vector<int>{2, 3});
}

TEST_CASE("partition_graph on a diagonal matrix yields singleton parts") {
    const Partition p = partition_graph(diagonal_matrix(4), 4);
    check_partition_invariants(p);
    for (int i = 0; i < 4; ++i) CHECK(p.parts[i] == std::vector<int>{i});
}

TEST_CASE("partition_graph reseeds across disconnected components") {
    const CsrMatrix a = two_triangles();
    // One part must swallow both components via reseeding.
    const Partition whole = partition_graph(a, 1);
    check_partition_invariants(whole);
    CHECK(whole.parts[0].size() == 6);

    // Two parts align with the components.
    const Partition split = partition_graph(a, 2);
    check_partition_invariants(split);
    CHECK(split.parts[0] == std::vector<int>{0, 1, 2});
    CHECK(split.parts[1] == std::vector<int>{3, 4, 5});
}

TEST_CASE("partition_graph argument validation") {
    const CsrMatrix a = path_matrix(3);
    CHECK_THROWS_AS(partition_graph(a, 0), std::invalid_argument);
    CHECK_THROWS_AS(partition_graph(a, -2), std::invalid_argument);
    CHECK_THROWS_AS(partition_graph(a, 4), std::invalid_argument);
    CHECK_THROWS_AS(partition_graph(csr_from_triples(2, 3, {}), 1), std::invalid_argument);
}

TEST_CASE("partition_graph invariants hold on random matrices") {
    std::mt19937 rng(53);
    for (const auto& [n, s] : std::vector<std::pair<int, int>>{
             {5, 4}, {7, 7}, {30, 4}, {64, 16}, {100, 7}, {97, 13}}) {
        const CsrMatrix a = test::random_diag_dominant(n, 0.05, rng);
        check_partition_invariants(partition_graph(a, s));
    }
}

TEST_CASE("extend_overlap zero rounds returns the parts unchanged") {
    const CsrMatrix a = path_matrix(6);
    const Partition p = partition_graph(a, 3);
    CHECK(extend_overlap(a, p, 0) == p.parts);
}

TEST_CASE("extend_overlap grows a path partition by one hop") {
    const CsrMatrix a = path_matrix(4);
    const Partition p = partition_graph(a, 2);
    const auto ext = extend_overlap(a, p, 1);
    CHECK(ext[0] == std::vector<int>{0, 1, 2});
    CHECK(ext[1] == std::vector<int>{1, 2, 3});
}

TEST_CASE("extend_overlap saturates past the graph diameter") {
    const CsrMatrix a = path_matrix(6);
    const Partition p = partition_graph(a, 3);
    std::vector<int> all(6);
    std::iota(all.begin(), all.end(), 0);
    const auto sat = extend_overlap(a, p, 5);
    for (const auto& rows : sat) CHECK(rows == all);
    // Extra rounds past saturation change nothing.
    CHECK(extend_overlap(a, p, 7) == sat);

    // Components cap the growth: overlap never leaks across them.
    const CsrMatrix tri = two_triangles();
    const Partition q = partition_graph(tri, 2);
    const auto text = extend_overlap(tri, q, 4);
    CHECK(text[0] == std::vector<int>{0, 1, 2});
    CHECK(text[1] == std::vector<int>{3, 4, 5});
}

TEST_CASE("extend_overlap output contains the original part, sorted and unique") {
    std::mt19937 rng(59);
    const CsrMatrix a = test::random_diag_dominant(60, 0.04, rng);
    const Partition p = partition_graph(a, 5);
    for (int overlap : {1, 2, 3}) {
        const auto ext = extend_overlap(a, p, overlap);
        for (int pid = 0; pid < p.n_parts; ++pid) {
            const auto& rows = ext[pid];
            CHECK(std::is_sorted(rows.begin(), rows.end()));
            CHECK(std::adjacent_find(rows.begin(), rows.end()) == rows.end());
            CHECK(std::includes(rows.begin(), rows.end(), p.parts[pid].begin(),
                                p.parts[pid].end()));
        }
    }
}

TEST_CASE("extend_overlap argument validation") {
    const CsrMatrix a = path_matrix(4);
    const Partition p = partition_graph(a, 2);
    CHECK_THROWS_AS(extend_overlap(a, p, -1), std::invalid_argument);
    CHECK_THROWS_AS(extend_overlap(path_matrix(5), p, 1), std::invalid_argument);
}
