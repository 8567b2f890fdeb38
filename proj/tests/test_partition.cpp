#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "zasym/partition.hpp"

using namespace zasym;

namespace {

/* Independent oracle: number of partitions of n into parts <= k, by the
 * classical recurrence. Partitions into at most L parts = partitions
 * with parts <= L, by conjugation. */
long long count_partitions_parts_at_most(int n, int k) {
    std::vector<std::vector<long long>> c(n + 1, std::vector<long long>(k + 1, 0));
    for (int j = 0; j <= k; ++j)
        c[0][j] = 1;
    for (int w = 1; w <= n; ++w)
        for (int j = 1; j <= k; ++j)
            c[w][j] = c[w][j - 1] + (w >= j ? c[w - j][j] : 0);
    return c[n][k];
}

} // namespace

TEST_CASE("make_partition normalizes and validates") {
    REQUIRE(partition({4, 2, 2, 1}).parts() == std::vector<int>{4, 2, 2, 1});
    REQUIRE(partition({}).empty());
    REQUIRE(partition({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
    REQUIRE(partition({0}).empty());
    REQUIRE_THROWS_AS(partition({2, 3}), not_weakly_decreasing);
    REQUIRE_THROWS_AS(partition({3, -1}), negative_part);
    REQUIRE(partition({4, 2, 2, 1}).weight() == 9);
    REQUIRE(partition({4, 2, 2, 1}).length() == 4);
}

TEST_CASE("conjugate") {
    REQUIRE(conjugate(partition({4, 2, 2, 1})) == partition({4, 3, 1, 1}));
    REQUIRE(conjugate(partition({})) == partition({}));
    REQUIRE(conjugate(partition({5, 3, 1})) == partition({3, 2, 2, 1, 1}));
}

TEST_CASE("conjugate is an involution up to weight 20") {
    for (int w = 0; w <= 20; ++w)
        for (const partition& lam : enumerate_partitions(w))
            REQUIRE(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("rank") {
    REQUIRE(rank(partition({4, 2, 2, 1})) == 2);
    REQUIRE(rank(partition({})) == 0);
    REQUIRE(rank(partition({1})) == 1);
}

TEST_CASE("Frobenius coordinates of the running example") {
    const frobenius_coords fc = frobenius(partition({4, 2, 2, 1}));
    REQUIRE(fc.alpha == std::vector<int>{3, 0});
    REQUIRE(fc.beta == std::vector<int>{3, 1});
    REQUIRE(fc.rank() == 2);
}

TEST_CASE("from_frobenius") {
    REQUIRE(from_frobenius(frobenius_coords({1}, {1})) == partition({2, 1}));
    REQUIRE(from_frobenius(frobenius_coords({}, {})) == partition({}));
    REQUIRE_THROWS_AS(frobenius_coords({1, 1}, {2, 1}), non_strict_coordinates);
    REQUIRE_THROWS_AS(frobenius_coords({2}, {}), length_mismatch);
}

TEST_CASE("Frobenius round trip up to weight 20") {
    for (int w = 0; w <= 20; ++w)
        for (const partition& lam : enumerate_partitions(w)) {
            const frobenius_coords fc = frobenius(lam);
            REQUIRE(from_frobenius(fc) == lam);
            REQUIRE(static_cast<long long>(fc.rank()) +
                        [&] {
                            long long s = 0;
                            for (int a : fc.alpha)
                                s += a;
                            for (int b : fc.beta)
                                s += b;
                            return s;
                        }() ==
                    lam.weight());
        }
}

TEST_CASE("add_scalar") {
    REQUIRE(add_scalar(1, partition({3, 1})) == partition({4, 2}));
    const partition p({5, 2});
    REQUIRE(add_scalar(0, p) == p);
    REQUIRE(add_scalar(2, partition({2, 0})) == partition({4}));
}

TEST_CASE("is_z_asymmetric") {
    REQUIRE(is_z_asymmetric(partition({3, 1, 1, 1}), 1));
    REQUIRE(is_z_asymmetric(partition({2, 2, 2}), 1));
    for (int z = -3; z <= 3; ++z)
        REQUIRE(is_z_asymmetric(partition({}), z));
    REQUIRE_FALSE(is_z_asymmetric(partition({4, 2, 2, 1}), 0));
}

TEST_CASE("cell statistics match the running example") {
    const auto stats = cell_stats_of(partition({4, 2, 2, 1}));
    std::vector<int> hooks, contents;
    for (const cell_stats& s : stats) {
        hooks.push_back(s.hook);
        contents.push_back(s.content);
    }
    REQUIRE(hooks == std::vector<int>{7, 5, 2, 1, 4, 2, 3, 1, 1});
    REQUIRE(contents == std::vector<int>{0, 1, 2, 3, -1, 0, -2, -1, -3});

    const auto single = cell_stats_of(partition({1}));
    REQUIRE(single.size() == 1);
    REQUIRE(single[0].hook == 1);
    REQUIRE(single[0].content == 0);
}

TEST_CASE("hook = arm + leg + 1 on every cell up to weight 16") {
    for (int w = 0; w <= 16; ++w)
        for (const partition& lam : enumerate_partitions(w))
            for (const cell_stats& s : cell_stats_of(lam)) {
                REQUIRE(s.hook == s.arm + s.leg + 1);
                REQUIRE(s.hook == lam.part(s.row) - s.row +
                                      conjugate(lam).part(s.col) - s.col + 1);
            }
}

TEST_CASE("conjugate partitions share their hook multiset up to weight 16") {
    for (int w = 0; w <= 16; ++w)
        for (const partition& lam : enumerate_partitions(w)) {
            std::multiset<int> h1, h2;
            for (const cell_stats& s : cell_stats_of(lam))
                h1.insert(s.hook);
            for (const cell_stats& s : cell_stats_of(conjugate(lam)))
                h2.insert(s.hook);
            REQUIRE(h1 == h2);
        }
}

TEST_CASE("k statistic") {
    REQUIRE(k_statistic(partition({2, 1})) == 1);
    REQUIRE(k_statistic(partition({})) == 0);
    REQUIRE(k_statistic(partition({4, 2, 2, 1})) == 9);
}

TEST_CASE("content sum") {
    REQUIRE(content_sum(partition({4, 2, 2, 1})) == -1);
    REQUIRE(content_sum(partition({})) == 0);
    for (int n = 1; n <= 6; ++n)
        REQUIRE(content_sum(partition({n})) == static_cast<long long>(n) * (n - 1) / 2);
}

TEST_CASE("content sum equals k(conjugate) - k up to weight 16") {
    for (int w = 0; w <= 16; ++w)
        for (const partition& lam : enumerate_partitions(w))
            REQUIRE(content_sum(lam) ==
                    k_statistic(conjugate(lam)) - k_statistic(lam));
}

TEST_CASE("enumerate_partitions") {
    REQUIRE(enumerate_partitions(4).size() == 5);
    REQUIRE(enumerate_partitions(0) == std::vector<partition>{partition({})});
    REQUIRE(enumerate_partitions(6, 2) ==
            std::vector<partition>{partition({6}), partition({5, 1}), partition({4, 2}),
                                   partition({3, 3})});

    SECTION("counts agree with the recurrence oracle") {
        for (int w = 0; w <= 18; ++w) {
            REQUIRE(static_cast<long long>(enumerate_partitions(w).size()) ==
                    count_partitions_parts_at_most(w, w == 0 ? 1 : w));
            for (int len = 1; len <= 5; ++len)
                REQUIRE(static_cast<long long>(enumerate_partitions(w, len).size()) ==
                        count_partitions_parts_at_most(w, len));
        }
    }

    SECTION("decreasing lexicographic order") {
        for (int w = 0; w <= 12; ++w) {
            const auto all = enumerate_partitions(w);
            for (std::size_t i = 1; i < all.size(); ++i)
                REQUIRE(all[i].parts() < all[i - 1].parts());
        }
    }
}

TEST_CASE("enumerate_z_asymmetric") {
    REQUIRE(enumerate_z_asymmetric(6, 1) ==
            std::vector<partition>{partition({3, 1, 1, 1}), partition({2, 2, 2})});
    for (int z = -2; z <= 3; ++z)
        REQUIRE(enumerate_z_asymmetric(0, z) == std::vector<partition>{partition({})});

    SECTION("generator equals the brute filter") {
        for (int w = 0; w <= 12; ++w)
            for (int z = -2; z <= 3; ++z) {
                std::vector<partition> filtered;
                for (const partition& lam : enumerate_partitions(w))
                    if (is_z_asymmetric(lam, z))
                        filtered.push_back(lam);
                REQUIRE(enumerate_z_asymmetric(w, z) == filtered);
            }
    }
}

TEST_CASE("enumerate_strict_partitions") {
    REQUIRE(enumerate_strict_partitions(3, 2) ==
            std::vector<std::vector<int>>{{3, 0}, {2, 1}});
    REQUIRE(enumerate_strict_partitions(0, 0) == std::vector<std::vector<int>>{{}});
    REQUIRE(enumerate_strict_partitions(1, 2) == std::vector<std::vector<int>>{{1, 0}});
    REQUIRE(enumerate_strict_partitions(0, 2).empty());
    REQUIRE(enumerate_strict_partitions(4, 2, 1) ==
            std::vector<std::vector<int>>{{3, 1}});
}
