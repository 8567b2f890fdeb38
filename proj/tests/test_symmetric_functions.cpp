#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "zasym/schur.hpp"
#include "zasym/ssyt.hpp"

using namespace zasym;

TEST_CASE("ssyt enumeration") {
    REQUIRE(enumerate_ssyt(partition({2, 1}), 3).size() == 8);
    REQUIRE(enumerate_ssyt(partition({1}), 3).size() == 3);
    REQUIRE(enumerate_ssyt(partition({1, 1, 1}), 2).empty());
    REQUIRE(enumerate_ssyt(partition({}), 4).size() == 1);

    SECTION("rows weakly increase, columns strictly increase") {
        for (const ssyt& t : enumerate_ssyt(partition({3, 2}), 3)) {
            for (const auto& row : t.rows)
                for (std::size_t j = 1; j < row.size(); ++j)
                    REQUIRE(row[j - 1] <= row[j]);
            for (std::size_t j = 0; j < t.rows[1].size(); ++j)
                REQUIRE(t.rows[0][j] < t.rows[1][j]);
        }
    }

    SECTION("enumeration cap") {
        REQUIRE_THROWS_AS(enumerate_ssyt(partition({2, 1}), 3, 5), enumeration_too_large);
    }
}

TEST_CASE("hook content dimension") {
    REQUIRE(dim_hook_content(partition({2, 1}), 2) == 2);
    REQUIRE(dim_hook_content(partition({3}), 2) == 4);
    REQUIRE(dim_hook_content(partition({}), 5) == 1);
    REQUIRE_THROWS_AS(dim_hook_content(partition({1, 1, 1}), 2), length_exceeds_n);
}

TEST_CASE("dimension equals the tableau count up to weight 8") {
    for (int w = 0; w <= 8; ++w)
        for (const partition& lam : enumerate_partitions(w))
            for (int n = lam.length(); n <= 5; ++n) {
                long long count = 0;
                for_each_ssyt(lam, n, [&](const ssyt&) { ++count; });
                REQUIRE(dim_hook_content(lam, n) == count);
            }
}

TEST_CASE("schur_truncated small shapes") {
    const truncated_multi_poly s1 = schur_truncated(partition({1}), 2, 4);
    truncated_multi_poly expected(2, 4);
    expected.add_term({1, 0}, 1);
    expected.add_term({0, 1}, 1);
    REQUIRE(s1 == expected);

    const truncated_multi_poly s11 = schur_truncated(partition({1, 1}), 2, 4);
    truncated_multi_poly e11(2, 4);
    e11.add_term({1, 1}, 1);
    REQUIRE(s11 == e11);

    const truncated_multi_poly s2 = schur_truncated(partition({2}), 2, 4);
    truncated_multi_poly e2(2, 4);
    e2.add_term({2, 0}, 1);
    e2.add_term({1, 1}, 1);
    e2.add_term({0, 2}, 1);
    REQUIRE(s2 == e2);

    REQUIRE(schur_truncated(partition({1, 1, 1}), 2, 8).is_zero());
    REQUIRE(schur_truncated(partition({3}), 2, 2).is_zero()); // beyond the degree cap
}

TEST_CASE("schur_truncated is homogeneous and symmetric") {
    for (int w = 0; w <= 6; ++w)
        for (const partition& lam : enumerate_partitions(w)) {
            if (lam.length() > 3)
                continue;
            const truncated_multi_poly s = schur_truncated(lam, 3, 6);
            for (const auto& [exps, coeff] : s.terms())
                REQUIRE(truncated_multi_poly::total_degree(exps) == lam.weight());
            REQUIRE(s.with_swapped_vars(0, 1) == s);
            REQUIRE(s.with_swapped_vars(1, 2) == s);
        }
}

TEST_CASE("bialternant evaluation") {
    REQUIRE(schur_bialternant_eval(partition({1}), {bigint(2), bigint(3)}) == 5);
    REQUIRE(schur_bialternant_eval(partition({}), {bigint(4), bigint(7), bigint(-2)}) == 1);
    REQUIRE_THROWS_AS(schur_bialternant_eval(partition({1}), {bigint(3), bigint(3)}),
                      repeated_point);

    SECTION("agrees with the tableau sum at random distinct integer points") {
        std::mt19937_64 rng(20240811);
        std::uniform_int_distribution<int> draw(-9, 9);
        for (int w = 0; w <= 8; ++w)
            for (const partition& lam : enumerate_partitions(w))
                for (int n = std::max(1, lam.length()); n <= 4; ++n) {
                    const truncated_multi_poly s =
                        schur_truncated(lam, n, static_cast<int>(lam.weight()));
                    for (int trial = 0; trial < 5; ++trial) {
                        std::set<int> chosen;
                        while (static_cast<int>(chosen.size()) < n)
                            chosen.insert(draw(rng));
                        std::vector<bigint> points(chosen.begin(), chosen.end());
                        REQUIRE(schur_bialternant_eval(lam, points) == s.eval(points));
                    }
                }
    }
}

TEST_CASE("principal specialization") {
    REQUIRE(principal_specialization(partition({1}), 2) == laurent_poly::bracket(2));
    const laurent_poly ps21 = principal_specialization(partition({2, 1}), 2);
    REQUIRE(ps21 == laurent_poly::bracket(2).shifted(1)); // q + q^2
    REQUIRE(principal_specialization(partition({}), 3) == laurent_poly::one());

    SECTION("closed form equals the substitution oracle up to weight 8") {
        for (int w = 0; w <= 8; ++w)
            for (const partition& lam : enumerate_partitions(w))
                for (int n = lam.length(); n <= 5; ++n) {
                    std::vector<int> exps(n);
                    for (int i = 0; i < n; ++i)
                        exps[i] = i;
                    REQUIRE(principal_specialization(lam, n) ==
                            specialization_oracle(lam, exps));
                }
    }

    SECTION("value at q = 1 is the dimension") {
        for (int w = 0; w <= 6; ++w)
            for (const partition& lam : enumerate_partitions(w))
                for (int n = lam.length(); n <= 4; ++n)
                    REQUIRE(principal_specialization(lam, n).eval_at_one() ==
                            dim_hook_content(lam, n));
    }
}

TEST_CASE("stepped specialization") {
    laurent_poly expected = laurent_poly::monomial(-1, 1) + laurent_poly::monomial(1, 1);
    REQUIRE(stepped_specialization(partition({1}), -1, 2) == expected);
    REQUIRE(stepped_specialization(partition({1, 1}), -1, 2) == laurent_poly::one());
    laurent_poly e2 = laurent_poly::monomial(-2, 1) + laurent_poly::one() +
                      laurent_poly::monomial(2, 1);
    REQUIRE(stepped_specialization(partition({2}), -1, 2) == e2);

    SECTION("closed form equals the tableau route up to weight 8") {
        for (int w = 0; w <= 8; ++w)
            for (const partition& lam : enumerate_partitions(w))
                for (int count = lam.length(); count <= 5; ++count)
                    for (int start : {-count, 1 - count, 0, 2})
                        REQUIRE(stepped_specialization(lam, start, count) ==
                                stepped_specialization_ssyt(lam, start, count));
    }
}
