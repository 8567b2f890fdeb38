#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "zasym/content_sequence.hpp"

using namespace zasym;

TEST_CASE("content sequence of the running example") {
    // (3,0|3,1) = (4,2,2,1) has sequence (1,1,2,[2],1,1,1) on contents -3..3
    const partition lam = from_frobenius(frobenius_coords({3, 0}, {3, 1}));
    REQUIRE(lam == partition({4, 2, 2, 1}));
    const content_sequence x = content_sequence_of(lam);
    const std::map<int, int> expected{{-3, 1}, {-2, 1}, {-1, 2}, {0, 2},
                                      {1, 1},  {2, 1},  {3, 1}};
    REQUIRE(x.counts() == expected);
    REQUIRE(x.peak() == 2);
}

TEST_CASE("content sequence of the empty partition is all zero") {
    REQUIRE(content_sequence_of(partition({})).counts().empty());
    REQUIRE(content_sequence_of(partition({})).peak() == 0);
}

TEST_CASE("content counts of (5,3,1)") {
    const content_sequence x = content_sequence_of(partition({5, 3, 1}));
    REQUIRE(x.peak() == 2);
    REQUIRE(x.at(1) == 2);
    REQUIRE(x.at(-2) == 1);
    REQUIRE(x.at(4) == 1);
}

TEST_CASE("content sequence validation") {
    REQUIRE_THROWS_AS(content_sequence({{0, 1}, {2, 1}}), not_a_content_sequence);
    REQUIRE_THROWS_AS(content_sequence({{-1, 2}, {0, 1}}), not_a_content_sequence);
    // peak 2 but the value 1 never occurs on the right
    REQUIRE_THROWS_AS(content_sequence({{-1, 1}, {0, 2}, {1, 2}}), not_a_content_sequence);
    REQUIRE_THROWS_AS(content_sequence({{0, -1}}), not_a_content_sequence);
}

TEST_CASE("partition_from_content_sequence inverts the forward map") {
    REQUIRE(partition_from_content_sequence(content_sequence(
                {{-3, 1}, {-2, 1}, {-1, 2}, {0, 2}, {1, 1}, {2, 1}, {3, 1}})) ==
            partition({4, 2, 2, 1}));
    REQUIRE(partition_from_content_sequence(content_sequence{}) == partition({}));
    const content_sequence c({{-1, 1}, {0, 2}, {1, 1}, {2, 1}});
    const partition lam = partition_from_content_sequence(c);
    REQUIRE(content_sequence_of(lam) == c);
}

TEST_CASE("round trip partition <-> content sequence up to weight 16") {
    for (int w = 0; w <= 16; ++w)
        for (const partition& lam : enumerate_partitions(w)) {
            const content_sequence x = content_sequence_of(lam);
            REQUIRE(x.peak() == rank(lam));
            REQUIRE(partition_from_content_sequence(x) == lam);
        }
}

TEST_CASE("adding m to one side of the coordinates shifts the sequence") {
    for (int w = 0; w <= 12; ++w)
        for (const partition& lam : enumerate_partitions(w)) {
            const frobenius_coords fc = frobenius(lam);
            for (int m = 0; m <= 3; ++m) {
                std::vector<int> up = fc.alpha, down = fc.beta;
                for (int& a : up)
                    a += m;
                for (int& b : down)
                    b += m;
                const content_sequence raised =
                    content_sequence_of(from_frobenius(frobenius_coords(up, fc.beta)));
                const content_sequence lowered =
                    content_sequence_of(from_frobenius(frobenius_coords(fc.alpha, down)));
                const int lo = std::min(raised.min_content(), lowered.min_content());
                const int hi = std::max(raised.max_content(), lowered.max_content()) + 3;
                for (int a = lo; a <= hi; ++a)
                    REQUIRE(raised.at(a) == lowered.at(a - m));
            }
        }
}

TEST_CASE("is_shifted_form") {
    REQUIRE(is_shifted_form(partition({3, 1}), 1)); // (2|1), alpha = (1)
    REQUIRE_FALSE(is_shifted_form(partition({5, 3, 1}), 1));
    for (int m = 0; m <= 3; ++m)
        REQUIRE(is_shifted_form(partition({}), m));
    REQUIRE(is_shifted_form(partition({3, 3}), 1)); // conjugate (2,2,2) is 1-asymmetric
}

TEST_CASE("is_shifted_form matches the conjugate z-asymmetry reading up to weight 14") {
    for (int w = 0; w <= 14; ++w)
        for (const partition& lam : enumerate_partitions(w))
            for (int m = 0; m <= 3; ++m)
                REQUIRE(is_shifted_form(lam, m) == is_z_asymmetric(conjugate(lam), m));
}

TEST_CASE("diagonal labels") {
    const partition lam({5, 3, 1});
    REQUIRE(diagonal_label_of_cell(lam, 2, 3) == diag_label{2, 1});
    REQUIRE(diagonal_label_of_cell(lam, 2, 2) == diag_label{2, 0});
    REQUIRE(diagonal_label_of_cell(partition({1}), 1, 1) == diag_label{1, 0});
    REQUIRE(cell_of_diagonal_label(lam, {2, 0}) == std::pair<int, int>{2, 2});
    REQUIRE(cell_of_diagonal_label(lam, {1, -2}) == std::pair<int, int>{3, 1});
    REQUIRE_THROWS_AS(diagonal_label_of_cell(lam, 3, 2), cell_out_of_shape);
    REQUIRE_THROWS_AS(cell_of_diagonal_label(lam, {2, 2}), cell_out_of_shape);
}

TEST_CASE("diagonal labelling is a bijection onto {(i,a) : 1 <= i <= x_a}") {
    for (int w = 0; w <= 10; ++w)
        for (const partition& lam : enumerate_partitions(w)) {
            const content_sequence x = content_sequence_of(lam);
            long long seen = 0;
            for (const auto& [a, count] : x.counts())
                for (int i = 1; i <= count; ++i) {
                    const auto [row, col] = cell_of_diagonal_label(lam, {i, a});
                    REQUIRE(diagonal_label_of_cell(lam, row, col) == diag_label{i, a});
                    ++seen;
                }
            REQUIRE(seen == lam.weight());
        }
}
