#include <catch2/catch_amalgamated.hpp>

#include "zasym/json_io.hpp"
#include "zasym/verify.hpp"

using namespace zasym;

TEST_CASE("domain types serialize to the documented JSON shapes") {
    REQUIRE(to_json(partition({4, 2, 2, 1})).dump() == "[4,2,2,1]");
    REQUIRE(to_json(frobenius(partition({4, 2, 2, 1}))).dump() ==
            R"({"alpha":[3,0],"beta":[3,1]})");

    const json cell = to_json(cell_stats_of(partition({4, 2, 2, 1})).front());
    REQUIRE(cell.at("hook") == 7);
    REQUIRE(cell.at("content") == 0);
    REQUIRE(cell.at("row") == 1);

    const json seq = to_json(content_sequence_of(partition({4, 2, 2, 1})));
    REQUIRE(seq.at("peak_at") == 0);
    REQUIRE(seq.at("counts").dump() == "[[-3,1],[-2,1],[-1,2],[0,2],[1,1],[2,1],[3,1]]");
}

TEST_CASE("tabloid JSON round trip") {
    const tabloid t(partition({5, 3, 1}), tabloid_kind::content, 3,
                    {{2, 0, 1, 3, -3}, {2, 1, 1}, {3}});
    const json j = to_json(t);
    REQUIRE(j.at("kind") == "content");
    REQUIRE(j.at("n") == 3);
    REQUIRE(tabloid_from_json(j) == t);

    const tabloid h(partition({2, 1}), tabloid_kind::hook, std::nullopt, {{-1, 0}, {0}});
    const json jh = to_json(h);
    REQUIRE(jh.at("n").is_null());
    REQUIRE(tabloid_from_json(jh) == h);
}

TEST_CASE("polynomial JSON uses decimal-string coefficients") {
    laurent_poly p;
    p.add_term(-2, bigint("123456789012345678901234567890"));
    p.add_term(3, -1);
    REQUIRE(to_json(p).dump() ==
            R"([[-2,"123456789012345678901234567890"],[3,"-1"]])");

    truncated_multi_poly m(2, 4);
    m.add_term({1, 2}, 7);
    const json jm = to_json(m);
    REQUIRE(jm.at("n") == 2);
    REQUIRE(jm.at("D") == 4);
    REQUIRE(jm.at("terms").dump() == R"([[[1,2],"7"]])");
}

TEST_CASE("report JSON") {
    const verification_report r = verify_lemma_k(partition({2, 2, 2}), 1);
    const json j = to_json(r);
    REQUIRE(j.at("claim") == "lemma-k");
    REQUIRE(j.at("status") == "pass");
    REQUIRE(j.at("witness").is_null());
    REQUIRE(j.at("params").at("m") == "1");
    REQUIRE_FALSE(j.contains("elapsed_ms"));
    REQUIRE(to_json(r, true).contains("elapsed_ms"));
}
