#ifndef ZASYM_JSON_IO_HPP
#define ZASYM_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "zasym/content_sequence.hpp"
#include "zasym/laurent.hpp"
#include "zasym/multivariate.hpp"
#include "zasym/partition.hpp"
#include "zasym/report.hpp"
#include "zasym/ssyt.hpp"
#include "zasym/tabloid.hpp"

namespace zasym {

using json = nlohmann::json;

inline json to_json(const partition& p) { return json(p.parts()); }

inline json to_json(const frobenius_coords& fc) {
    return json{{"alpha", fc.alpha}, {"beta", fc.beta}};
}

inline json to_json(const cell_stats& s) {
    return json{{"row", s.row},   {"col", s.col}, {"content", s.content},
                {"hook", s.hook}, {"arm", s.arm}, {"leg", s.leg}};
}

inline json to_json(const content_sequence& c) {
    json counts = json::array();
    for (const auto& [a, x] : c.counts())
        counts.push_back(json::array({a, x}));
    return json{{"counts", counts}, {"peak_at", 0}};
}

inline json to_json(const tabloid& t) {
    json out{{"shape", t.shape().parts()},
             {"kind", t.kind() == tabloid_kind::content ? "content" : "hook"},
             {"rows", t.rows()}};
    if (t.bound())
        out["n"] = *t.bound();
    else
        out["n"] = nullptr;
    return out;
}

inline json to_json(const ssyt& t) {
    return json{{"shape", t.shape.parts()}, {"rows", t.rows}};
}

/* Coefficients travel as decimal strings so no precision is lost. */
inline json to_json(const laurent_poly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.coeffs())
        out.push_back(json::array({e, c.str()}));
    return out;
}

inline json to_json(const truncated_multi_poly& p) {
    json terms = json::array();
    for (const auto& [exps, c] : p.terms())
        terms.push_back(json::array({exps, c.str()}));
    return json{{"n", p.nvars()}, {"D", p.max_degree()}, {"terms", terms}};
}

inline json to_json(const verification_report& r, bool include_timing = false) {
    json params = json::object();
    for (const auto& [key, value] : r.params)
        params[key] = value;
    json out{{"claim", r.claim},
             {"params", params},
             {"status", r.pass ? "pass" : "fail"},
             {"lhs", r.lhs},
             {"rhs", r.rhs}};
    if (r.witness.empty())
        out["witness"] = nullptr;
    else {
        json parsed = json::parse(r.witness, nullptr, false);
        out["witness"] = parsed.is_discarded() ? json(r.witness) : parsed;
    }
    if (!r.domain_size.empty())
        out["domain_size"] = r.domain_size;
    if (include_timing)
        out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

inline partition partition_from_json(const json& j) {
    if (!j.is_array())
        throw precondition_violated("partition JSON must be an array of integers");
    return partition(j.get<std::vector<int>>());
}

inline tabloid tabloid_from_json(const json& j) {
    const partition shape = partition_from_json(j.at("shape"));
    const std::string kind_name = j.at("kind").get<std::string>();
    if (kind_name != "content" && kind_name != "hook")
        throw precondition_violated("tabloid kind must be content or hook");
    const tabloid_kind kind =
        kind_name == "content" ? tabloid_kind::content : tabloid_kind::hook;
    std::optional<int> n;
    if (j.contains("n") && !j.at("n").is_null())
        n = j.at("n").get<int>();
    return tabloid(shape, kind, n, j.at("rows").get<std::vector<std::vector<int>>>());
}

} // namespace zasym

#endif
