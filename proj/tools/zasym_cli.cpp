#include <algorithm>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zasym/zasym.hpp"

using namespace zasym;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ','))
        if (!token.empty())
            out.push_back(std::stoi(token));
    return out;
}

partition parse_partition(const std::string& text) { return partition(parse_int_list(text)); }

std::vector<std::vector<int>> parse_rows(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::string row;
    std::istringstream in(text);
    while (std::getline(in, row, '/'))
        rows.push_back(parse_int_list(row));
    while (!rows.empty() && rows.back().empty())
        rows.pop_back();
    return rows;
}

partition shape_of_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows)
        parts.push_back(static_cast<int>(row.size()));
    return partition(std::move(parts));
}

std::map<int, int> parse_counts(const std::string& text) {
    std::map<int, int> counts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw precondition_violated("counts expect a:x pairs, got '" + token + "'");
        counts[std::stoi(token.substr(0, colon))] += std::stoi(token.substr(colon + 1));
    }
    return counts;
}

struct cli_state {
    std::string format = "json";
    long long cap = default_enumeration_cap;
    unsigned long long seed = 1;
    bool timings = false;
    int exit_status = 0;
};

void print_grid(const std::vector<std::vector<int>>& rows) {
    std::size_t width = 1;
    for (const auto& row : rows)
        for (int v : row)
            width = std::max(width, std::to_string(v).size());
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            const std::string s = std::to_string(row[j]);
            std::cout << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        std::cout << '\n';
    }
}

void print_diagram(const partition& p) {
    for (int part : p.parts())
        std::cout << std::string(static_cast<std::size_t>(part), '#') << '\n';
}

void emit_report(const cli_state& state, const verification_report& report) {
    if (state.format == "text") {
        std::cout << report.claim;
        for (const auto& [key, value] : report.params)
            std::cout << ' ' << key << '=' << value;
        std::cout << (report.pass ? " pass" : " FAIL");
        if (!report.pass && !report.witness.empty())
            std::cout << " witness " << report.witness;
        std::cout << '\n';
    } else {
        std::cout << to_json(report, state.timings).dump() << '\n';
    }
}

int emit_reports(cli_state& state, const std::vector<verification_report>& reports) {
    int failures = 0;
    for (const verification_report& report : reports) {
        emit_report(state, report);
        if (!report.pass)
            ++failures;
    }
    if (state.format == "text")
        std::cout << reports.size() << " checks, " << failures << " failures\n";
    return failures;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of z-asymmetric partitions"};
    app.require_subcommand(1);
    cli_state state;
    app.add_option("--format", state.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--cap", state.cap, "enumeration cap")->capture_default_str();
    app.add_option("--seed", state.seed, "seed for random point sampling")
        ->capture_default_str();
    app.add_flag("--timings", state.timings, "include elapsed_ms in JSON reports");

    /* ---- partitions ---- */
    {
        auto* cmd = app.add_subcommand("partitions", "enumerate partitions of a weight");
        auto weight = std::make_shared<int>(0);
        auto max_length = std::make_shared<int>(-1);
        auto z = std::make_shared<std::optional<int>>();
        cmd->add_option("--weight", *weight, "weight to enumerate")->required();
        cmd->add_option("--max-length", *max_length, "bound on the number of parts");
        cmd->add_option("--z-asym", *z, "keep only z-asymmetric partitions");
        cmd->callback([&state, weight, max_length, z] {
            std::vector<partition> out =
                *z ? enumerate_z_asymmetric(*weight, **z)
                   : enumerate_partitions(*weight, *max_length >= 0
                                                       ? std::optional<int>(*max_length)
                                                       : std::nullopt);
            if (*z && *max_length >= 0)
                std::erase_if(out, [&](const partition& p) { return p.length() > *max_length; });
            if (state.format == "text") {
                for (const partition& p : out)
                    std::cout << p.str() << '\n';
            } else {
                json list = json::array();
                for (const partition& p : out)
                    list.push_back(to_json(p));
                std::cout << list.dump() << '\n';
            }
        });
    }

    /* ---- frobenius ---- */
    {
        auto* cmd = app.add_subcommand("frobenius", "Frobenius coordinates, both directions");
        auto part = std::make_shared<std::optional<std::string>>();
        auto alpha = std::make_shared<std::optional<std::string>>();
        auto beta = std::make_shared<std::optional<std::string>>();
        cmd->add_option("--partition", *part, "partition to convert");
        cmd->add_option("--alpha", *alpha, "alpha coordinates");
        cmd->add_option("--beta", *beta, "beta coordinates");
        cmd->callback([&state, part, alpha, beta] {
            if (part->has_value() == (alpha->has_value() || beta->has_value()))
                throw precondition_violated(
                    "frobenius expects either --partition or --alpha with --beta");
            if (*part) {
                const frobenius_coords fc = frobenius(parse_partition(**part));
                if (state.format == "text")
                    std::cout << fc.str() << '\n';
                else
                    std::cout << to_json(fc).dump() << '\n';
            } else {
                if (!*alpha || !*beta)
                    throw precondition_violated("both --alpha and --beta are required");
                const partition p = from_frobenius(
                    frobenius_coords(parse_int_list(**alpha), parse_int_list(**beta)));
                if (state.format == "text")
                    std::cout << p.str() << '\n';
                else
                    std::cout << to_json(p).dump() << '\n';
            }
        });
    }

    /* ---- stats ---- */
    {
        auto* cmd = app.add_subcommand("stats", "cell statistics, k and content sum");
        auto part = std::make_shared<std::string>();
        cmd->add_option("--partition", *part, "partition")->required();
        cmd->callback([&state, part] {
            const partition p = parse_partition(*part);
            const auto cells = cell_stats_of(p);
            if (state.format == "text") {
                std::cout << p.str() << "  weight " << p.weight() << "  rank " << rank(p)
                          << '\n';
                print_diagram(p);
                std::vector<std::vector<int>> hooks(p.length()), contents(p.length());
                for (const cell_stats& s : cells) {
                    hooks[s.row - 1].push_back(s.hook);
                    contents[s.row - 1].push_back(s.content);
                }
                std::cout << "hooks:\n";
                print_grid(hooks);
                std::cout << "contents:\n";
                print_grid(contents);
                std::cout << "k = " << k_statistic(p) << ", content sum = " << content_sum(p)
                          << '\n';
            } else {
                json out{{"weight", p.weight()},
                         {"length", p.length()},
                         {"rank", rank(p)},
                         {"k", k_statistic(p)},
                         {"content_sum", content_sum(p)}};
                json jcells = json::array();
                for (const cell_stats& s : cells)
                    jcells.push_back(to_json(s));
                out["cells"] = jcells;
                std::cout << out.dump() << '\n';
            }
        });
    }

    /* ---- content-seq ---- */
    {
        auto* cmd = app.add_subcommand("content-seq",
                                       "content sequence of a partition, both directions");
        auto part = std::make_shared<std::optional<std::string>>();
        auto counts = std::make_shared<std::optional<std::string>>();
        auto labels = std::make_shared<bool>(false);
        cmd->add_option("--partition", *part, "partition to convert");
        cmd->add_option("--counts", *counts, "content sequence as a:x pairs");
        cmd->add_flag("--labels", *labels, "also print the diagonal labelling");
        cmd->callback([&state, part, counts, labels] {
            if (part->has_value() == counts->has_value())
                throw precondition_violated("content-seq expects --partition or --counts");
            if (*counts) {
                const partition p =
                    partition_from_content_sequence(content_sequence(parse_counts(**counts)));
                if (state.format == "text")
                    std::cout << p.str() << '\n';
                else
                    std::cout << to_json(p).dump() << '\n';
                return;
            }
            const partition p = parse_partition(**part);
            const content_sequence seq = content_sequence_of(p);
            json out = to_json(seq);
            if (*labels) {
                json jl = json::array();
                for (const cell_stats& s : cell_stats_of(p)) {
                    const diag_label label = diagonal_label_of_cell(p, s.row, s.col);
                    jl.push_back(json::array({s.row, s.col, label.index, label.content}));
                }
                out["labels"] = jl;
            }
            if (state.format == "text")
                std::cout << seq.str() << '\n';
            else
                std::cout << out.dump() << '\n';
        });
    }

    /* ---- tabloids ---- */
    {
        auto* cmd = app.add_subcommand("tabloids", "count, enumerate or sum content tabloids");
        cmd->require_subcommand(1);
        auto shape = std::make_shared<std::string>();
        auto kind_name = std::make_shared<std::string>("content");
        auto n = std::make_shared<std::optional<int>>();
        for (const char* action : {"count", "enum", "gf"}) {
            auto* sub = cmd->add_subcommand(action);
            sub->add_option("--shape", *shape, "tabloid shape")->required();
            sub->add_option("--kind", *kind_name, "content or hook")
                ->check(CLI::IsMember({"content", "hook"}))
                ->capture_default_str();
            sub->add_option("--n", *n, "color bound for content tabloids");
            const std::string name = action;
            sub->callback([&state, shape, kind_name, n, name] {
                const partition p = parse_partition(*shape);
                const tabloid_kind kind =
                    *kind_name == "content" ? tabloid_kind::content : tabloid_kind::hook;
                if (kind == tabloid_kind::content && !n->has_value())
                    throw precondition_violated("content tabloids require --n");
                if (name == "count") {
                    std::cout << count_tabloids(p, kind, *n).str() << '\n';
                } else if (name == "enum") {
                    for_each_tabloid(
                        p, kind, kind == tabloid_kind::content ? *n : std::nullopt,
                        [&](const tabloid& t) {
                            if (state.format == "text") {
                                print_grid(t.rows());
                                std::cout << "norm " << t.norm() << "\n\n";
                            } else {
                                std::cout << to_json(t).dump() << '\n';
                            }
                        },
                        state.cap);
                } else {
                    if (kind != tabloid_kind::content)
                        throw precondition_violated(
                            "the norm generating function is defined for content tabloids");
                    const laurent_poly gf = content_gf(p, **n);
                    if (state.format == "text")
                        std::cout << gf.str() << '\n';
                    else
                        std::cout << to_json(gf).dump() << '\n';
                }
            });
        }
    }

    /* ---- bijection ---- */
    {
        auto* cmd = app.add_subcommand("bijection", "the diagonal-shift bijection on tabloids");
        cmd->require_subcommand(1);
        auto rows_text = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto m = std::make_shared<int>(1);
        for (const char* action : {"apply", "invert"}) {
            auto* sub = cmd->add_subcommand(action);
            sub->add_option("--rows", *rows_text, "tabloid rows, rows joined by '/'")
                ->required();
            sub->add_option("--n", *n, "color bound of the input tabloid")->required();
            sub->add_option("--m", *m, "shift amount")->capture_default_str();
            const bool forward = std::string(action) == "apply";
            sub->callback([&state, rows_text, n, m, forward] {
                const auto rows = parse_rows(*rows_text);
                const tabloid input(shape_of_rows(rows), tabloid_kind::content, *n, rows);
                const tabloid output = forward ? phi(input, *m) : phi_inverse(input, *m);
                if (state.format == "text") {
                    print_grid(output.rows());
                    std::cout << "shape " << output.shape().str() << ", bound "
                              << *output.bound() << ", norm " << output.norm() << '\n';
                } else {
                    std::cout << to_json(output).dump() << '\n';
                }
            });
        }
        auto* sub = cmd->add_subcommand("verify");
        auto alpha = std::make_shared<std::string>();
        auto beta = std::make_shared<std::string>();
        sub->add_option("--alpha", *alpha, "alpha of the base coordinates")->required();
        sub->add_option("--beta", *beta, "beta of the base coordinates")->required();
        sub->add_option("--m", *m, "shift amount")->capture_default_str();
        sub->add_option("--n", *n, "color bound on the domain side")->required();
        sub->callback([&state, alpha, beta, m, n] {
            const verification_report report = verify_phi(
                frobenius_coords(parse_int_list(*alpha), parse_int_list(*beta)), *m, *n,
                state.cap);
            emit_report(state, report);
            if (!report.pass)
                state.exit_status = 1;
        });
    }

    /* ---- dim ---- */
    {
        auto* cmd = app.add_subcommand("dim", "hook content dimension");
        auto shape = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        cmd->add_option("--shape", *shape, "highest weight")->required();
        cmd->add_option("--n", *n, "number of variables")->required();
        cmd->callback([shape, n] {
            std::cout << dim_hook_content(parse_partition(*shape), *n).str() << '\n';
        });
    }

    /* ---- schur ---- */
    {
        auto* cmd = app.add_subcommand("schur", "Schur polynomial evaluations");
        cmd->require_subcommand(1);
        auto shape = std::make_shared<std::string>();

        auto* eval = cmd->add_subcommand("eval", "bialternant evaluation at integer points");
        auto points_text = std::make_shared<std::optional<std::string>>();
        auto random_sets = std::make_shared<int>(0);
        auto nvars = std::make_shared<std::optional<int>>();
        auto check = std::make_shared<bool>(false);
        eval->add_option("--shape", *shape, "shape")->required();
        eval->add_option("--points", *points_text, "comma-separated distinct integers");
        eval->add_option("--random-points", *random_sets,
                         "number of seeded random point sets to sample");
        eval->add_option("--n", *nvars, "number of variables for sampled points");
        eval->add_flag("--check", *check, "cross-check against the tableau sum");
        eval->callback([&state, shape, points_text, random_sets, nvars, check] {
            const partition lam = parse_partition(*shape);
            auto run_one = [&](const std::vector<bigint>& points) {
                const bigint value = schur_bialternant_eval(lam, points);
                json out{{"value", value.str()}};
                json jp = json::array();
                for (const bigint& p : points)
                    jp.push_back(p.str());
                out["points"] = jp;
                if (*check) {
                    const truncated_multi_poly s = schur_truncated(
                        lam, static_cast<int>(points.size()), static_cast<int>(lam.weight()));
                    const bigint oracle = s.eval(points);
                    out["tableau_sum"] = oracle.str();
                    out["match"] = oracle == value;
                    if (oracle != value)
                        state.exit_status = 1;
                }
                if (state.format == "text")
                    std::cout << value.str() << '\n';
                else
                    std::cout << out.dump() << '\n';
            };
            if (points_text->has_value() == (*random_sets > 0))
                throw precondition_violated("schur eval expects --points or --random-points");
            if (*points_text) {
                std::vector<bigint> points;
                for (int v : parse_int_list(**points_text))
                    points.emplace_back(v);
                run_one(points);
            } else {
                const int count = nvars->value_or(std::max(1, lam.length()));
                std::mt19937_64 rng(state.seed);
                std::uniform_int_distribution<int> draw(-20, 20);
                for (int set_index = 0; set_index < *random_sets; ++set_index) {
                    std::set<int> chosen;
                    while (static_cast<int>(chosen.size()) < count)
                        chosen.insert(draw(rng));
                    run_one(std::vector<bigint>(chosen.begin(), chosen.end()));
                }
            }
        });

        auto* spec = cmd->add_subcommand("specialize", "principal specialization in q");
        auto n = std::make_shared<int>(0);
        spec->add_option("--shape", *shape, "shape")->required();
        spec->add_option("--n", *n, "number of variables")->required();
        spec->callback([&state, shape, n] {
            const laurent_poly p = principal_specialization(parse_partition(*shape), *n);
            if (state.format == "text")
                std::cout << p.str() << '\n';
            else
                std::cout << to_json(p).dump() << '\n';
        });

        auto* stepped = cmd->add_subcommand("stepped", "specialization on a step-2 ladder");
        auto start = std::make_shared<int>(0);
        auto count = std::make_shared<int>(0);
        stepped->add_option("--shape", *shape, "shape")->required();
        stepped->add_option("--start", *start, "first exponent")->required();
        stepped->add_option("--count", *count, "number of variables")->required();
        stepped->callback([&state, shape, start, count] {
            const laurent_poly p =
                stepped_specialization(parse_partition(*shape), *start, *count);
            if (state.format == "text")
                std::cout << p.str() << '\n';
            else
                std::cout << to_json(p).dump() << '\n';
        });
    }

    /* ---- verify ---- */
    {
        auto* cmd = app.add_subcommand("verify", "verify the identities; sweeps by default");
        auto claim = std::make_shared<std::string>();
        cmd->add_option("claim", *claim, "claim to verify")
            ->required()
            ->check(CLI::IsMember({"littlewood1", "littlewood2", "thm21", "thm22", "thm33",
                                   "lemma-k", "cor-content", "cor34", "cor35", "all"}));
        auto opt = std::make_shared<sweep_options>();
        auto part = std::make_shared<std::optional<std::string>>();
        auto alpha = std::make_shared<std::optional<std::string>>();
        auto beta = std::make_shared<std::optional<std::string>>();
        auto m = std::make_shared<std::optional<int>>();
        auto n = std::make_shared<std::optional<int>>();
        auto p = std::make_shared<std::optional<int>>();
        auto q = std::make_shared<std::optional<int>>();
        cmd->add_option("--max-weight", opt->max_weight, "sweep weight bound")
            ->capture_default_str();
        cmd->add_option("--max-m", opt->max_m, "sweep m bound")->capture_default_str();
        cmd->add_option("--max-n", opt->max_n, "sweep n bound")->capture_default_str();
        cmd->add_option("--n-vars", opt->nvars, "variable count for the product identities")
            ->capture_default_str();
        cmd->add_option("--degree", opt->degree, "truncation degree for the product identities")
            ->capture_default_str();
        cmd->add_option("--partition", *part, "single instance: the partition");
        cmd->add_option("--alpha", *alpha, "single instance: alpha");
        cmd->add_option("--beta", *beta, "single instance: beta");
        cmd->add_option("--m", *m, "single instance: m");
        cmd->add_option("--n", *n, "single instance: n");
        cmd->add_option("--p", *p, "single instance: p");
        cmd->add_option("--q", *q, "single instance: q");
        cmd->callback([&state, claim, opt, part, alpha, beta, m, n, p, q] {
            opt->cap = state.cap;
            std::vector<verification_report> reports;
            const bool single = part->has_value() || alpha->has_value();
            if (!single) {
                reports = run_sweep(*claim, *opt);
            } else if (*claim == "thm22" || *claim == "thm33" || *claim == "lemma-k" ||
                       *claim == "cor-content" || *claim == "cor35") {
                if (!*part)
                    throw precondition_violated("--partition is required for " + *claim);
                const partition lam = parse_partition(**part);
                if (*claim == "thm22")
                    reports.push_back(verify_thm22(lam, m->value_or(1)));
                else if (*claim == "thm33")
                    reports.push_back(verify_thm33(lam, m->value_or(1),
                                                   n->value_or(lam.empty() ? 1
                                                                           : lam.parts().front())));
                else if (*claim == "lemma-k")
                    reports.push_back(verify_lemma_k(lam, m->value_or(1)));
                else if (*claim == "cor-content")
                    reports.push_back(verify_cor_content(lam, m->value_or(1)));
                else
                    reports.push_back(verify_cor35(lam, m->value_or(1),
                                                   n->value_or(lam.empty() ? 1
                                                                           : lam.parts().front())));
            } else if (*claim == "thm21" || *claim == "cor34") {
                if (!*alpha || !*beta)
                    throw precondition_violated("--alpha and --beta are required for " + *claim);
                const frobenius_coords base(parse_int_list(**alpha), parse_int_list(**beta));
                const int len = base.rank() == 0 ? 0 : base.beta.front() + 1;
                const int first = base.rank() == 0 ? 0 : base.alpha.front() + 1;
                if (*claim == "thm21")
                    reports.push_back(verify_thm21(base, m->value_or(1), p->value_or(len),
                                                   q->value_or(first)));
                else
                    reports.push_back(verify_cor34(base, m->value_or(1), n->value_or(len)));
            } else {
                throw precondition_violated(*claim + " does not take instance flags");
            }
            if (emit_reports(state, reports) > 0)
                state.exit_status = 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const zasym::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return state.exit_status;
}
