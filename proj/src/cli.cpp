#include <polybern/cli.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <polybern/combinatorics.hpp>
#include <polybern/polybernoulli.hpp>
#include <polybern/series.hpp>

namespace polybern::cli
{

using nlohmann::ordered_json;

nlohmann::ordered_json to_json(const verification_report &report)
{
    ordered_json j;
    j["identity"] = report.identity_id;
    ordered_json params = ordered_json::object();
    for (const auto &[k, v] : report.parameters) {
        params[k] = v;
    }
    j["params"] = std::move(params);
    j["passed"] = report.passed;
    if (report.counterexample) {
        j["counterexample"] = {{"at", report.counterexample->at},
                               {"lhs", to_string(report.counterexample->lhs)},
                               {"rhs", to_string(report.counterexample->rhs)}};
    } else {
        j["counterexample"] = nullptr;
    }
    j["checked"] = report.checked_count;
    return j;
}

nlohmann::ordered_json to_json(const verify_entry &entry)
{
    if (entry.report) {
        return to_json(*entry.report);
    }
    ordered_json j;
    j["identity"] = entry.identity_id;
    j["error"] = entry.error.value_or("");
    return j;
}

namespace
{

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class format { csv, json, text };

template <std::size_t N>
std::string join(const char *const (&ids)[N])
{
    std::string s;
    for (const char *id : ids) {
        s += s.empty() ? "" : ", ";
        s += id;
    }
    return s;
}

template <std::size_t N>
bool contains(const char *const (&ids)[N], const std::string &id)
{
    return std::any_of(std::begin(ids), std::end(ids), [&](const char *x) { return id == x; });
}

// A rectangular table of already-rendered cells.
struct table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

void write_table(std::ostream &os, const table &t, format f, const ordered_json &meta)
{
    if (f == format::json) {
        ordered_json j = meta;
        j["columns"] = t.columns;
        j["rows"] = t.rows;
        os << j.dump(2) << '\n';
        return;
    }
    const char sep = f == format::csv ? ',' : ' ';
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? std::string(1, sep) : "") << cells[i];
        }
        os << '\n';
    };
    line(t.columns);
    for (const auto &r : t.rows) {
        line(r);
    }
}

std::string str(std::size_t v)
{
    return std::to_string(v);
}

std::string str(long v)
{
    return std::to_string(v);
}

// ---------------------------------------------------------------- table

struct table_args {
    std::string sequence;
    std::size_t max_n = 10;
    long k = 0;
    bool has_k = false;
    std::size_t m = 0, l = 0, n = 0;
    bool has_m = false, has_l = false, has_n = false;
};

table build_table(const table_args &a)
{
    table t;
    const std::string &s = a.sequence;
    if (s == "stirling1" || s == "stirling2") {
        t.columns = {"n", "m", "value"};
        for (std::size_t n = 0; n <= a.max_n; ++n) {
            for (std::size_t m = 0; m <= n; ++m) {
                const Integer v = s == "stirling1" ? stirling_first(n, m) : stirling_second(n, m);
                t.rows.push_back({str(n), str(m), to_string(v)});
            }
        }
    } else if (s == "bernoulli") {
        t.columns = {"n", "value"};
        for (std::size_t n = 0; n <= a.max_n; ++n) {
            t.rows.push_back({str(n), to_string(bernoulli(n))});
        }
    } else if (s == "genocchi") {
        t.columns = {"n", "value"};
        for (std::size_t n = 0; n <= a.max_n; ++n) {
            t.rows.push_back({str(n), to_string(genocchi(n))});
        }
    } else if (s == "polybernoulli-B" || s == "polybernoulli-C") {
        t.columns = {"n", "k", "value"};
        std::vector<long> ks;
        if (a.has_k) {
            ks.push_back(a.k);
        } else {
            for (std::size_t i = 0; i <= a.max_n; ++i) {
                ks.push_back(-static_cast<long>(i));
            }
        }
        for (long k : ks) {
            for (std::size_t n = 0; n <= a.max_n; ++n) {
                const Rational v = s == "polybernoulli-B" ? poly_bernoulli_B(n, k) : poly_bernoulli_C(n, k);
                t.rows.push_back({str(n), str(k), to_string(v)});
            }
        }
    } else if (s == "scriptB") {
        t.columns = {"m", "l", "n", "value"};
        auto range = [&](bool has, std::size_t v) {
            std::vector<std::size_t> r;
            if (has) {
                r.push_back(v);
            } else {
                for (std::size_t i = 0; i <= a.max_n; ++i) {
                    r.push_back(i);
                }
            }
            return r;
        };
        for (std::size_t n : range(a.has_n, a.n)) {
            for (std::size_t m : range(a.has_m, a.m)) {
                for (std::size_t l : range(a.has_l, a.l)) {
                    t.rows.push_back({str(m), str(l), str(n), to_string(script_B_closed(m, l, n))});
                }
            }
        }
    }
    return t;
}

// ---------------------------------------------------------------- expand

struct expand_args {
    std::string gf;
    std::size_t order = default_order;
    long k = 0;
    bool has_k = false;
    std::string x;
    std::size_t n = 0;
    bool has_n = false;
};

void write_expansion(std::ostream &os, const expand_args &a, format f)
{
    const std::string &g = a.gf;
    if ((g == "egf-B" || g == "egf-C" || g == "egf-poly") && !a.has_k) {
        throw usage_error(g + " needs --k");
    }
    if (g == "egf-poly" && a.x.empty()) {
        throw usage_error("egf-poly needs --x");
    }
    if (g == "egf-scriptB" && !a.has_n) {
        throw usage_error("egf-scriptB needs --n");
    }

    table t;
    ordered_json orders = ordered_json::object();
    if (g == "egf-scriptB") {
        const series2 s = script_B_egf_series(a.n, a.order);
        orders["x"] = a.order;
        orders["y"] = a.order;
        t.columns = {"i", "j", "value"};
        for (std::size_t i = 0; i <= a.order; ++i) {
            for (std::size_t j = 0; i + j <= a.order; ++j) {
                t.rows.push_back({str(i), str(j), to_string(s(i, j))});
            }
        }
    } else {
        series1 s;
        const char *variable = "x";
        if (g == "egf-B") {
            s = poly_bernoulli_B_egf_series(a.k, a.order);
            variable = "t";
        } else if (g == "egf-C") {
            s = poly_bernoulli_C_egf_series(a.k, a.order);
            variable = "t";
        } else if (g == "egf-poly") {
            Rational x;
            try {
                x = parse_rational(a.x);
            } catch (const std::invalid_argument &e) {
                throw usage_error(std::string("--x: ") + e.what());
            }
            s = poly_bernoulli_polynomial_egf_series(a.k, x, a.order);
            variable = "t";
        } else if (g == "ogf-f1") {
            s = f1_series(a.order);
        } else if (g == "g1") {
            s = g1_series(a.order);
        } else {
            s = beta1_series(a.order);
        }
        orders[variable] = a.order;
        t.columns = {"i", "value"};
        for (std::size_t i = 0; i <= s.order(); ++i) {
            t.rows.push_back({str(i), to_string(s[i])});
        }
    }

    if (f == format::json) {
        ordered_json j;
        j["gf"] = g;
        j["variable_orders"] = orders;
        ordered_json coeffs = ordered_json::array();
        for (const auto &r : t.rows) {
            std::string key = r[0];
            for (std::size_t c = 1; c + 1 < r.size(); ++c) {
                key += "," + r[c];
            }
            coeffs.push_back({key, r.back()});
        }
        j["coefficients"] = std::move(coeffs);
        os << j.dump(2) << '\n';
        return;
    }
    write_table(os, t, f, {});
}

// ---------------------------------------------------------------- verify

struct verify_args {
    std::string id;
    std::size_t order = 0, max_l = 0, max_m = 0, max_n = 0;
    bool has_order = false, has_max_l = false, has_max_m = false, has_max_n = false;
    std::string mode;
    std::vector<std::string> points;
};

verify_config make_config(const verify_args &a)
{
    verify_config c;
    if (a.has_order) {
        c.egf_order = c.ogf_order = c.trivariate_order = c.takeda_order = c.gn_order = a.order;
        c.zagier_order = c.g1_order = c.f2_order = c.lemma46_order = a.order;
    }
    if (a.has_max_n) {
        c.duality_max_n = c.egf_max_n = c.ogf_max_n = c.gn_max_n = c.lemma46_max_n = a.max_n;
        c.takeda_max_r = a.max_n;
        c.prop41_max_n = c.genocchi_max_n = a.max_n;
    }
    if (a.has_max_l) {
        c.duality_max_l = a.max_l;
    }
    if (a.has_max_m) {
        c.duality_max_m = a.max_m;
        c.recursion_max_m = a.max_m;
    }
    if (a.mode == "sample") {
        c.lemma46_mode = lemma_mode::sample;
    } else if (!a.mode.empty() && a.mode != "series") {
        throw usage_error("--mode must be 'series' or 'sample'");
    }
    if (!a.points.empty()) {
        c.lemma46_points.clear();
        for (const auto &p : a.points) {
            try {
                c.lemma46_points.push_back(parse_rational(p));
            } catch (const std::invalid_argument &e) {
                throw usage_error(std::string("--points: ") + e.what());
            }
        }
    }
    return c;
}

int write_verification(std::ostream &os, const std::vector<verify_entry> &entries, format f)
{
    bool any_failed = false;
    bool any_error = false;
    for (const auto &e : entries) {
        any_error = any_error || !e.report;
        any_failed = any_failed || (e.report && !e.report->passed);
    }
    if (f == format::json) {
        ordered_json j = ordered_json::array();
        for (const auto &e : entries) {
            j.push_back(to_json(e));
        }
        os << j.dump(2) << '\n';
    } else if (f == format::csv) {
        os << "identity,params,passed,checked,at,lhs,rhs,error\n";
        for (const auto &e : entries) {
            if (!e.report) {
                os << e.identity_id << ",,,,,,," << '"' << e.error.value_or("") << '"' << '\n';
                continue;
            }
            const auto &r = *e.report;
            std::string params;
            for (const auto &[k, v] : r.parameters) {
                params += (params.empty() ? "" : " ") + k + "=" + v;
            }
            os << r.identity_id << ",\"" << params << "\"," << (r.passed ? "true" : "false") << ','
               << r.checked_count;
            if (r.counterexample) {
                os << ",\"" << r.counterexample->at << "\"," << to_string(r.counterexample->lhs) << ','
                   << to_string(r.counterexample->rhs) << ",\n";
            } else {
                os << ",,,,\n";
            }
        }
    } else {
        std::size_t passed = 0;
        for (const auto &e : entries) {
            if (!e.report) {
                os << "ERROR " << e.error.value_or(e.identity_id) << '\n';
                continue;
            }
            const auto &r = *e.report;
            os << (r.passed ? "PASS " : "FAIL ") << r.identity_id;
            for (const auto &[k, v] : r.parameters) {
                os << ' ' << k << '=' << v;
            }
            os << " (checked " << r.checked_count << ')';
            if (r.counterexample) {
                os << " at " << r.counterexample->at << ": lhs=" << to_string(r.counterexample->lhs)
                   << " rhs=" << to_string(r.counterexample->rhs);
            }
            os << '\n';
            passed += r.passed ? 1 : 0;
        }
        os << passed << '/' << entries.size() << " checks passed\n";
    }
    if (any_failed) {
        return exit_failed;
    }
    return any_error ? exit_usage : exit_ok;
}

format parse_format(const std::string &s, format fallback)
{
    if (s.empty()) {
        return fallback;
    }
    if (s == "csv") {
        return format::csv;
    }
    if (s == "json") {
        return format::json;
    }
    if (s == "text") {
        return format::text;
    }
    throw usage_error("--format must be csv, json or text");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact poly-Bernoulli, Stirling, Bernoulli and Genocchi numbers with identity verification",
                 "polybern"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name;
    std::string output_path;
    app.add_option("--format", format_name, "Output format: csv, json or text");
    app.add_option("--output", output_path, "Write the document to FILE instead of stdout");

    table_args ta;
    auto *table_cmd = app.add_subcommand("table", "Tabulate a sequence");
    table_cmd->add_option("sequence", ta.sequence, "Sequence id")->required();
    table_cmd->add_option("--max-n", ta.max_n, "Largest index");
    auto *t_k = table_cmd->add_option("--k", ta.k, "Upper index k (poly-Bernoulli)");
    auto *t_m = table_cmd->add_option("--m", ta.m, "m (scriptB)");
    auto *t_l = table_cmd->add_option("--l", ta.l, "l (scriptB)");
    auto *t_n = table_cmd->add_option("--n", ta.n, "n (scriptB)");

    expand_args ea;
    auto *expand_cmd = app.add_subcommand("expand", "Expand a generating function");
    expand_cmd->add_option("gf", ea.gf, "Generating function id")->required();
    expand_cmd->add_option("--order", ea.order, "Truncation order");
    auto *e_k = expand_cmd->add_option("--k", ea.k, "Upper index k");
    expand_cmd->add_option("--x", ea.x, "Polynomial argument x as p/q");
    auto *e_n = expand_cmd->add_option("--n", ea.n, "n for egf-scriptB");

    verify_args va;
    auto *verify_cmd = app.add_subcommand("verify", "Verify an identity, or all of them");
    verify_cmd->add_option("identity", va.id, "Identity id or 'all'")->required();
    auto *v_order = verify_cmd->add_option("--order", va.order, "Truncation order");
    auto *v_l = verify_cmd->add_option("--max-l", va.max_l, "Largest l");
    auto *v_m = verify_cmd->add_option("--max-m", va.max_m, "Largest m");
    auto *v_n = verify_cmd->add_option("--max-n", va.max_n, "Largest n");
    verify_cmd->add_option("--mode", va.mode, "lemma46 mode: series or sample");
    verify_cmd->add_option("--points", va.points, "lemma46 sample points (p/q)")->delimiter(',');

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    std::ostringstream doc;
    int code = exit_ok;
    try {
        if (*table_cmd) {
            if (!contains(sequence_ids, ta.sequence)) {
                throw usage_error("unknown sequence '" + ta.sequence + "'; valid: " + join(sequence_ids));
            }
            ta.has_k = t_k->count() > 0;
            ta.has_m = t_m->count() > 0;
            ta.has_l = t_l->count() > 0;
            ta.has_n = t_n->count() > 0;
            const format f = parse_format(format_name, format::csv);
            ordered_json meta;
            meta["sequence"] = ta.sequence;
            write_table(doc, build_table(ta), f, meta);
        } else if (*expand_cmd) {
            if (!contains(gf_ids, ea.gf)) {
                throw usage_error("unknown generating function '" + ea.gf + "'; valid: " + join(gf_ids));
            }
            ea.has_k = e_k->count() > 0;
            ea.has_n = e_n->count() > 0;
            write_expansion(doc, ea, parse_format(format_name, format::json));
        } else {
            if (va.id != "all" && !is_identity_id(va.id)) {
                std::string valid = "all";
                for (auto id : identity_ids) {
                    valid += ", " + std::string(id);
                }
                throw usage_error("unknown identity '" + va.id + "'; valid: " + valid);
            }
            va.has_order = v_order->count() > 0;
            va.has_max_l = v_l->count() > 0;
            va.has_max_m = v_m->count() > 0;
            va.has_max_n = v_n->count() > 0;
            const format f = parse_format(format_name, format::text);
            const verify_config config = make_config(va);
            const auto entries = va.id == "all" ? verify_all(config) : verify_identity(va.id, config);
            code = write_verification(doc, entries, f);
        }
    } catch (const usage_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (output_path.empty()) {
        out << doc.str();
    } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << output_path << "' for writing\n";
            return exit_usage;
        }
        file << doc.str();
    }
    return code;
}

} // namespace polybern::cli
