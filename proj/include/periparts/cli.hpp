#ifndef PERIPARTS_CLI_HPP
#define PERIPARTS_CLI_HPP

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "periparts/verify.hpp"

/* The command-line surface: one entry point routing to the enumerate / map /
 * count / series / verify subcommands with uniform text, JSON and CSV output.
 *
 * JSON documents are {command, params, rows|series|report}; big integers are
 * emitted as decimal strings, never as numbers. Identical invocations produce
 * byte-identical JSON and CSV (timings appear only in the text format).
 * Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
 */

namespace periparts {

using Json = nlohmann::ordered_json;

namespace cli_detail {

inline std::string csv_quote(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

inline bool looks_like_bits(std::string_view s) {
    return s.size() >= 2 && s.front() == '0' &&
           s.find_first_not_of("01") == std::string_view::npos;
}

inline std::string coefficient_text(const Polynomial& c) {
    if (auto v = c.as_integer())
        return v->str();
    return c.str();
}

inline std::string subset_text(const std::vector<int>& subset) {
    std::string s;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(subset[i]);
    }
    return s;
}

struct Sink {
    std::ostream* stream;
    std::ofstream file;

    explicit Sink(std::ostream& fallback, const std::string& path) {
        if (path.empty()) {
            stream = &fallback;
            return;
        }
        file.open(path);
        if (!file)
            throw std::domain_error("cannot open output file: " + path);
        stream = &file;
    }

    std::ostream& out() { return *stream; }
};

inline Json report_json(const VerificationReport& r) {
    Json j;
    j["theorem"] = r.theorem;
    Json params = Json::object();
    for (const auto& [k, v] : r.params)
        params[k] = v;
    j["params"] = params;
    j["status"] = r.pass ? "pass" : "fail";
    if (r.witness)
        j["witness"] = *r.witness;
    Json detail = Json::object();
    for (const auto& [k, v] : r.detail)
        detail[k] = v;
    j["detail"] = detail;
    return j;
}

inline void print_report_text(std::ostream& os, const VerificationReport& r) {
    os << r.theorem;
    for (const auto& [k, v] : r.params)
        os << ' ' << k << '=' << v;
    os << ": " << (r.pass ? "PASS" : "FAIL");
    os << " (" << std::fixed << std::setprecision(1) << r.elapsed.count() * 1e3
       << " ms)\n";
    os.unsetf(std::ios::fixed);
    for (const auto& [k, v] : r.detail)
        os << "  " << k << ": " << v << '\n';
    if (r.witness)
        os << "  witness: " << *r.witness << '\n';
}

}  // namespace cli_detail

/// 0 when every report passed, 1 otherwise.
inline int exit_code_for(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass)
            return 1;
    return 0;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"partitions with fixed perimeter: exact enumeration, bijections, "
                 "counting and generating functions"};
    app.name("periparts");
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "json", "csv"};

    // --- enumerate ---------------------------------------------------------
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list one of the finite families");
    std::string enum_family;
    int enum_n = 0;
    int enum_d = 0, enum_k = 0;
    std::string enum_format = "text", enum_output;
    enumerate_cmd->add_option("--family", enum_family, "family to enumerate")
        ->required()
        ->check(CLI::IsMember({"perimeter", "size", "extraordinary", "labeled-d", "labeled-m"}));
    enumerate_cmd->add_option("--n", enum_n, "family parameter n")->required();
    enumerate_cmd->add_option("--d", enum_d, "gap/residue parameter d");
    enumerate_cmd->add_option("--k", enum_k, "extraordinary-subset parameter k");
    enumerate_cmd->add_option("--format", enum_format)->check(CLI::IsMember(formats));
    enumerate_cmd->add_option("--output", enum_output, "write to a file instead of stdout");

    // --- map ----------------------------------------------------------------
    auto* map_cmd = app.add_subcommand("map", "apply the bijections or the injection");
    map_cmd->require_subcommand(1);
    auto* apply_cmd = map_cmd->add_subcommand("apply", "apply one map to one input");
    std::string apply_map;
    int apply_d = 1;
    std::string apply_input, apply_format = "text", apply_output;
    apply_cmd->add_option("--map", apply_map, "phi, phi-inverse or xi")
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inverse", "xi"}));
    apply_cmd->add_option("--d", apply_d, "map parameter d")->required();
    apply_cmd->add_option("--input", apply_input, "bits, parts, or labeled parts")->required();
    apply_cmd->add_option("--format", apply_format)->check(CLI::IsMember({"text", "json"}));
    apply_cmd->add_option("--output", apply_output);
    auto* orbit_cmd = map_cmd->add_subcommand("orbit", "iterate phi until the word returns");
    int orbit_d = 1;
    std::string orbit_input, orbit_format = "text", orbit_output;
    orbit_cmd->add_option("--d", orbit_d, "map parameter d")->required();
    orbit_cmd->add_option("--input", orbit_input, "boundary word (01-string)")->required();
    orbit_cmd->add_option("--format", orbit_format)->check(CLI::IsMember({"text", "json"}));
    orbit_cmd->add_option("--output", orbit_output);

    // --- count --------------------------------------------------------------
    auto* count_cmd = app.add_subcommand("count", "recurrence tables and closed-form totals");
    std::string count_what;
    int count_n = 0, count_d = 1;
    bool count_degenerate = false;
    std::string count_format = "text", count_output;
    count_cmd->add_option("--what", count_what, "which counter")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C", "h", "a-odd", "a-even", "sum-dif", "fib"}));
    count_cmd->add_option("--n", count_n)->required();
    count_cmd->add_option("--d", count_d, "gap parameter for sum-dif");
    count_cmd->add_flag("--allow-degenerate", count_degenerate,
                        "allow d >= n in sum-dif and return the limit value");
    count_cmd->add_option("--format", count_format)->check(CLI::IsMember(formats));
    count_cmd->add_option("--output", count_output);

    // --- series -------------------------------------------------------------
    auto* series_cmd = app.add_subcommand("series", "truncated generating-function expansions");
    std::string series_name;
    int series_d = 1, series_order = 0, series_order_y = -1;
    std::string series_at, series_format = "text", series_output;
    series_cmd->add_option("--name", series_name)
        ->required()
        ->check(CLI::IsMember({"rep-even", "dist-even-xy", "mod", "dif", "sum-mod", "sum-dif", "delta"}));
    series_cmd->add_option("--d", series_d, "statistic parameter d");
    series_cmd->add_option("--order", series_order, "truncation order in x")->required();
    series_cmd->add_option("--order-y", series_order_y, "truncation order in y");
    series_cmd->add_option("--at", series_at, "substitutions, e.g. p=2,q=1");
    series_cmd->add_option("--format", series_format)->check(CLI::IsMember(formats));
    series_cmd->add_option("--output", series_output);

    // --- verify -------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "machine-check the theorems");
    std::string verify_theorem;
    int verify_n = 0, verify_d = 0, verify_order = 0, verify_jobs = 1;
    std::string verify_format = "text", verify_output;
    verify_cmd->add_option("--theorem", verify_theorem)
        ->required()
        ->check(CLI::IsMember({"straub", "fu-tang", "rep-even", "rep-even-valued", "wilf", "ineq", "all"}));
    verify_cmd->add_option("--n", verify_n, "n, or the grid bound for 'all'")->required();
    verify_cmd->add_option("--d", verify_d, "d, or the grid bound for 'all'");
    verify_cmd->add_option("--order", verify_order, "series order for 'all'");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads for 'all'");
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--output", verify_output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        using namespace cli_detail;

        if (enumerate_cmd->parsed()) {
            const bool has_d = enumerate_cmd->count("--d") > 0;
            const bool has_k = enumerate_cmd->count("--k") > 0;
            Json params;
            params["family"] = enum_family;
            params["n"] = enum_n;
            std::vector<std::string> rows;
            std::string column = "partition";
            if (enum_family == "perimeter" || enum_family == "size") {
                if (has_d || has_k)
                    throw std::domain_error("--d/--k do not apply to this family");
                const auto items = enum_family == "perimeter" ? partitions_with_perimeter(enum_n)
                                                              : partitions_of(enum_n);
                for (const auto& p : items)
                    rows.push_back(to_text(p));
            } else if (enum_family == "extraordinary") {
                if (!has_k || has_d)
                    throw std::domain_error("extraordinary subsets take --k (and no --d)");
                params["k"] = enum_k;
                column = "subset";
                for (const auto& s : extraordinary_subsets(enum_n, enum_k))
                    rows.push_back(subset_text(s));
            } else {
                if (!has_d || has_k)
                    throw std::domain_error("labeled families take --d (and no --k)");
                params["d"] = enum_d;
                column = "labeled_partition";
                const auto items = enum_family == "labeled-d"
                                       ? small_gap_labelings(enum_n, enum_d)
                                       : noncongruent_labelings(enum_n, enum_d);
                for (const auto& lp : items)
                    rows.push_back(to_text(lp));
            }
            Sink sink(out, enum_output);
            if (enum_format == "text") {
                for (const auto& r : rows)
                    sink.out() << r << '\n';
            } else if (enum_format == "csv") {
                sink.out() << column << '\n';
                for (const auto& r : rows)
                    sink.out() << csv_quote(r) << '\n';
            } else {
                Json j;
                j["command"] = "enumerate";
                j["params"] = params;
                j["rows"] = rows;
                sink.out() << j.dump() << '\n';
            }
            return 0;
        }

        if (apply_cmd->parsed()) {
            std::string image;
            if (apply_map == "xi") {
                if (apply_input.find('*') == std::string::npos)
                    throw std::domain_error("xi needs a labeled partition input, e.g. 3,2*,1");
                image = to_text(labeled_injection(parse_labeled(apply_input), apply_d));
            } else {
                const bool forward = apply_map == "phi";
                if (looks_like_bits(apply_input)) {
                    const auto w = parse_bits(apply_input);
                    image = to_text(forward ? bit_bijection(w, apply_d)
                                            : bit_bijection_inverse(w, apply_d));
                } else if (apply_input.find('*') != std::string::npos) {
                    throw std::domain_error("phi takes a plain partition or a boundary word");
                } else {
                    const auto p = parse_partition(apply_input);
                    image = to_text(forward ? partition_bijection(p, apply_d)
                                            : partition_bijection_inverse(p, apply_d));
                }
            }
            Sink sink(out, apply_output);
            if (apply_format == "text") {
                sink.out() << image << '\n';
            } else {
                Json j;
                j["command"] = "map";
                Json params;
                params["action"] = "apply";
                params["map"] = apply_map;
                params["d"] = apply_d;
                params["input"] = apply_input;
                j["params"] = params;
                j["rows"] = Json::array({image});
                sink.out() << j.dump() << '\n';
            }
            return 0;
        }

        if (orbit_cmd->parsed()) {
            if (!looks_like_bits(orbit_input))
                throw std::domain_error("orbit input must be a boundary word (01-string)");
            const auto report = orbit(parse_bits(orbit_input), orbit_d);
            Sink sink(out, orbit_output);
            if (orbit_format == "text") {
                for (const auto& w : report.cycle)
                    sink.out() << to_text(w) << '\n';
                sink.out() << "length: " << report.length() << '\n';
            } else {
                Json j;
                j["command"] = "map";
                Json params;
                params["action"] = "orbit";
                params["d"] = orbit_d;
                params["input"] = orbit_input;
                j["params"] = params;
                Json rows = Json::array();
                for (const auto& w : report.cycle)
                    rows.push_back(to_text(w));
                j["rows"] = rows;
                sink.out() << j.dump() << '\n';
            }
            return 0;
        }

        if (count_cmd->parsed()) {
            Json params;
            params["what"] = count_what;
            params["n"] = count_n;
            // rows as (k, value) pairs; scalar counters emit a single value
            std::vector<std::pair<int, std::string>> table_rows;
            std::string scalar;
            if (count_what == "A" || count_what == "B") {
                const auto t = count_what == "A" ? repeat_table(count_n) : even_table(count_n);
                for (const auto& [k, v] : t.values)
                    table_rows.emplace_back(k, v.str());
            } else if (count_what == "C") {
                for (const auto& [k, v] : extraordinary_table(count_n).values)
                    table_rows.emplace_back(k, v.str());
            } else if (count_what == "h") {
                const auto h = signed_repeat_poly(count_n);
                for (int k = 0; k <= h.degree(); ++k)
                    table_rows.emplace_back(k, h.coeff(k).str());
            } else if (count_what == "a-odd") {
                scalar = odd_parts_total(count_n).str();
            } else if (count_what == "a-even") {
                scalar = even_parts_total(count_n).str();
            } else if (count_what == "sum-dif") {
                if (count_cmd->count("--d") == 0)
                    throw std::domain_error("sum-dif needs --d");
                params["d"] = count_d;
                if (count_degenerate)
                    params["allow_degenerate"] = true;
                scalar = small_gap_total(count_n, count_d, count_degenerate).str();
            } else {
                scalar = fibonacci(count_n).str();
            }
            const bool is_table = !(count_what == "a-odd" || count_what == "a-even" ||
                                    count_what == "sum-dif" || count_what == "fib");
            Sink sink(out, count_output);
            if (count_format == "text") {
                if (is_table)
                    for (const auto& [k, v] : table_rows)
                        sink.out() << "k=" << k << ": " << v << '\n';
                else
                    sink.out() << scalar << '\n';
            } else if (count_format == "csv") {
                if (is_table) {
                    sink.out() << "n,k,value\n";
                    for (const auto& [k, v] : table_rows)
                        sink.out() << count_n << ',' << k << ',' << v << '\n';
                } else {
                    sink.out() << "n,value\n" << count_n << ',' << scalar << '\n';
                }
            } else {
                Json j;
                j["command"] = "count";
                j["params"] = params;
                Json rows = Json::array();
                if (is_table) {
                    for (const auto& [k, v] : table_rows) {
                        Json row;
                        row["n"] = count_n;
                        row["k"] = k;
                        row["value"] = v;
                        rows.push_back(row);
                    }
                } else {
                    Json row;
                    row["n"] = count_n;
                    row["value"] = scalar;
                    rows.push_back(row);
                }
                j["rows"] = rows;
                sink.out() << j.dump() << '\n';
            }
            return 0;
        }

        if (series_cmd->parsed()) {
            const bool has_d = series_cmd->count("--d") > 0;
            const bool has_y = series_cmd->count("--order-y") > 0;
            const bool needs_d = series_name == "mod" || series_name == "dif" ||
                                 series_name == "sum-mod" || series_name == "sum-dif" ||
                                 series_name == "delta";
            if (needs_d && !has_d)
                throw std::domain_error("series '" + series_name + "' needs --d");
            if (!needs_d && has_d)
                throw std::domain_error("series '" + series_name + "' takes no --d");

            Json params;
            params["name"] = series_name;
            if (needs_d)
                params["d"] = series_d;
            params["order"] = series_order;

            TruncatedSeries series(0);
            if (series_name == "rep-even") {
                if (has_y)
                    throw std::domain_error("rep-even is univariate");
                series = repeat_even_series(series_order);
            } else if (series_name == "dist-even-xy") {
                const int order_y = has_y ? series_order_y : series_order;
                params["order_y"] = order_y;
                series = dist_even_series(series_order, order_y);
            } else if (series_name == "mod") {
                if (has_y) {
                    params["order_y"] = series_order_y;
                    series = residue_xy_series(series_d, series_order, series_order_y);
                } else {
                    series = residue_series(series_d, series_order);
                }
            } else if (series_name == "dif") {
                if (has_y) {
                    params["order_y"] = series_order_y;
                    series = gap_xy_series(series_d, series_order, series_order_y);
                } else {
                    series = gap_series(series_d, series_order);
                }
            } else if (series_name == "sum-mod") {
                if (has_y)
                    throw std::domain_error("sum-mod is univariate");
                series = residue_total_series(series_d, series_order);
            } else if (series_name == "sum-dif") {
                if (has_y)
                    throw std::domain_error("sum-dif is univariate");
                series = gap_total_series(series_d, series_order);
            } else {
                if (has_y)
                    throw std::domain_error("delta is univariate");
                series = delta_series(series_d, series_order).series;
            }

            if (!series_at.empty()) {
                params["at"] = series_at;
                for (auto piece : split(series_at, ',')) {
                    const auto eq = piece.find('=');
                    if (eq == std::string_view::npos)
                        throw std::invalid_argument("bad --at syntax, expected var=value");
                    const auto name = piece.substr(0, eq);
                    const auto value = parse_int64(piece.substr(eq + 1));
                    Var var;
                    if (name == "p")
                        var = Var::p;
                    else if (name == "q")
                        var = Var::q;
                    else if (name == "t")
                        var = Var::t;
                    else
                        throw std::invalid_argument("unknown series variable: '" + std::string(name) + "'");
                    series = series.substitute(var, Polynomial(BigInt(value)));
                }
            }

            Sink sink(out, series_output);
            if (series_format == "text") {
                if (!series.bivariate()) {
                    for (int n = 0; n <= series.order_x(); ++n)
                        sink.out() << (n ? "," : "") << coefficient_text(series.coeff(n));
                    sink.out() << '\n';
                } else {
                    for (int b = 0; b <= series.order_x(); ++b) {
                        sink.out() << "x^" << b << ':';
                        for (int a = 0; a <= *series.order_y(); ++a)
                            sink.out() << (a ? ", " : " ")
                                       << coefficient_text(series.coeff(b, a));
                        sink.out() << '\n';
                    }
                }
            } else if (series_format == "csv") {
                if (!series.bivariate()) {
                    sink.out() << "x_degree,coefficient\n";
                    for (int n = 0; n <= series.order_x(); ++n)
                        sink.out() << n << ',' << csv_quote(coefficient_text(series.coeff(n))) << '\n';
                } else {
                    sink.out() << "x_degree,y_degree,coefficient\n";
                    for (int b = 0; b <= series.order_x(); ++b)
                        for (int a = 0; a <= *series.order_y(); ++a)
                            sink.out() << b << ',' << a << ','
                                       << csv_quote(coefficient_text(series.coeff(b, a))) << '\n';
                }
            } else {
                Json j;
                j["command"] = "series";
                j["params"] = params;
                Json terms = Json::array();
                if (!series.bivariate()) {
                    for (int n = 0; n <= series.order_x(); ++n) {
                        Json term;
                        term["x"] = n;
                        term["coefficient"] = coefficient_text(series.coeff(n));
                        terms.push_back(term);
                    }
                } else {
                    for (int b = 0; b <= series.order_x(); ++b)
                        for (int a = 0; a <= *series.order_y(); ++a) {
                            Json term;
                            term["x"] = b;
                            term["y"] = a;
                            term["coefficient"] = coefficient_text(series.coeff(b, a));
                            terms.push_back(term);
                        }
                }
                j["series"] = terms;
                sink.out() << j.dump() << '\n';
            }
            return 0;
        }

        // verify
        const bool has_d = verify_cmd->count("--d") > 0;
        const bool has_order = verify_cmd->count("--order") > 0;
        Json params;
        params["theorem"] = verify_theorem;
        params["n"] = verify_n;
        std::vector<VerificationReport> reports;
        if (verify_theorem == "straub") {
            reports.push_back(check_straub(verify_n));
        } else if (verify_theorem == "rep-even") {
            reports.push_back(check_rep_even(verify_n));
        } else if (verify_theorem == "rep-even-valued") {
            reports.push_back(check_rep_even_valued(verify_n));
        } else if (verify_theorem == "wilf") {
            reports.push_back(check_wilf(verify_n));
        } else if (verify_theorem == "fu-tang" || verify_theorem == "ineq") {
            const int d = has_d ? verify_d : 1;
            params["d"] = d;
            reports.push_back(verify_theorem == "fu-tang" ? check_fu_tang(verify_n, d)
                                                          : check_ineq(verify_n, d));
        } else {
            const int d_max = has_d ? verify_d : 4;
            const int order = has_order ? verify_order : 14;
            params["d"] = d_max;
            params["order"] = order;
            reports = check_all(verify_n, d_max, order, verify_jobs);
        }

        Sink sink(out, verify_output);
        if (verify_format == "text") {
            for (const auto& r : reports)
                print_report_text(sink.out(), r);
        } else {
            Json j;
            j["command"] = "verify";
            j["params"] = params;
            Json list = Json::array();
            for (const auto& r : reports)
                list.push_back(report_json(r));
            j["report"] = list;
            sink.out() << j.dump() << '\n';
        }
        return exit_code_for(reports);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace periparts

#endif
