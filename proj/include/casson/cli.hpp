#pragma once

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casson/errors.hpp"
#include "casson/integer.hpp"
#include "casson/intform.hpp"
#include "casson/kirby.hpp"
#include "casson/knots.hpp"
#include "casson/laurent.hpp"
#include "casson/matrix.hpp"
#include "casson/pdcode.hpp"
#include "casson/surgery_table.hpp"

namespace casson::cli {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json integer_json(const Integer& v) {
    static const Integer lo = std::numeric_limits<long long>::min();
    static const Integer hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();  // too wide for a JSON number
}

inline long long parse_ll(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError(what, "'" + text + "' is not an integer");
    }
}

// `a..b`, inclusive on both ends; a > b yields the empty range.
inline std::pair<long long, long long> parse_range(const std::string& text) {
    static const std::regex range_re(R"(^(-?[0-9]+)\.\.(-?[0-9]+)$)");
    std::smatch m;
    if (!std::regex_match(text, m, range_re))
        throw CLI::ValidationError("--range", "'" + text + "' is not of the form a..b");
    return {parse_ll(m[1], "--range"), parse_ll(m[2], "--range")};
}

inline std::vector<long long> range_values(const std::string& n_text, const std::string& range_text) {
    if (n_text.empty() == range_text.empty())
        throw CLI::ValidationError("exactly one of --n and --range is required");
    std::vector<long long> ns;
    if (!n_text.empty()) {
        ns.push_back(parse_ll(n_text, "--n"));
    } else {
        const auto [lo, hi] = parse_range(range_text);
        for (long long n = lo; n <= hi; ++n) ns.push_back(n);
    }
    return ns;
}

inline int parse_surgery_sign(const std::string& text) {
    if (text == "+1" || text == "1") return 1;
    if (text == "-1") return -1;
    throw CLI::ValidationError("--surgery", "'" + text + "' is not +1 or -1");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("FileNotReadable", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << line << "\n";
    }
}

inline std::string presentation_str(const TheoremRow& row, const RowPresentation& p, long long n) {
    return std::string("S^3_{") + (p.surgery_sign > 0 ? "+1" : "-1") + "}(" +
           to_string(row.double_for(p, n)) + ")";
}

inline std::string verdict_str(const Verdict& v) {
    std::string s = to_string(v.value);
    if (!v.citations.empty()) s += " (" + join(v.citations, ", ") + ")";
    return s;
}

}  // namespace detail

// Dispatches one invocation; writes results to `out`, diagnostics to `err`.
// Exit status: 0 success, 1 domain error, 2 usage error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Casson and Rohlin invariants of homology spheres from two-knot surgery diagrams"};
    app.require_subcommand(1);

    std::string knot_text, surgery_text, n_text, range_text;
    std::string k1_text, k2_text;
    std::string moves_path, start_path, pd_path, components_text, matrix_path;
    bool json = false;

    auto* inv = app.add_subcommand("invariant", "Casson knot invariant, optionally of a +-1-surgery");
    inv->add_option("--knot", knot_text, "knot spec, e.g. double(trefoil-r, 6, +)")->required();
    inv->add_option("--surgery", surgery_text, "+1 or -1: report the surgered manifold's invariant");
    inv->add_flag("--json", json, "emit JSON");

    auto* table = app.add_subcommand("table", "evaluate the five-row surgery table");
    table->add_option("--n", n_text, "single twist parameter (use --n=-3 for negatives)");
    table->add_option("--range", range_text, "inclusive range a..b (use --range=-12..12)");
    table->add_flag("--json", json, "emit JSON");

    auto* appx = app.add_subcommand("appendix", "intersection-form reports for the forms A(n), B(n)");
    appx->add_option("--n", n_text, "single twist parameter");
    appx->add_option("--range", range_text, "inclusive range a..b");
    appx->add_flag("--json", json, "emit JSON");

    auto* verd = app.add_subcommand("verdict", "does M_n(K1, K2) bound a contractible 4-manifold?");
    verd->add_option("--k1", k1_text, "first knot")->required();
    verd->add_option("--k2", k2_text, "second knot")->required();
    verd->add_option("--n", n_text, "twist parameter")->required();
    verd->add_flag("--json", json, "emit JSON");

    auto* kirby = app.add_subcommand("kirby", "apply a Kirby move script to a linking matrix");
    kirby->add_option("--file", moves_path, "move script")->required();
    kirby->add_option("--start", start_path, "matrix file (first line n, then n rows)")->required();
    kirby->add_flag("--json", json, "emit JSON");

    auto* lk = app.add_subcommand("lk", "linking number of two components of a PD code");
    lk->add_option("--pd", pd_path, "PD file")->required();
    lk->add_option("--components", components_text, "pair a,b of 1-based component ids")->required();

    auto* cls = app.add_subcommand("classify", "invariants and classification of a symmetric form");
    cls->add_option("--matrix", matrix_path, "matrix file")->required();
    cls->add_flag("--json", json, "emit JSON");

    inv->callback([&] {
        const KnotSpec k = parse_knot(knot_text);
        const KnotInvariantRecord rec = knot_record(k);
        std::optional<int> eps;
        if (!surgery_text.empty()) eps = detail::parse_surgery_sign(surgery_text);
        std::optional<long long> lambda;
        if (eps) lambda = casson_surgery(k, *eps);
        if (json) {
            Json doc;
            doc["schema"] = 1;
            doc["knot"] = to_string(k);
            doc["alexander"] = rec.alexander.to_string();
            doc["a2"] = rec.a2;
            doc["lambda_prime"] = rec.casson_prime;
            if (eps) {
                doc["surgery"] = *eps > 0 ? "+1" : "-1";
                doc["lambda"] = *lambda;
            }
            out << doc.dump(2) << "\n";
        } else {
            out << "knot: " << to_string(k) << "\n";
            out << "alexander: " << rec.alexander.to_string() << "\n";
            out << "a2: " << rec.a2 << "\n";
            out << "lambda': " << rec.casson_prime << "\n";
            if (eps) {
                out << "surgery: " << (*eps > 0 ? "+1" : "-1") << "\n";
                out << "lambda: " << *lambda << "\n";
            }
        }
    });

    table->callback([&] {
        const std::vector<long long> ns = detail::range_values(n_text, range_text);
        const auto& rows = theorem_table();
        if (json) {
            Json results = Json::array();
            for (const long long n : ns)
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    const TheoremRow& row = rows[r];
                    Json e;
                    e["n"] = n;
                    e["row"] = r + 1;
                    e["k1"] = to_string(row.k1);
                    e["k2"] = to_string(row.k2);
                    Json pres = Json::array();
                    for (const auto& p : row.presentations)
                        pres.push_back(detail::presentation_str(row, p, n));
                    e["presentations"] = pres;
                    e["lambda"] = casson_of_Mn(row.k1, row.k2, n);
                    e["mu"] = rohlin_of_Mn(row.k1, row.k2, n);
                    const Verdict v = bounding_verdict(row.k1, row.k2, n);
                    e["verdict"] = to_string(v.value);
                    e["citations"] = v.citations;
                    results.push_back(e);
                }
            Json doc;
            doc["schema"] = 1;
            doc["results"] = results;
            out << doc.dump(2) << "\n";
        } else {
            std::vector<std::vector<std::string>> cells;
            cells.push_back({"n", "row", "M_n(K1, K2)", "presentation(s)", "lambda", "mu", "verdict"});
            for (const long long n : ns)
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    const TheoremRow& row = rows[r];
                    std::vector<std::string> pres;
                    for (const auto& p : row.presentations)
                        pres.push_back(detail::presentation_str(row, p, n));
                    cells.push_back({std::to_string(n), std::to_string(r + 1),
                                     "M(" + to_string(row.k1) + ", " + to_string(row.k2) + ")",
                                     detail::join(pres, " = "),
                                     std::to_string(casson_of_Mn(row.k1, row.k2, n)),
                                     std::to_string(rohlin_of_Mn(row.k1, row.k2, n)),
                                     detail::verdict_str(bounding_verdict(row.k1, row.k2, n))});
                }
            detail::print_aligned(out, cells);
        }
    });

    appx->callback([&] {
        const std::vector<long long> ns = detail::range_values(n_text, range_text);
        if (json) {
            Json results = Json::array();
            for (const long long n : ns) {
                const AppendixReport r = appendix_report(n);
                Json e;
                e["n"] = r.n;
                e["detA"] = detail::integer_json(r.det_a);
                e["indexA"] = r.index_a;
                e["parityA"] = to_string(r.parity_a);
                e["detB"] = detail::integer_json(r.det_b);
                e["indexB"] = r.index_b;
                e["parityB"] = to_string(r.parity_b);
                e["mu"] = r.mu;
                e["mu_via_casson"] = r.mu_via_casson;
                results.push_back(e);
            }
            Json doc;
            doc["schema"] = 1;
            doc["results"] = results;
            out << doc.dump(2) << "\n";
        } else {
            std::vector<std::vector<std::string>> cells;
            cells.push_back({"n", "detA", "indexA", "parityA", "detB", "indexB", "parityB", "mu", "mu_via_casson"});
            for (const long long n : ns) {
                const AppendixReport r = appendix_report(n);
                cells.push_back({std::to_string(r.n), r.det_a.str(), std::to_string(r.index_a),
                                 to_string(r.parity_a), r.det_b.str(), std::to_string(r.index_b),
                                 to_string(r.parity_b), std::to_string(r.mu),
                                 std::to_string(r.mu_via_casson)});
            }
            detail::print_aligned(out, cells);
        }
    });

    verd->callback([&] {
        const KnotSpec k1 = parse_knot(k1_text);
        const KnotSpec k2 = parse_knot(k2_text);
        const long long n = detail::parse_ll(n_text, "--n");
        const int row = theorem_row_number(k1, k2);
        const Verdict v = bounding_verdict(k1, k2, n);
        if (json) {
            Json doc;
            doc["schema"] = 1;
            doc["n"] = n;
            doc["row"] = row;
            doc["k1"] = to_string(k1);
            doc["k2"] = to_string(k2);
            doc["lambda"] = casson_of_Mn(k1, k2, n);
            doc["mu"] = rohlin_of_Mn(k1, k2, n);
            doc["verdict"] = to_string(v.value);
            doc["citations"] = v.citations;
            out << doc.dump(2) << "\n";
        } else {
            out << detail::verdict_str(v) << "\n";
        }
    });

    kirby->callback([&] {
        const SymIntMatrix start = read_matrix_text(detail::read_file(start_path));
        const std::vector<KirbyMove> moves = parse_move_script(detail::read_file(moves_path));
        const FramedPresentation result = apply_moves(presentation_of(start), moves);
        const BoundaryReport b = boundary_report(result);
        if (json) {
            Json doc;
            doc["schema"] = 1;
            doc["size"] = result.size();
            doc["labels"] = result.labels;
            Json m = Json::array();
            for (int i = 0; i < result.size(); ++i) {
                Json row = Json::array();
                for (int j = 0; j < result.size(); ++j)
                    row.push_back(detail::integer_json(result.matrix.at(i, j)));
                m.push_back(row);
            }
            doc["matrix"] = m;
            doc["det"] = detail::integer_json(b.determinant);
            doc["h1_order"] = b.first_homology_finite ? detail::integer_json(b.first_homology_order)
                                                      : Json("infinite");
            doc["homology_sphere"] = b.is_homology_sphere;
            out << doc.dump(2) << "\n";
        } else {
            out << "components: " << result.size() << "\n";
            out << "labels: " << detail::join(result.labels, " ") << "\n";
            out << "matrix:\n";
            write_matrix_text(out, result.matrix);
            out << "det: " << b.determinant << "\n";
            out << "H1 order: ";
            if (b.first_homology_finite)
                out << b.first_homology_order << "\n";
            else
                out << "infinite\n";
            out << "homology sphere: " << (b.is_homology_sphere ? "true" : "false") << "\n";
        }
    });

    lk->callback([&] {
        static const std::regex pair_re(R"(^([0-9]+),([0-9]+)$)");
        std::smatch m;
        if (!std::regex_match(components_text, m, pair_re))
            throw CLI::ValidationError("--components", "'" + components_text + "' is not of the form a,b");
        const PDCode code = parse_pd(detail::read_file(pd_path));
        const LinkDiagram diagram = trace_components(code);
        out << linking_number(diagram, static_cast<int>(detail::parse_ll(m[1], "--components")),
                              static_cast<int>(detail::parse_ll(m[2], "--components")))
            << "\n";
    });

    cls->callback([&] {
        const SymIntMatrix mtx = read_matrix_text(detail::read_file(matrix_path));
        const Integer det = det_exact(mtx);
        const InertiaTriple t = inertia(mtx);
        const Parity par = parity_type(mtx);
        const bool uni = det == 1 || det == -1;
        const FormClass fc = classify_unimodular(mtx);  // Degenerate/NotUnimodular surface here
        std::optional<int> mu;
        if (uni && par == Parity::Even) mu = rohlin_mu(mtx);
        if (json) {
            Json doc;
            doc["schema"] = 1;
            doc["size"] = mtx.size();
            doc["det"] = detail::integer_json(det);
            doc["inertia"] = {{"positive", t.positive}, {"negative", t.negative}, {"zero", t.zero}};
            doc["index"] = t.positive - t.negative;
            doc["parity"] = to_string(par);
            doc["unimodular"] = uni;
            doc["class"] = to_string(fc);
            if (mu) doc["rohlin_mu"] = *mu;
            out << doc.dump(2) << "\n";
        } else {
            out << "size: " << mtx.size() << "\n";
            out << "det: " << det << "\n";
            out << "inertia: " << to_string(t) << "\n";
            out << "index: " << (t.positive - t.negative) << "\n";
            out << "parity: " << to_string(par) << "\n";
            out << "unimodular: " << (uni ? "true" : "false") << "\n";
            out << "class: " << to_string(fc) << "\n";
            if (mu) out << "rohlin_mu: " << *mu << "\n";
        }
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace casson::cli
