#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casson/errors.hpp"

namespace casson {

// One PD crossing X[a,b,c,d]: the four edge labels counterclockwise around
// the crossing, starting at the incoming under-strand. The under-strand
// enters at a and exits at c; the over-strand occupies b and d.
struct PDCrossing {
    std::array<long long, 4> edge{};
    int sign_override = 0;  // 0 = none, else +1 / -1 (from X+ / X- tokens)

    bool operator==(const PDCrossing&) const = default;
};

// Crossingless unknot components have no X-token representation, so a code
// carries their count separately (used by the 0-twist resolved link).
struct PDCode {
    std::vector<PDCrossing> crossings;
    int free_loops = 0;

    bool operator==(const PDCode&) const = default;
};

// Tokens: X[a,b,c,d], X+[a,b,c,d], X-[a,b,c,d], whitespace separated;
// '#' starts a comment to end of line. Every edge label must occur exactly
// twice across all quadruples.
inline PDCode parse_pd(std::string_view text) {
    std::string stripped;
    stripped.reserve(text.size());
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '#') in_comment = true;
        if (ch == '\n') in_comment = false;
        stripped.push_back(in_comment ? ' ' : ch);
    }

    static const std::regex token_re(R"(^X([+-]?)\[([^\]]*)\]$)");
    static const std::regex label_re(R"(^-?[0-9]+$)");

    PDCode code;
    std::map<long long, int> label_count;
    std::istringstream in(stripped);
    std::string tok;
    while (in >> tok) {
        std::smatch m;
        if (!std::regex_match(tok, m, token_re))
            throw Error("MalformedToken", tok);
        PDCrossing x;
        if (m[1] == "+") x.sign_override = 1;
        if (m[1] == "-") x.sign_override = -1;

        std::vector<std::string> parts;
        const std::string inner = m[2];
        std::string cur;
        for (char ch : inner) {
            if (ch == ',') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        parts.push_back(cur);
        if (parts.size() != 4) throw Error("BadArity", tok);
        for (int i = 0; i < 4; ++i) {
            if (!std::regex_match(parts[static_cast<std::size_t>(i)], label_re))
                throw Error("MalformedToken", tok);
            try {
                x.edge[static_cast<std::size_t>(i)] = std::stoll(parts[static_cast<std::size_t>(i)]);
            } catch (const std::out_of_range&) {
                throw Error("MalformedToken", tok);
            }
            ++label_count[x.edge[static_cast<std::size_t>(i)]];
        }
        code.crossings.push_back(x);
    }
    for (const auto& [label, count] : label_count)
        if (count != 2)
            throw Error("EdgeLabelCountViolation",
                        "edge " + std::to_string(label) + " occurs " + std::to_string(count) +
                            " times (expected 2)");
    return code;
}

inline std::string render_pd(const PDCode& code) {
    std::ostringstream out;
    bool first = true;
    for (const auto& x : code.crossings) {
        if (!first) out << " ";
        first = false;
        out << "X";
        if (x.sign_override > 0) out << "+";
        if (x.sign_override < 0) out << "-";
        out << "[" << x.edge[0] << "," << x.edge[1] << "," << x.edge[2] << "," << x.edge[3] << "]";
    }
    return out.str();
}

// A traced crossing. The quadruple is normalized so the under-strand enters
// at slot 0; the sign follows the right-hand rule: positive when the
// over-strand runs d -> b.
struct DiagramCrossing {
    std::array<long long, 4> edge{};
    int under_component = 0;  // 1-based
    int over_component = 0;   // 1-based
    bool over_d_to_b = false;

    int sign() const { return over_d_to_b ? 1 : -1; }

    bool operator==(const DiagramCrossing&) const = default;
};

struct LinkDiagram {
    std::vector<std::vector<long long>> components;  // oriented edge cycles; free loops are empty
    std::vector<DiagramCrossing> crossings;

    int component_count() const { return static_cast<int>(components.size()); }
};

namespace detail {

struct Transit {
    int comp = 0;    // 1-based component, 0 = not yet traversed
    bool flag = false;  // under: entered at slot 0; over: entered at slot 3 (d -> b)
};

}  // namespace detail

// Traces strands into oriented components. Orientation of a component is
// pinned by its under-passes (which must agree, else
// InconsistentOrientation). A component that is everywhere an over-strand
// is oriented so that edge labels increase from its smallest label, unless
// explicit X+/X- overrides force the opposite choice.
inline LinkDiagram trace_components(const PDCode& code) {
    const int nx = static_cast<int>(code.crossings.size());

    // incidences: each edge label -> its two (crossing, slot) positions
    std::map<long long, std::vector<std::pair<int, int>>> inc;
    for (int k = 0; k < nx; ++k)
        for (int p = 0; p < 4; ++p)
            inc[code.crossings[static_cast<std::size_t>(k)].edge[static_cast<std::size_t>(p)]]
                .emplace_back(k, p);
    for (const auto& [label, at] : inc)
        if (at.size() != 2)
            throw Error("EdgeLabelCountViolation",
                        "edge " + std::to_string(label) + " occurs " +
                            std::to_string(at.size()) + " times (expected 2)");

    std::vector<std::vector<long long>> cycles;
    std::vector<detail::Transit> under_t(static_cast<std::size_t>(nx));
    std::vector<detail::Transit> over_t(static_cast<std::size_t>(nx));
    std::map<long long, bool> visited;
    for (const auto& [label, at] : inc) visited[label] = false;

    const auto edge_at = [&](int k, int p) {
        return code.crossings[static_cast<std::size_t>(k)].edge[static_cast<std::size_t>(p)];
    };

    for (auto& [start_edge, seen] : visited) {
        if (seen) continue;
        const int comp = static_cast<int>(cycles.size()) + 1;
        std::vector<long long> cycle;
        // heading: the incidence we are about to pass through
        const std::pair<int, int> initial = *std::min_element(inc[start_edge].begin(), inc[start_edge].end());
        long long e = start_edge;
        std::pair<int, int> heading = initial;
        while (true) {
            cycle.push_back(e);
            visited[e] = true;
            const auto [k, p] = heading;
            const int q = p ^ 2;
            detail::Transit& t = (p % 2 == 0) ? under_t[static_cast<std::size_t>(k)]
                                              : over_t[static_cast<std::size_t>(k)];
            if (t.comp != 0) throw std::logic_error("crossing traversed twice on the same strand");
            t.comp = comp;
            t.flag = (p % 2 == 0) ? (p == 0) : (p == 3);
            const long long e2 = edge_at(k, q);
            const auto& two = inc[e2];
            const std::pair<int, int> arrived{k, q};
            const std::pair<int, int> next = (two[0] == arrived) ? two[1] : two[0];
            if (e2 == start_edge && next == initial) break;
            e = e2;
            heading = next;
        }
        cycles.push_back(std::move(cycle));
    }

    for (int k = 0; k < nx; ++k)
        if (under_t[static_cast<std::size_t>(k)].comp == 0 || over_t[static_cast<std::size_t>(k)].comp == 0)
            throw std::logic_error("crossing with missing strand traversal");

    const int ncomp = static_cast<int>(cycles.size());
    std::vector<int> under_fwd(static_cast<std::size_t>(ncomp), 0);
    std::vector<int> under_bwd(static_cast<std::size_t>(ncomp), 0);
    for (int k = 0; k < nx; ++k) {
        const auto& t = under_t[static_cast<std::size_t>(k)];
        (t.flag ? under_fwd : under_bwd)[static_cast<std::size_t>(t.comp - 1)] += 1;
    }

    std::vector<bool> flip(static_cast<std::size_t>(ncomp), false);
    std::vector<bool> free_orientation(static_cast<std::size_t>(ncomp), false);
    for (int c = 0; c < ncomp; ++c) {
        const int fwd = under_fwd[static_cast<std::size_t>(c)];
        const int bwd = under_bwd[static_cast<std::size_t>(c)];
        if (fwd > 0 && bwd > 0)
            throw Error("InconsistentOrientation",
                        "under-passes of component " + std::to_string(c + 1) + " disagree");
        if (fwd == 0 && bwd == 0) {
            free_orientation[static_cast<std::size_t>(c)] = true;
            // label heuristic: the successor of the smallest edge label is
            // its smaller-labeled cycle neighbour
            const auto& cy = cycles[static_cast<std::size_t>(c)];
            const std::size_t len = cy.size();
            if (len >= 3) {
                const std::size_t at = static_cast<std::size_t>(
                    std::min_element(cy.begin(), cy.end()) - cy.begin());
                const long long succ = cy[(at + 1) % len];
                const long long pred = cy[(at + len - 1) % len];
                if (pred < succ) flip[static_cast<std::size_t>(c)] = true;
            }
        } else if (bwd > 0) {
            flip[static_cast<std::size_t>(c)] = true;
        }
    }

    const auto apply_flips = [&](const std::vector<bool>& fl) {
        for (int c = 0; c < ncomp; ++c)
            if (fl[static_cast<std::size_t>(c)])
                std::reverse(cycles[static_cast<std::size_t>(c)].begin(),
                             cycles[static_cast<std::size_t>(c)].end());
        for (int k = 0; k < nx; ++k) {
            auto& u = under_t[static_cast<std::size_t>(k)];
            auto& o = over_t[static_cast<std::size_t>(k)];
            if (fl[static_cast<std::size_t>(u.comp - 1)]) u.flag = !u.flag;
            if (fl[static_cast<std::size_t>(o.comp - 1)]) o.flag = !o.flag;
        }
    };
    apply_flips(flip);

    // explicit sign overrides: beat the heuristic on freely-oriented
    // components, must agree everywhere else
    for (int c = 0; c < ncomp; ++c) {
        if (!free_orientation[static_cast<std::size_t>(c)]) continue;
        bool any_mismatch = false, any_match = false;
        for (int k = 0; k < nx; ++k) {
            const auto& x = code.crossings[static_cast<std::size_t>(k)];
            if (x.sign_override == 0 || over_t[static_cast<std::size_t>(k)].comp != c + 1) continue;
            const int s = over_t[static_cast<std::size_t>(k)].flag ? 1 : -1;
            (s == x.sign_override ? any_match : any_mismatch) = true;
        }
        if (any_mismatch && any_match)
            throw Error("InconsistentOrientation",
                        "sign overrides on component " + std::to_string(c + 1) + " conflict");
        if (any_mismatch) {
            std::vector<bool> one(static_cast<std::size_t>(ncomp), false);
            one[static_cast<std::size_t>(c)] = true;
            apply_flips(one);
        }
    }

    // anchor every cycle at its smallest edge label
    for (auto& cy : cycles)
        if (!cy.empty()) std::rotate(cy.begin(), std::min_element(cy.begin(), cy.end()), cy.end());

    LinkDiagram d;
    d.components = std::move(cycles);
    for (int i = 0; i < code.free_loops; ++i) d.components.emplace_back();
    for (int k = 0; k < nx; ++k) {
        DiagramCrossing dc;
        dc.edge = code.crossings[static_cast<std::size_t>(k)].edge;
        const auto& u = under_t[static_cast<std::size_t>(k)];
        const auto& o = over_t[static_cast<std::size_t>(k)];
        // after the flips every under-pass runs a -> c
        if (!u.flag) throw std::logic_error("under transit not normalized");
        dc.under_component = u.comp;
        dc.over_component = o.comp;
        dc.over_d_to_b = o.flag;
        const int ov = code.crossings[static_cast<std::size_t>(k)].sign_override;
        if (ov != 0 && ov != dc.sign())
            throw Error("InconsistentOrientation",
                        "declared sign of crossing " + std::to_string(k + 1) +
                            " contradicts the traced orientation");
        d.crossings.push_back(dc);
    }
    return d;
}

// Half the signed sum over crossings where one strand lies on c1 and the
// other on c2 (1-based ids). Self-crossings are ignored by definition.
inline long long linking_number(const LinkDiagram& d, int c1, int c2) {
    const int n = d.component_count();
    if (c1 < 1 || c1 > n || c2 < 1 || c2 > n)
        throw Error("UnknownComponent",
                    "diagram has " + std::to_string(n) + " components");
    if (c1 == c2) throw Error("UnknownComponent", "component ids must be distinct");
    long long sum = 0;
    for (const auto& x : d.crossings) {
        const bool mixed = (x.under_component == c1 && x.over_component == c2) ||
                           (x.under_component == c2 && x.over_component == c1);
        if (mixed) sum += x.sign();
    }
    if (sum % 2 != 0) throw Error("OddMixedSignSum", "mixed crossing signs sum to " + std::to_string(sum));
    return sum / 2;
}

// Reverses the orientation of one component; every crossing with exactly
// one strand on it changes sign.
inline LinkDiagram reverse_component(const LinkDiagram& d, int c) {
    const int n = d.component_count();
    if (c < 1 || c > n)
        throw Error("UnknownComponent", "diagram has " + std::to_string(n) + " components");
    LinkDiagram r = d;
    auto& cycle = r.components[static_cast<std::size_t>(c - 1)];
    std::reverse(cycle.begin(), cycle.end());
    if (!cycle.empty()) std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    for (auto& x : r.crossings) {
        if (x.over_component == c) x.over_d_to_b = !x.over_d_to_b;
        if (x.under_component == c) {
            x.edge = {x.edge[2], x.edge[3], x.edge[0], x.edge[1]};
            x.over_d_to_b = !x.over_d_to_b;
        }
    }
    return r;
}

// Canonical PD code of the two-component link obtained by resolving the
// clasp of an n-twisted double: a closed twist region with 2|n| crossings
// and linking number -n. n = 0 gives the crossingless two-component unlink.
inline PDCode twist_region_link(long long n) {
    PDCode code;
    if (n == 0) {
        code.free_loops = 2;
        return code;
    }
    const long long m = n < 0 ? -n : n;
    const long long len = 2 * m;
    const auto a = [&](long long i) { return (i % len) + 1; };
    const auto b = [&](long long i) { return len + (i % len) + 1; };
    for (long long i = 0; i < len; ++i) {
        PDCrossing x;
        const bool even = (i % 2 == 0);
        if (n < 0) {
            // positive crossings: lk = +m = -n
            x.edge = even ? std::array<long long, 4>{a(i), b(i + 1), a(i + 1), b(i)}
                          : std::array<long long, 4>{b(i), a(i + 1), b(i + 1), a(i)};
        } else {
            // negative crossings: lk = -m = -n
            x.edge = even ? std::array<long long, 4>{a(i), b(i), a(i + 1), b(i + 1)}
                          : std::array<long long, 4>{b(i), a(i), b(i + 1), a(i + 1)};
        }
        code.crossings.push_back(x);
    }
    return code;
}

}  // namespace casson
