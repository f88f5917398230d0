#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casson/errors.hpp"
#include "casson/integer.hpp"
#include "casson/intform.hpp"
#include "casson/matrix.hpp"

namespace casson {

// Framed-link surgery presentation at the linking-matrix level: framings on
// the diagonal, pairwise linking numbers off it. The diagram itself is not
// modeled; every numerical claim lives in the matrix.
struct FramedPresentation {
    SymIntMatrix matrix;
    std::vector<std::string> labels;

    int size() const { return matrix.size(); }

    bool operator==(const FramedPresentation&) const = default;
};

inline FramedPresentation presentation_of(SymIntMatrix m) {
    FramedPresentation p;
    p.labels.reserve(static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i) p.labels.push_back("c" + std::to_string(i + 1));
    p.matrix = std::move(m);
    return p;
}

// The two-component diagram of Figure-1 type: a 0-framed K1 and an n-framed
// K2 forming a simple link, linking number +1. The boundary is a homology
// sphere for every n.
inline FramedPresentation wn_presentation(long long n) {
    FramedPresentation p;
    p.matrix = SymIntMatrix(2);
    p.matrix.set(0, 1, 1);
    p.matrix.set(1, 1, n);
    p.labels = {"K1", "K2"};
    return p;
}

namespace detail {

inline void check_component(const FramedPresentation& p, int i) {
    if (i < 0 || i >= p.size())
        throw Error("BadComponentIndex", "component " + std::to_string(i + 1) +
                                             " of " + std::to_string(p.size()));
}

inline void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw Error("BadSign", std::to_string(sign));
}

// row/col `target` += k * row/col `source`: the congruence E = I + k*e_{s,t}.
inline SymIntMatrix slide_multiple(const SymIntMatrix& m, int target, int source, const Integer& k) {
    IntMatrix e = IntMatrix::identity(m.size());
    e.at(source, target) = k;
    return congruence_apply(m, e);
}

}  // namespace detail

// Adds an unlinked +-1-framed unknot: index changes by the sign, |det| and
// the boundary are unchanged.
inline FramedPresentation blow_up(const FramedPresentation& p, int sign) {
    detail::check_sign(sign);
    FramedPresentation r;
    r.matrix = p.matrix.direct_sum(SymIntMatrix::diagonal({sign}));
    r.labels = p.labels;
    r.labels.push_back("e" + std::to_string(p.size() + 1));
    return r;
}

// Removes component i with framing +-1. Components linking it are first
// slid off it (with integer multiples, applied automatically), then the
// row and column are deleted. |det| and the boundary are unchanged.
inline FramedPresentation blow_down(const FramedPresentation& p, int i) {
    detail::check_component(p, i);
    const Integer f = p.matrix.at(i, i);
    if (f != 1 && f != -1)
        throw Error("FramingNotUnit", "component " + std::to_string(i + 1) +
                                          " has framing " + f.str());
    SymIntMatrix m = p.matrix;
    for (int j = 0; j < m.size(); ++j) {
        if (j == i || m.at(j, i) == 0) continue;
        m = detail::slide_multiple(m, j, i, -m.at(j, i) * f);
    }
    FramedPresentation r;
    r.matrix = m.with_deleted(i);
    r.labels = p.labels;
    r.labels.erase(r.labels.begin() + i);
    return r;
}

// Slides component i over component j: the congruence E = I + sign*e_{ji}.
// The new framing of i is f_i + f_j + 2*sign*lk(i,j); det and inertia are
// preserved exactly.
inline FramedPresentation handle_slide(const FramedPresentation& p, int i, int j, int sign) {
    detail::check_component(p, i);
    detail::check_component(p, j);
    detail::check_sign(sign);
    if (i == j) throw Error("SameComponent", "cannot slide component " + std::to_string(i + 1) +
                                                 " over itself");
    FramedPresentation r;
    r.matrix = detail::slide_multiple(p.matrix, i, j, sign);
    r.labels = p.labels;
    return r;
}

struct BoundaryReport {
    Integer determinant;
    bool first_homology_finite = false;
    Integer first_homology_order;  // meaningful only when finite
    bool is_homology_sphere = false;

    bool operator==(const BoundaryReport&) const = default;
};

inline BoundaryReport boundary_report(const FramedPresentation& p) {
    BoundaryReport r;
    r.determinant = det_exact(p.matrix);
    r.first_homology_finite = r.determinant != 0;
    if (r.first_homology_finite)
        r.first_homology_order = r.determinant < 0 ? Integer(-r.determinant) : r.determinant;
    r.is_homology_sphere = r.first_homology_order == 1 && r.first_homology_finite;
    return r;
}

// Intersection form of the closed 4-manifold glued from two handlebodies
// with the same homology-sphere boundary: P1.matrix (+) -P2.matrix.
// Whether the boundaries really match is the caller's responsibility.
inline SymIntMatrix union_closed_form(const FramedPresentation& p1, const FramedPresentation& p2) {
    if (!boundary_report(p1).is_homology_sphere)
        throw Error("NotHomologySphereBoundary", "first presentation");
    if (!boundary_report(p2).is_homology_sphere)
        throw Error("NotHomologySphereBoundary", "second presentation");
    return p1.matrix.direct_sum(p2.matrix.negated());
}

// The 10x10 intersection form of the 4-manifold Q1; the (6,6) entry is
// n - 6. Blank entries of the source table are 0. Even type iff n is even;
// index 0 and |det| = 1 for every n.
inline SymIntMatrix appendix_matrix_A(long long n) {
    SymIntMatrix m(10);
    const auto s = [&](int i, int j, long long v) { m.set(i - 1, j - 1, Integer(v)); };
    s(1, 1, -2); s(1, 4, 1);
    s(2, 2, 2); s(2, 3, 1);
    s(3, 3, 2); s(3, 4, 1);
    s(4, 4, 0); s(4, 5, 1);
    s(5, 5, -6); s(5, 6, 1);
    s(6, 6, n - 6); s(6, 7, 1);
    s(7, 7, 0); s(7, 8, 1); s(7, 10, 1);
    s(8, 8, 2); s(8, 9, 1);
    s(9, 9, 2);
    s(10, 10, -2);
    return m;
}

// The 14x14 intersection form of the 4-manifold Q2; the (10,10) entry is
// n - 5. Even type iff n is odd; index 8 and |det| = 1 for every n.
inline SymIntMatrix appendix_matrix_B(long long n) {
    SymIntMatrix m(14);
    const auto s = [&](int i, int j, long long v) { m.set(i - 1, j - 1, Integer(v)); };
    s(1, 1, 2); s(1, 4, 1);
    s(2, 2, 2); s(2, 3, 1);
    s(3, 3, 2); s(3, 4, 1);
    s(4, 4, 2); s(4, 5, 1);
    s(5, 5, 2); s(5, 6, 1);
    s(6, 6, 2); s(6, 7, 1);
    s(7, 7, 2); s(7, 8, 1);
    s(8, 8, 2); s(8, 9, 1);
    s(9, 9, 2); s(9, 10, 1);
    s(10, 10, n - 5); s(10, 11, 1);
    s(11, 11, 0); s(11, 12, 1); s(11, 14, 1);
    s(12, 12, 2); s(12, 13, 1);
    s(13, 13, 2);
    s(14, 14, -2);
    return m;
}

// --- move scripts: `blowup +1|-1`, `blowdown <i>`, `slide <i> <j> +1|-1`,
// 1-based indices, '#' comments ---

struct KirbyMove {
    enum class Kind { BlowUp, BlowDown, Slide };

    Kind kind = Kind::BlowUp;
    int sign = 0;  // BlowUp, Slide
    int i = 0;     // 0-based (scripts are 1-based)
    int j = 0;

    bool operator==(const KirbyMove&) const = default;
};

namespace detail {

inline int parse_move_sign(const std::string& tok, int lineno) {
    if (tok == "+1") return 1;
    if (tok == "-1") return -1;
    throw Error("MalformedMoveScript",
                "line " + std::to_string(lineno) + ": expected +1 or -1, got '" + tok + "'");
}

inline int parse_move_index(const std::string& tok, int lineno) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
        return static_cast<int>(v - 1);
    } catch (const std::exception&) {
        throw Error("MalformedMoveScript",
                    "line " + std::to_string(lineno) + ": bad component index '" + tok + "'");
    }
}

}  // namespace detail

inline std::vector<KirbyMove> parse_move_script(std::istream& in) {
    std::vector<KirbyMove> moves;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) continue;
        KirbyMove m;
        std::string t1, t2, extra;
        if (op == "blowup") {
            m.kind = KirbyMove::Kind::BlowUp;
            if (!(ls >> t1))
                throw Error("MalformedMoveScript", "line " + std::to_string(lineno) + ": blowup needs a sign");
            m.sign = detail::parse_move_sign(t1, lineno);
        } else if (op == "blowdown") {
            m.kind = KirbyMove::Kind::BlowDown;
            if (!(ls >> t1))
                throw Error("MalformedMoveScript", "line " + std::to_string(lineno) + ": blowdown needs an index");
            m.i = detail::parse_move_index(t1, lineno);
        } else if (op == "slide") {
            m.kind = KirbyMove::Kind::Slide;
            if (!(ls >> t1 >> t2))
                throw Error("MalformedMoveScript", "line " + std::to_string(lineno) + ": slide needs two indices and a sign");
            m.i = detail::parse_move_index(t1, lineno);
            m.j = detail::parse_move_index(t2, lineno);
            std::string ts;
            if (!(ls >> ts))
                throw Error("MalformedMoveScript", "line " + std::to_string(lineno) + ": slide needs a sign");
            m.sign = detail::parse_move_sign(ts, lineno);
        } else {
            throw Error("MalformedMoveScript",
                        "line " + std::to_string(lineno) + ": unknown move '" + op + "'");
        }
        if (ls >> extra)
            throw Error("MalformedMoveScript",
                        "line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        moves.push_back(m);
    }
    return moves;
}

inline std::vector<KirbyMove> parse_move_script(const std::string& text) {
    std::istringstream in(text);
    return parse_move_script(in);
}

inline FramedPresentation apply_move(const FramedPresentation& p, const KirbyMove& m) {
    switch (m.kind) {
        case KirbyMove::Kind::BlowUp: return blow_up(p, m.sign);
        case KirbyMove::Kind::BlowDown: return blow_down(p, m.i);
        case KirbyMove::Kind::Slide: return handle_slide(p, m.i, m.j, m.sign);
    }
    throw std::logic_error("unhandled move kind");
}

inline FramedPresentation apply_moves(FramedPresentation p, const std::vector<KirbyMove>& moves) {
    for (const auto& m : moves) p = apply_move(p, m);
    return p;
}

}  // namespace casson
