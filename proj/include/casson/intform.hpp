#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "casson/errors.hpp"
#include "casson/integer.hpp"
#include "casson/matrix.hpp"

namespace casson {

struct InertiaTriple {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    bool operator==(const InertiaTriple&) const = default;
};

inline std::string to_string(const InertiaTriple& t) {
    return "(" + std::to_string(t.positive) + "," + std::to_string(t.negative) + "," +
           std::to_string(t.zero) + ")";
}

// Sylvester inertia by symmetric congruence diagonalization over the
// rationals. Pivoting is deterministic: the first nonzero diagonal entry of
// the active block; if the active diagonal is all zero, the first nonzero
// off-diagonal pair (i,j) gets the congruence row/col i += row/col j, which
// puts 2*m[i][j] on the diagonal.
inline InertiaTriple inertia(const SymIntMatrix& m) {
    const int n = m.size();
    std::vector<Rational> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = Rational(m.at(i, j));
    auto e = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i) * n + j]; };

    InertiaTriple t;
    int k = 0;
    while (k < n) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (e(i, i) != 0) {
                p = i;
                break;
            }
        if (p < 0) {
            int pi = -1, pj = -1;
            for (int i = k; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (e(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) {
                t.zero += n - k;  // active block is identically zero
                break;
            }
            for (int j = k; j < n; ++j) e(pi, j) += e(pj, j);
            for (int i = k; i < n; ++i) e(i, pi) += e(i, pj);
            continue;
        }
        if (p != k) {
            for (int j = k; j < n; ++j) std::swap(e(k, j), e(p, j));
            for (int i = k; i < n; ++i) std::swap(e(i, k), e(i, p));
        }
        const Rational pivot = e(k, k);
        if (pivot > 0)
            ++t.positive;
        else
            ++t.negative;
        for (int i = k + 1; i < n; ++i) {
            if (e(i, k) == 0) continue;
            const Rational f = e(i, k) / pivot;
            for (int j = k; j < n; ++j) e(i, j) -= f * e(k, j);
            for (int j = k; j < n; ++j) e(j, i) -= f * e(j, k);
        }
        ++k;
    }
    return t;
}

// Index (signature): positives minus negatives.
inline int index(const SymIntMatrix& m) {
    const InertiaTriple t = inertia(m);
    return t.positive - t.negative;
}

namespace detail {

// Characteristic polynomial det(xI - M) by Faddeev-LeVerrier. For an
// integer matrix every division c_k = -tr(M_k)/k is exact.
inline std::vector<Integer> char_poly(const SymIntMatrix& m) {
    const int n = m.size();
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    const IntMatrix& a = m.as_general();
    IntMatrix mk = a;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            IntMatrix shifted = mk;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c[k - 1];
            mk = a * shifted;
        }
        Integer tr = 0;
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        Integer q = -tr / k;
        if (q * k != -tr) throw std::logic_error("faddeev-leverrier division not exact");
        c[static_cast<std::size_t>(k)] = std::move(q);
    }
    return c;  // highest degree first: c[0] x^n + ... + c[n]
}

// Dense rational polynomial, coefficient of x^i at index i.
using RatPoly = std::vector<Rational>;

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly rp_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
    rp_trim(d);
    return d;
}

inline RatPoly rp_monic(RatPoly p) {
    rp_trim(p);
    if (p.empty()) return p;
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

// Scale by a positive constant only; Sturm chains must not flip signs.
inline RatPoly rp_normalize_pos(RatPoly p) {
    rp_trim(p);
    if (p.empty()) return p;
    Rational lead = p.back();
    if (lead < 0) lead = -lead;
    for (auto& c : p) c /= lead;
    return p;
}

// Division with remainder; b must be nonzero.
inline std::pair<RatPoly, RatPoly> rp_divmod(RatPoly a, const RatPoly& b) {
    rp_trim(a);
    RatPoly q(a.size(), Rational(0));
    const int db = rp_degree(b);
    while (rp_degree(a) >= db && !a.empty()) {
        const int shift = rp_degree(a) - db;
        const Rational f = a.back() / b.back();
        q[static_cast<std::size_t>(shift)] = f;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= f * b[static_cast<std::size_t>(i)];
        rp_trim(a);
    }
    rp_trim(q);
    return {std::move(q), std::move(a)};
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        RatPoly r = rp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return rp_monic(std::move(a));
}

inline RatPoly rp_exact_div(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = rp_divmod(a, b);
    if (!r.empty()) throw std::logic_error("polynomial division not exact");
    return q;
}

// Yun's square-free decomposition: returns factors f[0], f[1], ... where
// f[i] (monic, square-free) carries multiplicity i+1.
inline std::vector<RatPoly> rp_squarefree(const RatPoly& p) {
    std::vector<RatPoly> out;
    RatPoly pm = rp_monic(p);
    if (rp_degree(pm) < 1) return out;
    const RatPoly dp = rp_derivative(pm);
    RatPoly g = rp_gcd(pm, dp);
    if (rp_degree(g) < 1) {
        out.push_back(std::move(pm));
        return out;
    }
    RatPoly w = rp_exact_div(pm, g);
    RatPoly y = rp_exact_div(dp, g);
    RatPoly z = y;
    {
        const RatPoly dw = rp_derivative(w);
        z.resize(std::max(z.size(), dw.size()), Rational(0));
        for (std::size_t i = 0; i < dw.size(); ++i) z[i] -= dw[i];
        rp_trim(z);
    }
    while (rp_degree(w) > 0) {
        RatPoly gi = z.empty() ? rp_monic(w) : rp_gcd(w, z);
        out.push_back(gi);
        w = rp_exact_div(w, gi);
        if (z.empty()) break;
        y = rp_exact_div(z, gi);
        const RatPoly dw = rp_derivative(w);
        z = y;
        z.resize(std::max(z.size(), dw.size()), Rational(0));
        for (std::size_t i = 0; i < dw.size(); ++i) z[i] -= dw[i];
        rp_trim(z);
    }
    return out;
}

inline int rp_sign_at_zero(const RatPoly& p) { return p.empty() ? 0 : sign_of(p.front()); }

inline int rp_sign_at_pos_inf(const RatPoly& p) { return p.empty() ? 0 : sign_of(p.back()); }

inline int rp_sign_at_neg_inf(const RatPoly& p) {
    if (p.empty()) return 0;
    const int s = sign_of(p.back());
    return rp_degree(p) % 2 == 0 ? s : -s;
}

inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Number of distinct real roots of a square-free p in (0, inf) and in
// (-inf, 0), by Sturm's theorem. p(0) must be nonzero.
inline std::pair<int, int> sturm_root_counts(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(rp_normalize_pos(p));
    RatPoly d = rp_derivative(chain[0]);
    rp_trim(d);
    if (!d.empty()) chain.push_back(rp_normalize_pos(std::move(d)));
    while (chain.size() >= 2 && rp_degree(chain.back()) > 0) {
        RatPoly r = rp_divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) throw std::logic_error("sturm chain of non-square-free polynomial");
        for (auto& c : r) c = -c;
        chain.push_back(rp_normalize_pos(std::move(r)));
    }
    std::vector<int> at_zero, at_pos, at_neg;
    for (const auto& q : chain) {
        at_zero.push_back(rp_sign_at_zero(q));
        at_pos.push_back(rp_sign_at_pos_inf(q));
        at_neg.push_back(rp_sign_at_neg_inf(q));
    }
    const int pos = sign_variations(at_zero) - sign_variations(at_pos);
    const int neg = sign_variations(at_neg) - sign_variations(at_zero);
    return {pos, neg};
}

}  // namespace detail

// Second, independent inertia computation: exact characteristic polynomial
// plus Sturm-sequence root counting on (0,inf) and (-inf,0). Eigenvalue
// multiplicities come from the square-free decomposition.
inline InertiaTriple inertia_oracle(const SymIntMatrix& m) {
    const int n = m.size();
    const std::vector<Integer> cp = detail::char_poly(m);
    detail::RatPoly p(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) p[static_cast<std::size_t>(n - i)] = Rational(cp[static_cast<std::size_t>(i)]);

    InertiaTriple t;
    std::size_t shift = 0;
    while (shift < p.size() && p[shift] == 0) ++shift;
    t.zero = static_cast<int>(shift);
    detail::RatPoly q(p.begin() + static_cast<std::ptrdiff_t>(shift), p.end());

    const std::vector<detail::RatPoly> factors = detail::rp_squarefree(q);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (detail::rp_degree(factors[i]) < 1) continue;
        const auto [pos, neg] = detail::sturm_root_counts(factors[i]);
        const int mult = static_cast<int>(i) + 1;
        t.positive += mult * pos;
        t.negative += mult * neg;
    }
    if (t.positive + t.negative + t.zero != n)
        throw std::logic_error("sturm eigenvalue count does not sum to the rank");
    return t;
}

// Rohlin invariant of a homology sphere bounding an even unimodular form:
// index/8 reduced mod 2. Divisibility by 8 is asserted at runtime rather
// than trusted.
inline int rohlin_mu(const SymIntMatrix& m) {
    if (parity_type(m) != Parity::Even)
        throw Error("NotEven", "Rohlin invariant needs an even type form");
    if (!is_unimodular(m))
        throw Error("NotUnimodular", "Rohlin invariant needs a unimodular form");
    const int s = index(m);
    if (s % 8 != 0)
        throw Error("IndexNotDivisibleBy8",
                    "even unimodular form with index " + std::to_string(s));
    return mod2(static_cast<long long>(s / 8));
}

// Classification of a unimodular nondegenerate form up to integral
// equivalence, as far as elementary invariants decide it. Definite forms of
// rank <= 7 are diagonalizable; definite forms of rank >= 8 are left
// unclassified.
struct FormClass {
    enum class Kind { OddIndefinite, EvenIndefinite, DefiniteDiagonal, ZeroRank, Unclassified };

    Kind kind = Kind::Unclassified;
    int rank = 0;
    int positive = 0;      // OddIndefinite(p, q)
    int negative = 0;
    int hyperbolic = 0;    // EvenIndefinite: number of hyperbolic planes
    int e8_blocks = 0;     // EvenIndefinite: signed count of E8 summands
    int sign = 0;          // DefiniteDiagonal: +1 or -1

    bool operator==(const FormClass&) const = default;
};

inline std::string to_string(const FormClass& f) {
    using Kind = FormClass::Kind;
    switch (f.kind) {
        case Kind::OddIndefinite:
            return "OddIndefinite(" + std::to_string(f.positive) + "," +
                   std::to_string(f.negative) + ")";
        case Kind::EvenIndefinite:
            return "EvenIndefinite(" + std::to_string(f.hyperbolic) + "H," +
                   std::to_string(f.e8_blocks) + "E8)";
        case Kind::DefiniteDiagonal:
            return std::string("DefiniteDiagonal(") + (f.sign > 0 ? "+" : "-") + "," +
                   std::to_string(f.rank) + ")";
        case Kind::ZeroRank:
            return "ZeroRank";
        case Kind::Unclassified:
            return "Unclassified(rank " + std::to_string(f.rank) + ")";
    }
    return "?";
}

inline FormClass classify_unimodular(const SymIntMatrix& m) {
    const Integer d = det_exact(m);
    if (m.size() > 0 && d == 0) throw Error("Degenerate", "form has determinant 0");
    if (d != 1 && d != -1) throw Error("NotUnimodular", "classification needs |det| = 1");

    FormClass f;
    f.rank = m.size();
    if (m.size() == 0) {
        f.kind = FormClass::Kind::ZeroRank;
        return f;
    }
    const InertiaTriple t = inertia(m);
    if (t.zero != 0) throw std::logic_error("unimodular form with zero eigenvalue");
    const int sig = t.positive - t.negative;
    if (t.positive > 0 && t.negative > 0) {
        if (parity_type(m) == Parity::Odd) {
            f.kind = FormClass::Kind::OddIndefinite;
            f.positive = t.positive;
            f.negative = t.negative;
        } else {
            if (sig % 8 != 0 || (f.rank - std::abs(sig)) % 2 != 0)
                throw std::logic_error("even indefinite form with impossible invariants");
            f.kind = FormClass::Kind::EvenIndefinite;
            f.e8_blocks = sig / 8;
            f.hyperbolic = (f.rank - std::abs(sig)) / 2;
        }
    } else if (f.rank <= 7) {
        f.kind = FormClass::Kind::DefiniteDiagonal;
        f.sign = t.positive > 0 ? 1 : -1;
    } else {
        f.kind = FormClass::Kind::Unclassified;
    }
    return f;
}

// Gram matrix of the E8 root lattice: positive definite, even, det 1,
// index 8. Chain 1-...-7 with node 8 attached to node 5.
inline SymIntMatrix e8_matrix() {
    SymIntMatrix m(8);
    for (int i = 0; i < 8; ++i) m.set(i, i, 2);
    for (int i = 0; i + 1 < 7; ++i) m.set(i, i + 1, 1);
    m.set(4, 7, 1);
    return m;
}

}  // namespace casson
