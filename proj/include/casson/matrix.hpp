#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "casson/errors.hpp"
#include "casson/integer.hpp"

namespace casson {

// Square integer matrix, row-major, not necessarily symmetric. Carrier for
// Seifert matrices and basis-change (congruence) transforms.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        assert(n >= 0);
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        IntMatrix m(static_cast<int>(rows.size()));
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != m.n_)
                throw Error("MalformedMatrix", "row length does not match matrix size");
            int j = 0;
            for (long long v : row) m.at(i, j++) = v;
            ++i;
        }
        return m;
    }

    int size() const { return n_; }

    Integer& at(int i, int j) {
        assert(i >= 0 && i < n_ && j >= 0 && j < n_);
        return e_[static_cast<std::size_t>(i) * n_ + j];
    }
    const Integer& at(int i, int j) const {
        assert(i >= 0 && i < n_ && j >= 0 && j < n_);
        return e_[static_cast<std::size_t>(i) * n_ + j];
    }

    IntMatrix transposed() const {
        IntMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        assert(n_ == o.n_);
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Integer& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    IntMatrix operator-() const {
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = -at(i, j);
        return r;
    }

    bool operator==(const IntMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<Integer> e_;
};

namespace detail {

// Fraction-free (Bareiss) elimination with row pivoting. Every division is
// exact over the integers; exactness is checked, not assumed.
inline Integer bareiss_det(std::vector<Integer> a, int n) {
    if (n == 0) return 1;  // empty product
    auto e = [&](int i, int j) -> Integer& { return a[static_cast<std::size_t>(i) * n + j]; };
    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (e(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (e(i, k) != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(e(k, j), e(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer num = e(k, k) * e(i, j) - e(i, k) * e(k, j);
                Integer q = num / prev;
                if (q * prev != num) throw std::logic_error("bareiss division not exact");
                e(i, j) = std::move(q);
            }
            e(i, k) = 0;
        }
        prev = e(k, k);
    }
    return sign < 0 ? Integer(-e(n - 1, n - 1)) : e(n - 1, n - 1);
}

}  // namespace detail

inline Integer det_exact(const IntMatrix& m) {
    const int n = m.size();
    std::vector<Integer> a;
    a.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.push_back(m.at(i, j));
    return detail::bareiss_det(std::move(a), n);
}

// Symmetric integer matrix. Carrier for linking matrices, intersection
// forms and Seifert-pairing-derived forms. Size 0 (the empty form) is a
// valid value with det 1.
class SymIntMatrix {
public:
    SymIntMatrix() = default;
    explicit SymIntMatrix(int n) : m_(n) {}

    // Validates symmetry of the given rows.
    static SymIntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        return from_general(IntMatrix::from_rows(rows));
    }

    static SymIntMatrix from_general(IntMatrix m) {
        for (int i = 0; i < m.size(); ++i)
            for (int j = i + 1; j < m.size(); ++j)
                if (m.at(i, j) != m.at(j, i))
                    throw Error("NotSymmetric", "entry (" + std::to_string(i) + "," +
                                                    std::to_string(j) + ") differs from its mirror");
        SymIntMatrix s;
        s.m_ = std::move(m);
        return s;
    }

    static SymIntMatrix diagonal(std::initializer_list<long long> d) {
        SymIntMatrix s(static_cast<int>(d.size()));
        int i = 0;
        for (long long v : d) s.m_.at(i, i) = v, ++i;
        return s;
    }

    int size() const { return m_.size(); }

    const Integer& at(int i, int j) const { return m_.at(i, j); }

    // Keeps the matrix symmetric by writing the mirror entry too.
    void set(int i, int j, Integer v) {
        m_.at(i, j) = v;
        m_.at(j, i) = std::move(v);
    }

    const IntMatrix& as_general() const { return m_; }

    SymIntMatrix negated() const {
        SymIntMatrix s;
        s.m_ = -m_;
        return s;
    }

    // Block (direct) sum.
    SymIntMatrix direct_sum(const SymIntMatrix& o) const {
        const int n = size(), m = o.size();
        SymIntMatrix s(n + m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s.m_.at(i, j) = at(i, j);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) s.m_.at(n + i, n + j) = o.at(i, j);
        return s;
    }

    SymIntMatrix with_deleted(int k) const {
        assert(k >= 0 && k < size());
        SymIntMatrix s(size() - 1);
        for (int i = 0, si = 0; i < size(); ++i) {
            if (i == k) continue;
            for (int j = 0, sj = 0; j < size(); ++j) {
                if (j == k) continue;
                s.m_.at(si, sj) = at(i, j);
                ++sj;
            }
            ++si;
        }
        return s;
    }

    bool operator==(const SymIntMatrix&) const = default;

private:
    IntMatrix m_;
};

inline Integer det_exact(const SymIntMatrix& m) { return det_exact(m.as_general()); }

inline bool is_unimodular(const SymIntMatrix& m) {
    const Integer d = det_exact(m);
    return d == 1 || d == -1;
}

enum class Parity { Even, Odd };

// Even type iff every diagonal entry is even; the empty matrix is even.
inline Parity parity_type(const SymIntMatrix& m) {
    for (int i = 0; i < m.size(); ++i)
        if (mod2(m.at(i, i)) != 0) return Parity::Odd;
    return Parity::Even;
}

inline const char* to_string(Parity p) { return p == Parity::Even ? "Even" : "Odd"; }

// E'ME for an integer-unimodular E; inertia and |det| are invariant.
inline SymIntMatrix congruence_apply(const SymIntMatrix& m, const IntMatrix& e) {
    if (e.size() != m.size()) throw Error("ENotUnimodular", "basis change has wrong size");
    const Integer d = det_exact(e);
    if (d != 1 && d != -1) throw Error("ENotUnimodular", "basis change must have determinant +-1");
    return SymIntMatrix::from_general(e.transposed() * m.as_general() * e);
}

// --- text format: first line "n", then n lines of n integers ---

inline SymIntMatrix read_matrix_text(std::istream& in) {
    static const std::regex int_re("[+-]?[0-9]+");
    std::string tok;
    if (!(in >> tok) || !std::regex_match(tok, int_re))
        throw Error("MalformedMatrixFile", "expected matrix size on the first line");
    const long long n = std::stoll(tok);
    if (n < 0) throw Error("MalformedMatrixFile", "negative matrix size");
    IntMatrix m(static_cast<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!(in >> tok) || !std::regex_match(tok, int_re))
                throw Error("MalformedMatrixFile", "expected integer entry at (" +
                                                       std::to_string(i + 1) + "," +
                                                       std::to_string(j + 1) + ")");
            m.at(i, j) = Integer(tok);
        }
    return SymIntMatrix::from_general(std::move(m));
}

inline SymIntMatrix read_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return read_matrix_text(in);
}

inline void write_matrix_text(std::ostream& out, const SymIntMatrix& m) {
    out << m.size() << "\n";
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) out << (j ? " " : "") << m.at(i, j);
        out << "\n";
    }
}

}  // namespace casson
