#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "casson/integer.hpp"

namespace casson {

// Integer-coefficient Laurent polynomial; zero coefficients are never
// stored. Carrier for Alexander/Conway polynomials.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(Integer c) { return monomial(std::move(c), 0); }

    static LaurentPoly one() { return constant(1); }

    static LaurentPoly monomial(Integer c, long long exp) {
        LaurentPoly p;
        if (c != 0) p.c_[exp] = std::move(c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    Integer coeff(long long exp) const {
        const auto it = c_.find(exp);
        return it == c_.end() ? Integer(0) : it->second;
    }

    long long min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    long long max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    const std::map<long long, Integer>& terms() const { return c_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }

    bool operator==(const LaurentPoly&) const = default;

    // p(t) with t -> 1/t.
    LaurentPoly inverted() const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[-e] = c;
        return r;
    }

    bool is_symmetric() const { return *this == inverted(); }

    Integer eval_at_one() const {
        Integer s = 0;
        for (const auto& [e, c] : c_) s += c;
        return s;
    }

    std::string to_string(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        // highest exponent first
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            const auto& [e, c] = *it;
            Integer abs = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            const bool unit = abs == 1;
            if (e == 0) {
                out << abs;
            } else {
                if (!unit) out << abs << "*";
                out << var;
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

private:
    void add_term(long long e, Integer c) {
        if (c == 0) return;
        const auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    std::map<long long, Integer> c_;
};

// Exact second derivative at t = 1: sum of coeff(e) * e * (e - 1).
inline Integer second_derivative_at_one(const LaurentPoly& p) {
    Integer s = 0;
    for (const auto& [e, c] : p.terms()) s += c * e * (e - 1);
    return s;
}

}  // namespace casson
