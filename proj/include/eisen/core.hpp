#pragma once

// Exact arithmetic in the ring of Eisenstein integers Z[w], w = e^{2 pi i/3}.
//
// Elements are a + b*w with unbounded integer coefficients (GMP). The basis
// relation is w^2 = -1 - w, so every product stays in the (1, w) basis.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "eisen/errors.hpp"

namespace eisen {

using Integer = mpz_class;
using Rational = mpq_class;

class EInt {
  public:
    EInt() = default;
    EInt(long a) : a_(a) {}
    EInt(Integer a) : a_(std::move(a)) {}
    EInt(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}
    EInt(long a, long b) : a_(a), b_(b) {}

    static EInt omega() { return EInt(0, 1); }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    // a^2 - ab + b^2, the squared complex modulus.
    Integer norm() const {
        Integer n = a_ * a_ - a_ * b_ + b_ * b_;
        return n;
    }

    // conj(w) = w^2 = -1 - w
    EInt conj() const { return EInt(a_ - b_, -b_); }

    // Multiplication by the sixth root of unity 1 + w (rotation by +pi/3).
    EInt rotate_ccw() const { return EInt(a_ - b_, a_); }
    // Multiplication by -w = (1 + w)^{-1} (rotation by -pi/3).
    EInt rotate_cw() const { return EInt(b_, b_ - a_); }

    EInt operator-() const { return EInt(-a_, -b_); }

    EInt& operator+=(const EInt& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    EInt& operator-=(const EInt& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    EInt& operator*=(const EInt& o) {
        Integer bd = b_ * o.b_;
        Integer na = a_ * o.a_ - bd;
        Integer nb = a_ * o.b_ + b_ * o.a_ - bd;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }

    friend EInt operator+(EInt x, const EInt& y) { return x += y; }
    friend EInt operator-(EInt x, const EInt& y) { return x -= y; }
    friend EInt operator*(EInt x, const EInt& y) { return x *= y; }

    friend bool operator==(const EInt& x, const EInt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

  private:
    Integer a_{0};
    Integer b_{0};
};

inline Integer norm(const EInt& x) { return x.norm(); }
inline EInt conj(const EInt& x) { return x.conj(); }

inline EInt pow(EInt base, unsigned long e) {
    EInt result(1);
    while (e != 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

inline bool is_unit(const EInt& x) { return x.norm() == 1; }

// Sort key used for deterministic output: (norm, a, b) ascending.
inline bool norm_order(const EInt& x, const EInt& y) {
    int c = cmp(x.norm(), y.norm());
    if (c != 0) return c < 0;
    c = cmp(x.a(), y.a());
    if (c != 0) return c < 0;
    return cmp(x.b(), y.b()) < 0;
}

inline std::string to_string(const EInt& x) {
    const int sa = sgn(x.a());
    const int sb = sgn(x.b());
    if (sb == 0) return x.a().get_str();
    std::string w;
    if (x.b() == 1) {
        w = "w";
    } else if (x.b() == -1) {
        w = "-w";
    } else {
        w = x.b().get_str() + "w";
    }
    if (sa == 0) return w;
    return x.a().get_str() + (sb > 0 ? "+" : "") + w;
}

inline std::ostream& operator<<(std::ostream& os, const EInt& x) { return os << to_string(x); }

// The six units, indexed by k with value (1 + w)^k:
// 1, 1+w, w, -1, -1-w, -w.
class Unit {
  public:
    constexpr Unit() = default;
    static constexpr Unit from_power(int k) { return Unit(((k % 6) + 6) % 6); }

    static std::optional<Unit> from(const EInt& x) {
        for (int k = 0; k < 6; ++k)
            if (Unit(k).value() == x) return Unit(k);
        return std::nullopt;
    }

    static std::array<Unit, 6> all() {
        return {Unit(0), Unit(1), Unit(2), Unit(3), Unit(4), Unit(5)};
    }

    constexpr int power() const { return k_; }

    EInt value() const {
        switch (k_) {
        case 0: return EInt(1, 0);
        case 1: return EInt(1, 1);
        case 2: return EInt(0, 1);
        case 3: return EInt(-1, 0);
        case 4: return EInt(-1, -1);
        default: return EInt(0, -1);
        }
    }

    constexpr Unit inverse() const { return from_power(-k_); }
    constexpr Unit conj() const { return from_power(-k_); }

    friend constexpr Unit operator*(Unit x, Unit y) { return from_power(x.k_ + y.k_); }
    friend constexpr bool operator==(Unit, Unit) = default;

    friend EInt operator*(Unit u, const EInt& x) { return u.value() * x; }
    friend EInt operator*(const EInt& x, Unit u) { return u.value() * x; }

  private:
    constexpr explicit Unit(int k) : k_(k) {}
    int k_ = 0;
};

// One of the six half-open angular regions [ (s-1) pi/3, s pi/3 ) of the plane,
// numbered 1..6 counter-clockwise from the positive real axis.
struct Sextant {
    int index = 1;
    friend constexpr bool operator==(Sextant, Sextant) = default;
};

// 0 <= Arg < pi/3, decided with integer sign tests only.
inline bool in_first_sextant(const EInt& x) {
    return sgn(x.b()) >= 0 && x.a() > x.b();
}

inline Sextant sextant(const EInt& x) {
    if (x.is_zero()) throw domain_error("sextant of zero");
    EInt y = x;
    for (int s = 1; s <= 6; ++s) {
        if (in_first_sextant(y)) return Sextant{s};
        y = y.rotate_cw();
    }
    throw std::logic_error("sextant: no sextant matched");
}

// (eps, eps*x) with eps*x in the first sextant.
inline std::pair<Unit, EInt> canonicalize(const EInt& x) {
    if (x.is_zero()) throw domain_error("canonicalize of zero");
    EInt y = x;
    for (int k = 0; k < 6; ++k) {
        if (in_first_sextant(y)) return {Unit::from_power(k), y};
        y = y.rotate_ccw();
    }
    throw std::logic_error("canonicalize: no associate in first sextant");
}

inline EInt canonical(const EInt& x) { return canonicalize(x).second; }

inline EInt assoc_in_sextant(const EInt& x, Sextant s) {
    if (s.index < 1 || s.index > 6) throw domain_error("sextant index out of range");
    EInt y = canonical(x);
    for (int i = 1; i < s.index; ++i) y = y.rotate_ccw();
    return y;
}

inline bool are_associates(const EInt& x, const EInt& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    return canonical(x) == canonical(y);
}

namespace detail {

// Nearest integer to num/den (den > 0), ties toward negative infinity.
inline Integer round_nearest_down(const Integer& num, const Integer& den) {
    Integer q;
    Integer two_num = 2 * num - den;
    Integer two_den = 2 * den;
    mpz_cdiv_q(q.get_mpz_t(), two_num.get_mpz_t(), two_den.get_mpz_t());
    return q;
}

} // namespace detail

// Euclidean division: x = q*y + r with N(r) <= 3/4 N(y).
inline std::pair<EInt, EInt> divmod(const EInt& x, const EInt& y) {
    if (y.is_zero()) throw division_by_zero();
    const Integer n = y.norm();
    const EInt num = x * y.conj();
    EInt q(detail::round_nearest_down(num.a(), n), detail::round_nearest_down(num.b(), n));
    EInt r = x - q * y;
    return {std::move(q), std::move(r)};
}

inline std::optional<EInt> exact_div(const EInt& x, const EInt& y) {
    if (y.is_zero()) throw division_by_zero();
    const Integer n = y.norm();
    const EInt num = x * y.conj();
    if (!mpz_divisible_p(num.a().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(num.b().get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    Integer qa, qb;
    mpz_divexact(qa.get_mpz_t(), num.a().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(qb.get_mpz_t(), num.b().get_mpz_t(), n.get_mpz_t());
    return EInt(std::move(qa), std::move(qb));
}

inline bool divides(const EInt& d, const EInt& x) { return exact_div(x, d).has_value(); }

// First-sextant gcd; gcd(0, 0) = 0.
inline EInt gcd(EInt x, EInt y) {
    while (!y.is_zero()) {
        EInt r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return canonical(x);
}

} // namespace eisen
