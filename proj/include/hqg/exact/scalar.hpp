// Exact scalar fields: arbitrary-precision rationals and integers modulo a prime.
//
// A default-constructed scalar is zero in either field. Constants other than
// zero (one, parsed literals) are obtained from a Field<F> descriptor, which for
// the prime field carries the modulus.

#ifndef HQG_EXACT_SCALAR_HPP
#define HQG_EXACT_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "hqg/errors.hpp"

namespace hqg {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational reciprocal(const Rational& x) {
    if (is_zero(x)) throw DivisionByZero("reciprocal of zero");
    return 1 / x;
}

/// Element of Z/pZ. The modulus travels with the value; a default-constructed
/// ModP is an unbound zero that adopts the modulus of whatever it meets.
class ModP {
   public:
    ModP() = default;
    ModP(std::uint64_t value, std::uint64_t modulus) : v_(modulus ? value % modulus : value), p_(modulus) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend ModP operator+(const ModP& a, const ModP& b) {
        const auto p = bind(a, b);
        if (p == 0) return {};
        unsigned __int128 s = static_cast<unsigned __int128>(a.v_) + b.v_;
        return ModP(static_cast<std::uint64_t>(s % p), p);
    }
    friend ModP operator-(const ModP& a, const ModP& b) { return a + (-b); }
    friend ModP operator*(const ModP& a, const ModP& b) {
        const auto p = bind(a, b);
        if (p == 0) return {};
        unsigned __int128 s = static_cast<unsigned __int128>(a.v_) * b.v_;
        return ModP(static_cast<std::uint64_t>(s % p), p);
    }
    friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
    ModP operator-() const { return v_ == 0 ? *this : ModP(p_ - v_, p_); }

    ModP& operator+=(const ModP& o) { return *this = *this + o; }
    ModP& operator-=(const ModP& o) { return *this = *this - o; }
    ModP& operator*=(const ModP& o) { return *this = *this * o; }
    ModP& operator/=(const ModP& o) { return *this = *this / o; }

    friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }

    ModP inverse() const {
        if (v_ == 0) throw DivisionByZero("modular inverse of zero");
        // Fermat: v^(p-2)
        std::uint64_t e = p_ - 2;
        ModP base = *this, acc(1, p_);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

   private:
    static std::uint64_t bind(const ModP& a, const ModP& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) throw FieldMismatch("operands from different prime fields");
        return a.p_ ? a.p_ : b.p_;
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline bool is_zero(const ModP& x) { return x.value() == 0; }
inline ModP reciprocal(const ModP& x) { return x.inverse(); }

template <class F>
concept ExactField = std::default_initializable<F> && std::equality_comparable<F> && requires(F a, F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { reciprocal(a) } -> std::convertible_to<F>;
};

/// Constant factory and canonical text form for a field.
template <class F>
class Field;

template <>
class Field<Rational> {
   public:
    Rational one() const { return Rational(1); }
    Rational from_int(long long n) const { return Rational(static_cast<long>(n)); }
    Rational from_rational(const Rational& q) const { return q; }

    /// Accepts "p", "p/q", "-p/q"; the result is stored in lowest terms.
    Rational parse(std::string_view text) const;

    /// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
    std::string format(const Rational& x) const;

    std::string name() const { return "q"; }
    friend bool operator==(const Field&, const Field&) = default;
};

template <>
class Field<ModP> {
   public:
    explicit Field(std::uint64_t prime);

    ModP one() const { return ModP(1, p_); }
    ModP from_int(long long n) const;
    /// Image of p/q; throws DivisionByZero when the prime divides q.
    ModP from_rational(const Rational& q) const;
    ModP parse(std::string_view text) const;
    std::string format(const ModP& x) const { return std::to_string(x.value()); }
    std::string name() const { return "fp:" + std::to_string(p_); }
    std::uint64_t prime() const { return p_; }
    friend bool operator==(const Field&, const Field&) = default;

   private:
    std::uint64_t p_;
};

using RationalField = Field<Rational>;
using PrimeField = Field<ModP>;

bool is_prime(std::uint64_t n);

}  // namespace hqg

#endif
