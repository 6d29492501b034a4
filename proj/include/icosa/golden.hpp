#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "icosa/errors.hpp"

namespace icosa {

using BigInt = boost::multiprecision::cpp_int;

// Decimal conversion for "[-]digits" strings. BigInt's own string constructor
// treats a leading 0 as a base prefix, so "09" would be rejected as bad octal.
BigInt bigint_from_decimal(const std::string& text);

// Element of Z[phi], stored as a + b*phi with phi^2 = phi + 1.
struct GoldenInt {
    BigInt a{0};
    BigInt b{0};

    GoldenInt() = default;
    GoldenInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}
    GoldenInt(long n) : a(n) {}  // NOLINT(google-explicit-constructor)

    static GoldenInt phi() { return {0, 1}; }
    static GoldenInt phibar() { return {1, -1}; }  // 1 - phi
    static GoldenInt sqrt5() { return {-1, 2}; }   // 2*phi - 1

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational_integer() const { return b == 0; }

    // Galois conjugation tau: phi -> 1 - phi.
    GoldenInt conj() const { return {a + b, -b}; }
    // u * conj(u) = a^2 + a*b - b^2, always a rational integer.
    BigInt norm() const { return a * a + a * b - b * b; }

    GoldenInt operator-() const { return {-a, -b}; }
    GoldenInt& operator+=(const GoldenInt& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    GoldenInt& operator-=(const GoldenInt& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    GoldenInt& operator*=(const GoldenInt& o) {
        BigInt na = a * o.a + b * o.b;
        BigInt nb = a * o.b + b * o.a + b * o.b;
        a = std::move(na);
        b = std::move(nb);
        return *this;
    }

    std::string str() const;
};

inline GoldenInt operator+(GoldenInt u, const GoldenInt& v) { return u += v; }
inline GoldenInt operator-(GoldenInt u, const GoldenInt& v) { return u -= v; }
inline GoldenInt operator*(GoldenInt u, const GoldenInt& v) { return u *= v; }
inline bool operator==(const GoldenInt& u, const GoldenInt& v) { return u.a == v.a && u.b == v.b; }
inline bool operator!=(const GoldenInt& u, const GoldenInt& v) { return !(u == v); }

// Element of Q(phi): num / den with den > 0 and gcd(num.a, num.b, den) = 1.
struct GoldenRational {
    GoldenInt num;
    BigInt den{1};

    GoldenRational() = default;
    GoldenRational(GoldenInt n) : num(std::move(n)) {}  // NOLINT(google-explicit-constructor)
    GoldenRational(long n) : num(n) {}                  // NOLINT(google-explicit-constructor)
    GoldenRational(GoldenInt n, BigInt d);
    GoldenRational(long n, long d) : GoldenRational(GoldenInt(n), BigInt(d)) {}

    static GoldenRational phi() { return GoldenInt::phi(); }
    static GoldenRational phibar() { return GoldenInt::phibar(); }

    bool is_zero() const { return num.is_zero(); }
    bool is_rational() const { return num.b == 0; }
    bool is_integer() const { return num.b == 0 && den == 1; }

    GoldenRational conj() const { return {num.conj(), den}; }
    // u * conj(u) as an exact rational (zero phi-part).
    GoldenRational norm() const { return {GoldenInt(num.norm(), 0), den * den}; }

    // Sign of the real embedding sending phi to (1+sqrt 5)/2: -1, 0 or +1.
    int sign() const;

    GoldenRational operator-() const { return {-num, den}; }
    GoldenRational inverse() const;  // DivisionByZero on 0
    GoldenRational pow(unsigned long e) const;

    double to_double() const;
    std::string str() const;
};

GoldenRational operator+(const GoldenRational& u, const GoldenRational& v);
GoldenRational operator-(const GoldenRational& u, const GoldenRational& v);
GoldenRational operator*(const GoldenRational& u, const GoldenRational& v);
GoldenRational operator/(const GoldenRational& u, const GoldenRational& v);
inline bool operator==(const GoldenRational& u, const GoldenRational& v) {
    return u.num == v.num && u.den == v.den;
}
inline bool operator!=(const GoldenRational& u, const GoldenRational& v) { return !(u == v); }
inline bool operator<(const GoldenRational& u, const GoldenRational& v) { return (u - v).sign() < 0; }
inline bool operator>(const GoldenRational& u, const GoldenRational& v) { return (u - v).sign() > 0; }
inline bool operator<=(const GoldenRational& u, const GoldenRational& v) { return (u - v).sign() <= 0; }
inline bool operator>=(const GoldenRational& u, const GoldenRational& v) { return (u - v).sign() >= 0; }

// Parses the scalar format produced by GoldenRational::str(), e.g. "3/2-1/2*phi",
// "phi", "-phibar", "7". Throws SyntaxError on malformed input.
GoldenRational parse_golden(const std::string& text);

// The nine tempered trace values {0, +-1, +-2, +-phi, +-phibar}, in the
// canonical order 0, 1, -1, 2, -2, phi, -phi, phibar, -phibar.
const std::array<GoldenInt, 9>& a_set();
bool in_A(const GoldenInt& u);
// Index into a_set(), or -1 when absent.
int a_index(const GoldenInt& u);
// Canonical label of an element of A ("0", "1", ..., "-phibar"); throws NotInA.
std::string a_label(const GoldenInt& u);
// Inverse of a_label; throws NotInA on an unknown label.
GoldenInt a_from_label(const std::string& label);

}  // namespace icosa
