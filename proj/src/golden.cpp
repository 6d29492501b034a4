#include "icosa/golden.hpp"

#include <cctype>
#include <cmath>
#include <utility>

namespace icosa {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

GoldenInt scale(const GoldenInt& u, const BigInt& k) { return {u.a * k, u.b * k}; }

std::string rat_str(const BigInt& n, const BigInt& d) {
    std::string s = n.str();
    if (d != 1) s += "/" + d.str();
    return s;
}

}  // namespace

BigInt bigint_from_decimal(const std::string& text) {
    bool neg = !text.empty() && text[0] == '-';
    std::size_t i = neg ? 1 : 0;
    while (i + 1 < text.size() && text[i] == '0') ++i;
    BigInt v(text.substr(i));
    return neg ? -v : v;
}

GoldenRational::GoldenRational(GoldenInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw DivisionByZero();
    if (den < 0) {
        den = -den;
        num.a = -num.a;
        num.b = -num.b;
    }
    BigInt g = gcd(gcd(abs(num.a), abs(num.b)), den);
    if (g > 1) {
        num.a /= g;
        num.b /= g;
        den /= g;
    }
}

int GoldenRational::sign() const {
    // num = a + b*phi = (s + t*sqrt5)/2 with s = 2a + b, t = b; den > 0.
    BigInt s = 2 * num.a + num.b;
    const BigInt& t = num.b;
    int ss = s.sign(), ts = t.sign();
    if (ss >= 0 && ts >= 0) return (ss != 0 || ts != 0) ? 1 : 0;
    if (ss <= 0 && ts <= 0) return -1;
    // Mixed signs: compare s^2 against 5 t^2 (never equal unless both zero).
    BigInt d = s * s - 5 * t * t;
    return ss > 0 ? d.sign() : -d.sign();
}

GoldenRational GoldenRational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return {scale(num.conj(), den), num.norm()};
}

GoldenRational GoldenRational::pow(unsigned long e) const {
    GoldenRational base = *this, out = 1;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

double GoldenRational::to_double() const {
    static const double g = (1.0 + std::sqrt(5.0)) / 2.0;
    double da = num.a.convert_to<double>();
    double db = num.b.convert_to<double>();
    double dd = den.convert_to<double>();
    return (da + db * g) / dd;
}

std::string GoldenRational::str() const {
    const BigInt &a = num.a, &b = num.b;
    if (b == 0) return rat_str(a, den);
    BigInt babs = abs(b);
    std::string phip = (babs == 1 && den == 1) ? "phi" : rat_str(babs, den) + "*phi";
    if (a == 0) return b > 0 ? phip : "-" + phip;
    return rat_str(a, den) + (b > 0 ? "+" : "-") + phip;
}

std::string GoldenInt::str() const { return GoldenRational(*this).str(); }

GoldenRational operator+(const GoldenRational& u, const GoldenRational& v) {
    return {scale(u.num, v.den) + scale(v.num, u.den), u.den * v.den};
}

GoldenRational operator-(const GoldenRational& u, const GoldenRational& v) {
    return {scale(u.num, v.den) - scale(v.num, u.den), u.den * v.den};
}

GoldenRational operator*(const GoldenRational& u, const GoldenRational& v) {
    return {u.num * v.num, u.den * v.den};
}

GoldenRational operator/(const GoldenRational& u, const GoldenRational& v) {
    return u * v.inverse();
}

namespace {

struct ScalarScanner {
    const std::string& s;
    std::size_t pos = 0;

    explicit ScalarScanner(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool accept_word(const char* w) {
        skip_ws();
        std::size_t n = std::char_traits<char>::length(w);
        if (s.compare(pos, n, w) == 0) {
            pos += n;
            return true;
        }
        return false;
    }
    BigInt integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw SyntaxError("expected integer", pos);
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return bigint_from_decimal(s.substr(start, pos - start));
    }

    // term := INT ['/' INT] [['*'] unit] | unit, where unit is phi or phibar.
    GoldenRational term() {
        GoldenRational coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            BigInt n = integer();
            BigInt d = 1;
            if (accept('/')) d = integer();
            coef = GoldenRational(GoldenInt(n, 0), d);
            have_coef = true;
            if (!accept('*')) {
                skip_ws();
            }
        }
        if (accept_word("phibar")) return coef * GoldenRational::phibar();
        if (accept_word("phi")) return coef * GoldenRational::phi();
        if (!have_coef) throw SyntaxError("expected number, phi or phibar", pos);
        return coef;
    }

    GoldenRational parse() {
        GoldenRational out = 0;
        bool neg = accept('-');
        if (!neg) accept('+');
        out = neg ? -term() : term();
        while (!eof()) {
            if (accept('+'))
                out = out + term();
            else if (accept('-'))
                out = out - term();
            else
                throw SyntaxError("expected '+' or '-'", pos);
        }
        return out;
    }
};

}  // namespace

GoldenRational parse_golden(const std::string& text) {
    ScalarScanner sc(text);
    return sc.parse();
}

const std::array<GoldenInt, 9>& a_set() {
    static const std::array<GoldenInt, 9> kA = {
        GoldenInt(0),          GoldenInt(1),           GoldenInt(-1),
        GoldenInt(2),          GoldenInt(-2),          GoldenInt::phi(),
        -GoldenInt::phi(),     GoldenInt::phibar(),    -GoldenInt::phibar()};
    return kA;
}

int a_index(const GoldenInt& u) {
    const auto& A = a_set();
    for (int i = 0; i < 9; ++i)
        if (A[i] == u) return i;
    return -1;
}

bool in_A(const GoldenInt& u) { return a_index(u) >= 0; }

namespace {
constexpr const char* kALabels[9] = {"0",   "1",    "-1",     "2",       "-2",
                                     "phi", "-phi", "phibar", "-phibar"};
}

std::string a_label(const GoldenInt& u) {
    int i = a_index(u);
    if (i < 0) throw NotInA("value " + u.str() + " is not a tempered trace value");
    return kALabels[i];
}

GoldenInt a_from_label(const std::string& label) {
    for (int i = 0; i < 9; ++i)
        if (label == kALabels[i]) return a_set()[i];
    throw NotInA("unknown trace label '" + label + "'");
}

}  // namespace icosa
