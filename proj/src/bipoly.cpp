#include "icosa/bipoly.hpp"

#include <algorithm>
#include <cstdlib>

namespace icosa {

long BiPoly::total_degree() const {
    long d = kZeroDegree;
    for (const auto& [k, v] : c_) d = std::max(d, k.first + k.second);
    return d;
}

long BiPoly::degree_in(Var v) const {
    long d = kZeroDegree;
    for (const auto& [k, c] : c_) d = std::max(d, v == Var::X ? k.first : k.second);
    return d;
}

GoldenRational BiPoly::coeff(long i, long j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? GoldenRational(0) : it->second;
}

void BiPoly::add_term(long i, long j, const GoldenRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = c_.try_emplace({i, j}, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

bool BiPoly::uses_only(Var v) const {
    for (const auto& [k, c] : c_)
        if ((v == Var::X ? k.second : k.first) != 0) return false;
    return true;
}

GoldenRational BiPoly::eval(const GoldenRational& u, const GoldenRational& v) const {
    long dx = degree_in(Var::X), dy = degree_in(Var::Y);
    std::vector<GoldenRational> up(std::max(dx, 0L) + 1, 1), vp(std::max(dy, 0L) + 1, 1);
    for (long i = 1; i <= dx; ++i) up[i] = up[i - 1] * u;
    for (long j = 1; j <= dy; ++j) vp[j] = vp[j - 1] * v;
    GoldenRational out = 0;
    for (const auto& [k, c] : c_) out = out + c * up[k.first] * vp[k.second];
    return out;
}

BiPoly BiPoly::subst(const BiPoly& fx, const BiPoly& fy) const {
    BiPoly out;
    for (const auto& [k, c] : c_) {
        BiPoly term = c * (fx.pow(k.first) * fy.pow(k.second));
        out += term;
    }
    return out;
}

BiPoly BiPoly::conj_coeffs() const {
    BiPoly out;
    for (const auto& [k, c] : c_) out.add_term(k.first, k.second, c.conj());
    return out;
}

BiPoly BiPoly::pow(unsigned long e) const {
    BiPoly base = *this, out = 1;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

BiPoly BiPoly::operator-() const {
    BiPoly out;
    for (const auto& [k, c] : c_) out.c_.emplace(k, -c);
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.c_) add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.c_) add_term(k.first, k.second, -c);
    return *this;
}

BiPoly operator+(BiPoly f, const BiPoly& g) { return f += g; }
BiPoly operator-(BiPoly f, const BiPoly& g) { return f -= g; }

BiPoly operator*(const BiPoly& f, const BiPoly& g) {
    BiPoly out;
    for (const auto& [kf, cf] : f.terms())
        for (const auto& [kg, cg] : g.terms())
            out.add_term(kf.first + kg.first, kf.second + kg.second, cf * cg);
    return out;
}

BiPoly operator*(const GoldenRational& c, const BiPoly& f) {
    BiPoly out;
    for (const auto& [k, cf] : f.terms()) out.add_term(k.first, k.second, c * cf);
    return out;
}

bool operator==(const BiPoly& f, const BiPoly& g) { return f.terms() == g.terms(); }

std::string BiPoly::str() const {
    if (c_.empty()) return "0";
    // Graded-lex descending term order for readability.
    std::vector<const std::pair<const Key, GoldenRational>*> order;
    for (const auto& t : c_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* p, auto* q) {
        long dp = p->first.first + p->first.second, dq = q->first.first + q->first.second;
        if (dp != dq) return dp > dq;
        return p->first.first > q->first.first;
    });
    std::string out;
    bool first = true;
    for (auto* t : order) {
        auto [i, j] = t->first;
        const GoldenRational& c = t->second;
        bool golden = c.num.b != 0;
        std::string vars;
        if (i == 1) vars = "x";
        else if (i > 1) vars = "x^" + std::to_string(i);
        if (j >= 1) {
            if (!vars.empty()) vars += "*";
            vars += j == 1 ? "y" : "y^" + std::to_string(j);
        }
        std::string cs, sign;
        if (golden) {
            // Golden coefficients are kept parenthesized and joined with '+',
            // so reparsing groups them correctly.
            sign = "+";
            cs = "(" + c.str() + ")";
        } else {
            sign = c.sign() < 0 ? "-" : "+";
            GoldenRational mag = c.sign() < 0 ? -c : c;
            cs = mag.str();
            if (cs == "1" && !vars.empty()) cs.clear();
        }
        if (first) {
            if (sign == "-") out += "-";
            first = false;
        } else {
            out += " " + sign + " ";
        }
        out += cs;
        if (!vars.empty()) {
            if (!cs.empty()) out += "*";
            out += vars;
        }
    }
    return out;
}

BiPoly pk(long k, Var v) {
    BiPoly pm1 = 1;  // P_0
    if (k <= 0) return pm1;
    BiPoly x = BiPoly::variable(v);
    BiPoly p = x;  // P_1
    for (long i = 2; i <= k; ++i) {
        BiPoly next = x * p - pm1;
        pm1 = std::move(p);
        p = std::move(next);
    }
    return p;
}

BiPoly tk(long k, Var v) {
    BiPoly tm1 = 2;  // t_0
    if (k <= 0) return tm1;
    BiPoly x = BiPoly::variable(v);
    BiPoly t = x;  // t_1
    for (long i = 2; i <= k; ++i) {
        BiPoly next = x * t - tm1;
        tm1 = std::move(t);
        t = std::move(next);
    }
    return t;
}

GoldenInt tk_at(long k, const GoldenInt& u) {
    GoldenInt tm1 = 2;
    if (k <= 0) return tm1;
    GoldenInt t = u;
    for (long i = 2; i <= k; ++i) {
        GoldenInt next = u * t - tm1;
        tm1 = t;
        t = next;
    }
    return t;
}

std::vector<long> pk_product(long a, long b) {
    std::vector<long> out;
    for (long c = a + b; c >= std::labs(a - b); c -= 2) out.push_back(c);
    return out;
}

BiPoly PBasisVector::reconstruct() const {
    BiPoly out;
    for (std::size_t k = 0; k < c.size(); ++k) out += c[k] * pk(static_cast<long>(k), var);
    return out;
}

PBasisVector to_p_basis(const BiPoly& f, Var var) {
    if (!f.uses_only(var))
        throw WrongVariable("polynomial is not univariate in the requested variable");
    PBasisVector out;
    out.var = var;
    long d = std::max(f.total_degree(), 0L);
    out.c.assign(d + 1, GoldenRational(0));
    BiPoly rest = f;
    // Triangular back-substitution from the top degree.
    for (long k = d; k >= 0; --k) {
        GoldenRational lead = var == Var::X ? rest.coeff(k, 0) : rest.coeff(0, k);
        if (lead.is_zero()) continue;
        out.c[k] = lead;
        rest -= lead * pk(k, var);
    }
    if (!rest.is_zero()) throw Error("internal: P-basis conversion left a remainder");
    return out;
}

}  // namespace icosa
