#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "icosa/golden.hpp"

namespace icosa {

enum class Var { X, Y };

// Sparse bivariate polynomial over Q(phi), keyed by exponent pair (i, j).
// Canonical form: no stored zero coefficients. The zero polynomial has
// degree() == kZeroDegree.
class BiPoly {
  public:
    static constexpr long kZeroDegree = -1;
    using Key = std::pair<long, long>;
    using Map = std::map<Key, GoldenRational>;

    BiPoly() = default;
    BiPoly(long n) { add_term(0, 0, GoldenRational(n)); }  // NOLINT
    BiPoly(GoldenRational c) { add_term(0, 0, std::move(c)); }  // NOLINT

    static BiPoly variable(Var v) { return monomial(v == Var::X ? 1 : 0, v == Var::X ? 0 : 1, 1); }
    static BiPoly monomial(long i, long j, GoldenRational c) {
        BiPoly f;
        f.add_term(i, j, std::move(c));
        return f;
    }

    bool is_zero() const { return c_.empty(); }
    long total_degree() const;
    // Largest exponent of the given variable appearing in any term.
    long degree_in(Var v) const;
    const Map& terms() const { return c_; }
    GoldenRational coeff(long i, long j) const;
    void add_term(long i, long j, const GoldenRational& c);

    bool uses_only(Var v) const;

    GoldenRational eval(const GoldenRational& u, const GoldenRational& v) const;
    BiPoly subst(const BiPoly& fx, const BiPoly& fy) const;
    // Applies tau to every coefficient.
    BiPoly conj_coeffs() const;
    BiPoly pow(unsigned long e) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);

    std::string str() const;

  private:
    Map c_;
};

BiPoly operator+(BiPoly f, const BiPoly& g);
BiPoly operator-(BiPoly f, const BiPoly& g);
BiPoly operator*(const BiPoly& f, const BiPoly& g);
BiPoly operator*(const GoldenRational& c, const BiPoly& f);
bool operator==(const BiPoly& f, const BiPoly& g);
inline bool operator!=(const BiPoly& f, const BiPoly& g) { return !(f == g); }

// Symmetric-power polynomials: P_0 = 1, P_1 = v, P_k = v*P_{k-1} - P_{k-2}.
BiPoly pk(long k, Var v = Var::X);
// Power-trace polynomials: t_0 = 2, t_1 = v, t_k = v*t_{k-1} - t_{k-2}.
BiPoly tk(long k, Var v = Var::X);
// Exact integer evaluation of t_k at a golden integer (used for prime powers).
GoldenInt tk_at(long k, const GoldenInt& u);
// Indices of the expansion P_a * P_b = sum of P_c, c = a+b, a+b-2, ..., |a-b|.
std::vector<long> pk_product(long a, long b);

// Coefficients c_0..c_d of a univariate polynomial in the P-basis:
// f = sum c_k * pk(k, var).
struct PBasisVector {
    Var var = Var::X;
    std::vector<GoldenRational> c;
    BiPoly reconstruct() const;
};

// Exact triangular change of basis; throws WrongVariable if f involves the
// other variable.
PBasisVector to_p_basis(const BiPoly& f, Var var);

}  // namespace icosa
