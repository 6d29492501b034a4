#include "icosa/rescalc.hpp"

#include <string>

namespace icosa {

RFunctional::RFunctional(BaseFlags flags) : flags_(flags) {
    std::map<std::pair<long, long>, GoldenRational> memo;
    for (long i = 0; i <= kMaxDegree; ++i)
        for (long j = 0; i + j <= kMaxDegree; ++j) table_[i][j] = compute(i, j, memo);
}

int RFunctional::r_base(long a, long b) const {
    if (a < 0 || a > 4 || b < 0 || b > 4)
        throw OutOfRange("r_base index (" + std::to_string(a) + "," + std::to_string(b) +
                         ") outside 0..4");
    if (a != b) return 0;
    switch (a) {
        case 0: return 1;
        case 1: return flags_.sym1_isomorphic ? 1 : 0;
        case 2: return flags_.sym2_isomorphic ? 1 : 0;
        case 3: return flags_.sym3_isomorphic ? 1 : 0;
        default: return flags_.sym4_isomorphic ? 1 : 0;
    }
}

GoldenRational RFunctional::compute(long i, long j,
                                    std::map<std::pair<long, long>, GoldenRational>& memo) const {
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    GoldenRational out;
    if (i == 0 || j == 0) {
        // Single-variable monomial: the P_0 coefficient of its P-basis
        // expansion (r kills P_k for 1 <= k <= 8).
        long k = i + j;
        Var v = j == 0 ? Var::X : Var::Y;
        BiPoly mono = BiPoly::variable(v).pow(static_cast<unsigned long>(k));
        out = to_p_basis(mono, v).c[0];
    } else if (i <= 4 && j <= 4) {
        // Tensor P-basis: pair the expansions of x^i and y^j through r_base.
        PBasisVector px = to_p_basis(BiPoly::variable(Var::X).pow(static_cast<unsigned long>(i)), Var::X);
        PBasisVector py = to_p_basis(BiPoly::variable(Var::Y).pow(static_cast<unsigned long>(j)), Var::Y);
        for (long a = 0; a < static_cast<long>(px.c.size()); ++a)
            for (long b = 0; b < static_cast<long>(py.c.size()); ++b)
                if (r_base(a, b) != 0) out = out + px.c[a] * py.c[b];
    } else if (i > j) {
        // Reduction rule; terminates because (i+j, max) decreases.
        out = compute(i - 1, j + 1, memo) + compute(i - 2, j, memo) - compute(i - 1, j - 1, memo);
    } else {
        // Mirrored rule with the roles of x and y reversed (j > i here).
        out = compute(i + 1, j - 1, memo) + compute(i, j - 2, memo) - compute(i - 1, j - 1, memo);
    }
    memo.emplace(std::make_pair(i, j), out);
    return out;
}

GoldenRational RFunctional::r_monomial(long i, long j) const {
    if (i < 0 || j < 0 || i + j > kMaxDegree)
        throw DegreeTooHigh("r(x^" + std::to_string(i) + " y^" + std::to_string(j) +
                            ") is outside total degree " + std::to_string(kMaxDegree));
    return table_[i][j];
}

GoldenRational RFunctional::r_poly(const BiPoly& f) const {
    long d = f.total_degree();
    if (d > kMaxDegree)
        throw DegreeTooHigh("polynomial of total degree " + std::to_string(d) +
                            " exceeds " + std::to_string(kMaxDegree));
    GoldenRational out;
    for (const auto& [k, c] : f.terms()) out = out + c * table_[k.first][k.second];
    return out;
}

BiPoly make_f_alpha(const GoldenInt& alpha) {
    if (!in_A(alpha)) throw NotInA("f_alpha requires alpha in A, got " + alpha.str());
    BiPoly x = BiPoly::variable(Var::X), y = BiPoly::variable(Var::Y);
    GoldenRational al{alpha};
    if (alpha == GoldenInt(0)) return (x * y + BiPoly(1)) * (x * x - BiPoly(1)) * (x * x - BiPoly(4));
    if (alpha == GoldenInt(1) || alpha == GoldenInt(-1))
        return (x * x + y * y - BiPoly(3)) * x * (x + BiPoly(al)) * (x * x - BiPoly(4));
    if (alpha == GoldenInt(2) || alpha == GoldenInt(-2))
        return (x * y + BiPoly(1)) * x * (x * x - BiPoly(1)) * (x + BiPoly(al));
    // Golden cases: (x - y)(1 + eps(x + y))(x - tau(alpha)), eps = alpha + tau(alpha).
    GoldenRational eps{alpha + alpha.conj()};
    return (x - y) * (BiPoly(1) + eps * (x + y)) * (x - BiPoly(GoldenRational{alpha.conj()}));
}

GoldenRational density(const GoldenInt& alpha) {
    static const RFunctional r;
    BiPoly f = make_f_alpha(alpha);
    GoldenRational al{alpha}, alc{alpha.conj()};
    return r.r_poly(f) / f.eval(al, alc);
}

std::array<GoldenRational, 9> all_densities() {
    std::array<GoldenRational, 9> out;
    for (int i = 0; i < 9; ++i) out[i] = density(a_set()[i]);
    return out;
}

}  // namespace icosa
