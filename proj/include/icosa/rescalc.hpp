#pragma once

#include <array>
#include <utility>
#include <vector>

#include "icosa/bipoly.hpp"

namespace icosa {

// Hypothesis flags encoded in the base values of the functional: whether the
// k-th symmetric powers of the two constituents are isomorphic. The defaults
// reproduce the proven configuration; tests toggle them as negative controls.
struct BaseFlags {
    bool sym1_isomorphic = false;
    bool sym2_isomorphic = false;
    bool sym3_isomorphic = true;
    bool sym4_isomorphic = true;
};

// The residue functional r on polynomials of total degree <= 8. The full
// 45-entry monomial table is computed eagerly at construction; instances are
// immutable afterwards and safe for concurrent reads.
class RFunctional {
  public:
    static constexpr long kMaxDegree = 8;

    explicit RFunctional(BaseFlags flags = {});

    const BaseFlags& flags() const { return flags_; }

    // 1 iff a = b and the pair of degree-a symmetric powers is isomorphic
    // (a = 0 always; a = 1..4 according to the flags). Throws OutOfRange
    // unless 0 <= a, b <= 4.
    int r_base(long a, long b) const;

    // r(x^i y^j); throws DegreeTooHigh when i + j > 8 or either is negative.
    GoldenRational r_monomial(long i, long j) const;

    // Linear extension to polynomials of total degree <= 8.
    GoldenRational r_poly(const BiPoly& f) const;

  private:
    GoldenRational compute(long i, long j, std::map<std::pair<long, long>, GoldenRational>& memo) const;

    BaseFlags flags_;
    std::array<std::array<GoldenRational, kMaxDegree + 1>, kMaxDegree + 1> table_{};
};

// The selector polynomial f_alpha vanishing at (beta, tau(beta)) for every
// beta in A except alpha; throws NotInA.
BiPoly make_f_alpha(const GoldenInt& alpha);
// r(f_alpha) / f_alpha(alpha, tau(alpha)), computed with default flags.
GoldenRational density(const GoldenInt& alpha);
// All nine densities in a_set() order.
std::array<GoldenRational, 9> all_densities();

}  // namespace icosa
