#pragma once

#include <array>
#include <vector>

#include "icosa/bipoly.hpp"

namespace icosa {

// Element of SL2(F5): row-major entries (a b / c d) reduced mod 5, det = 1.
struct GroupElement {
    std::array<int, 4> m{};

    static GroupElement identity() { return {{1, 0, 0, 1}}; }

    int det() const { return ((m[0] * m[3] - m[1] * m[2]) % 5 + 5) % 5; }
    GroupElement mul(const GroupElement& o) const {
        auto r = [](int v) { return ((v % 5) + 5) % 5; };
        return {{r(m[0] * o.m[0] + m[1] * o.m[2]), r(m[0] * o.m[1] + m[1] * o.m[3]),
                 r(m[2] * o.m[0] + m[3] * o.m[2]), r(m[2] * o.m[1] + m[3] * o.m[3])}};
    }
    GroupElement inverse() const {
        auto r = [](int v) { return ((v % 5) + 5) % 5; };
        return {{m[3], r(-m[1]), r(-m[2]), m[0]}};
    }
    int code() const { return ((m[0] * 5 + m[1]) * 5 + m[2]) * 5 + m[3]; }
    std::string str() const;
};

inline bool operator==(const GroupElement& g, const GroupElement& h) { return g.m == h.m; }
inline bool operator!=(const GroupElement& g, const GroupElement& h) { return !(g == h); }
inline bool operator<(const GroupElement& g, const GroupElement& h) { return g.m < h.m; }

// All 120 determinant-1 matrices, in lexicographic entry order.
const std::vector<GroupElement>& enumerate_group();

struct ClassInfo {
    GroupElement rep;   // canonical representative
    long size = 0;
    GoldenInt chi;      // value of the seeded 2-dimensional character
};

// The nine conjugacy classes in canonical column order, found by brute-force
// conjugation and matched to the canonical representatives.
class ConjClassTable {
  public:
    ConjClassTable();  // throws ClassMismatch if the representative matching fails

    const std::array<ClassInfo, 9>& classes() const { return classes_; }
    const ClassInfo& cls(int idx) const;
    // Class index of an arbitrary group element.
    int class_of(const GroupElement& g) const;

  private:
    std::array<ClassInfo, 9> classes_;
    std::array<signed char, 625> class_by_code_;
};

// Shared immutable instance (built on first use; initialization is thread-safe).
const ConjClassTable& group_table();

// A class function: nine exact values in class order.
using ClassFunction = std::array<GoldenRational, 9>;

// The dictionary polynomials h_0..h_8 =
// 1, x, y, P2(x), P2(y), x*y, P3(x), P4(x), x*P2(y); throws OutOfRange.
const BiPoly& h_poly(int i);

// Row i of the character table, reconstructed as h_i(chi, tau(chi)) per class.
ClassFunction char_from_h(int i);

// (1/120) * sum over classes of size * f * g (all values are real).
GoldenRational inner(const ClassFunction& f, const ClassFunction& g);

// Multiplicities m_{k,i} of the character rows inside P_k(chi).
// Throws NonIntegralMultiplicity if any inner product fails integrality.
std::array<long, 9> multiplicities(long k);

// Degrees of the nine irreducible characters: 1,2,2,3,3,4,4,5,6.
const std::array<long, 9>& char_degrees();

// (1/120) * sum over classes of size * f(chi, tau(chi)).
GoldenRational group_average(const BiPoly& f);

}  // namespace icosa
