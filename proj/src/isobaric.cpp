#include "icosa/isobaric.hpp"

namespace icosa {

const std::array<AtomInfo, 9>& atom_table() {
    static const std::array<AtomInfo, 9> kAtoms = [] {
        const char* labels[9] = {"1",       "pi",      "pi'",     "sym2 pi", "sym2 pi'",
                                 "pi x pi'", "sym3 pi", "sym4 pi", "pi x sym2 pi'"};
        std::array<AtomInfo, 9> a;
        for (int i = 0; i < 9; ++i) a[i] = {i, labels[i], char_degrees()[i], h_poly(i)};
        return a;
    }();
    return kAtoms;
}

IsobaricRep build_Pi(long k) { return IsobaricRep{multiplicities(k)}; }

GoldenRational coeff_atom(int i, const GoldenRational& a, const GoldenRational& b) {
    return h_poly(i).eval(a, b);
}

GoldenRational coeff_rep(const IsobaricRep& rep, const GoldenRational& a,
                         const GoldenRational& b) {
    GoldenRational out;
    for (int i = 0; i < 9; ++i)
        if (rep.mult[i] != 0) out = out + GoldenRational(rep.mult[i]) * coeff_atom(i, a, b);
    return out;
}

}  // namespace icosa
