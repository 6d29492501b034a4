#pragma once

#include <array>
#include <string>

#include "icosa/icosagroup.hpp"

namespace icosa {

// One of the nine atomic constituents: an opaque label, its degree, and the
// dictionary polynomial giving its Dirichlet coefficients.
struct AtomInfo {
    int index;
    const char* label;
    long degree;
    BiPoly h;
};

const std::array<AtomInfo, 9>& atom_table();

// A formal isobaric sum of atoms with nonnegative multiplicities.
struct IsobaricRep {
    std::array<long, 9> mult{};

    long degree() const {
        long d = 0;
        for (int i = 0; i < 9; ++i) d += mult[i] * char_degrees()[i];
        return d;
    }
};

// The isobaric representation with multiplicity vector m_{k,.}; degree k+1.
IsobaricRep build_Pi(long k);

// h_i(a, b); throws OutOfRange.
GoldenRational coeff_atom(int i, const GoldenRational& a, const GoldenRational& b);

// Sum of mult_i * h_i(a, b).
GoldenRational coeff_rep(const IsobaricRep& rep, const GoldenRational& a, const GoldenRational& b);

}  // namespace icosa
