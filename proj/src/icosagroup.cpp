#include "icosa/icosagroup.hpp"

#include <algorithm>
#include <string>

namespace icosa {

namespace {

// Canonical class representatives, in the fixed column order.
const std::array<GroupElement, 9>& class_reps() {
    static const std::array<GroupElement, 9> kReps = {{{{1, 0, 0, 1}},
                                                       {{4, 0, 0, 4}},
                                                       {{3, 2, 4, 3}},
                                                       {{2, 2, 4, 2}},
                                                       {{2, 0, 0, 3}},
                                                       {{4, 1, 0, 4}},
                                                       {{4, 2, 0, 4}},
                                                       {{1, 1, 0, 1}},
                                                       {{1, 2, 0, 1}}}};
    return kReps;
}

// Seed row of the 2-dimensional character, aligned with class_reps().
const std::array<GoldenInt, 9>& chi_seed() {
    static const std::array<GoldenInt, 9> kChi = {
        GoldenInt(2),       GoldenInt(-2),       GoldenInt(1),
        GoldenInt(-1),      GoldenInt(0),        GoldenInt::phi(),
        GoldenInt::phibar(), -GoldenInt::phi(),  -GoldenInt::phibar()};
    return kChi;
}

}  // namespace

std::string GroupElement::str() const {
    return "[" + std::to_string(m[0]) + " " + std::to_string(m[1]) + ";" + std::to_string(m[2]) +
           " " + std::to_string(m[3]) + "]";
}

const std::vector<GroupElement>& enumerate_group() {
    static const std::vector<GroupElement> kGroup = [] {
        std::vector<GroupElement> g;
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                for (int c = 0; c < 5; ++c)
                    for (int d = 0; d < 5; ++d) {
                        GroupElement e{{a, b, c, d}};
                        if (e.det() == 1) g.push_back(e);
                    }
        return g;
    }();
    return kGroup;
}

ConjClassTable::ConjClassTable() {
    class_by_code_.fill(-1);
    const auto& G = enumerate_group();
    std::vector<std::vector<GroupElement>> classes;
    std::array<bool, 625> seen{};
    for (const GroupElement& g : G) {
        if (seen[g.code()]) continue;
        std::vector<GroupElement> orbit;
        for (const GroupElement& h : G) {
            GroupElement k = h.mul(g).mul(h.inverse());
            if (!seen[k.code()]) {
                seen[k.code()] = true;
                orbit.push_back(k);
            }
        }
        classes.push_back(std::move(orbit));
    }
    if (classes.size() != 9)
        throw ClassMismatch("expected 9 conjugacy classes, found " +
                            std::to_string(classes.size()));
    // Match each canonical representative to the unique class containing it.
    std::array<bool, 9> used{};
    for (int col = 0; col < 9; ++col) {
        const GroupElement& rep = class_reps()[col];
        int found = -1;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (std::find(classes[c].begin(), classes[c].end(), rep) != classes[c].end()) {
                found = static_cast<int>(c);
                break;
            }
        }
        if (found < 0) throw ClassMismatch("representative " + rep.str() + " not found");
        if (used[found])
            throw ClassMismatch("two representatives landed in one class at " + rep.str());
        used[found] = true;
        classes_[col] = {rep, static_cast<long>(classes[found].size()), chi_seed()[col]};
        for (const GroupElement& e : classes[found])
            class_by_code_[e.code()] = static_cast<signed char>(col);
    }
    long total = 0;
    for (const auto& ci : classes_) total += ci.size;
    if (total != 120) throw ClassMismatch("class sizes sum to " + std::to_string(total));
}

const ClassInfo& ConjClassTable::cls(int idx) const {
    if (idx < 0 || idx > 8) throw OutOfRange("class index " + std::to_string(idx));
    return classes_[idx];
}

int ConjClassTable::class_of(const GroupElement& g) const {
    int code = g.code();
    signed char c = class_by_code_[code];
    if (c < 0) throw ClassMismatch("element " + g.str() + " is not in the group");
    return c;
}

const ConjClassTable& group_table() {
    static const ConjClassTable kTable;
    return kTable;
}

const BiPoly& h_poly(int i) {
    static const std::array<BiPoly, 9> kH = [] {
        BiPoly x = BiPoly::variable(Var::X), y = BiPoly::variable(Var::Y);
        return std::array<BiPoly, 9>{
            BiPoly(1),        x, y, pk(2, Var::X), pk(2, Var::Y),
            x * y,            pk(3, Var::X),       pk(4, Var::X),
            x * pk(2, Var::Y)};
    }();
    if (i < 0 || i > 8) throw OutOfRange("h index " + std::to_string(i));
    return kH[i];
}

ClassFunction char_from_h(int i) {
    const BiPoly& h = h_poly(i);  // validates i
    const auto& T = group_table();
    ClassFunction out;
    for (int c = 0; c < 9; ++c) {
        GoldenRational chi{T.cls(c).chi};
        out[c] = h.eval(chi, chi.conj());
    }
    return out;
}

GoldenRational inner(const ClassFunction& f, const ClassFunction& g) {
    const auto& T = group_table();
    GoldenRational sum;
    for (int c = 0; c < 9; ++c) sum = sum + GoldenRational(T.cls(c).size) * f[c] * g[c];
    return sum / GoldenRational(120);
}

const std::array<long, 9>& char_degrees() {
    static const std::array<long, 9> kD = {1, 2, 2, 3, 3, 4, 4, 5, 6};
    return kD;
}

std::array<long, 9> multiplicities(long k) {
    const auto& T = group_table();
    BiPoly pkx = pk(k, Var::X);
    ClassFunction pk_of_chi;
    for (int c = 0; c < 9; ++c) {
        GoldenRational chi{T.cls(c).chi};
        pk_of_chi[c] = pkx.eval(chi, 0);
    }
    std::array<long, 9> out{};
    for (int i = 0; i < 9; ++i) {
        GoldenRational m = inner(pk_of_chi, char_from_h(i));
        if (!m.is_integer() || m.sign() < 0)
            throw NonIntegralMultiplicity("m_{" + std::to_string(k) + "," + std::to_string(i) +
                                          "} = " + m.str());
        out[i] = m.num.a.convert_to<long>();
    }
    return out;
}

GoldenRational group_average(const BiPoly& f) {
    const auto& T = group_table();
    GoldenRational sum;
    for (int c = 0; c < 9; ++c) {
        GoldenRational chi{T.cls(c).chi};
        sum = sum + GoldenRational(T.cls(c).size) * f.eval(chi, chi.conj());
    }
    return sum / GoldenRational(120);
}

}  // namespace icosa
