#include "icosa/verify.hpp"

#include <cmath>
#include <map>
#include <set>

#include "icosa/frobsim.hpp"
#include "icosa/identities.hpp"
#include "icosa/isobaric.hpp"
#include "icosa/rescalc.hpp"

namespace icosa {

namespace {

struct Check {
    bool ok = true;
    std::string why;
    long count = 0;

    void expect(bool cond, const std::string& msg) {
        ++count;
        if (ok && !cond) {
            ok = false;
            why = msg;
        }
    }
    SectionResult result(const std::string& name) const {
        return {name, ok, ok ? std::to_string(count) + " checks passed" : why};
    }
};

// Frozen residue table, rows i = 0..8, columns j = 0..8-i.
const std::vector<std::vector<long>>& expected_r_rows() {
    static const std::vector<std::vector<long>> kRows = {
        {1, 0, 1, 0, 2, 0, 5, 0, 14}, {0, 0, 0, 0, 0, 0, 0, 1}, {1, 0, 1, 0, 2, 0, 6},
        {0, 0, 0, 1, 0, 4},           {2, 0, 2, 0, 5},          {0, 0, 0, 4},
        {5, 0, 6},                    {0, 1},                   {14}};
    return kRows;
}

// Frozen 9x9 character table in class-column order.
const std::array<std::array<GoldenInt, 9>, 9>& expected_char_rows() {
    static const std::array<std::array<GoldenInt, 9>, 9> kRows = [] {
        GoldenInt f = GoldenInt::phi(), fb = GoldenInt::phibar();
        return std::array<std::array<GoldenInt, 9>, 9>{{
            {GoldenInt(1), 1, 1, 1, 1, 1, 1, 1, 1},
            {GoldenInt(2), -2, 1, -1, 0, f, fb, -f, -fb},
            {GoldenInt(2), -2, 1, -1, 0, fb, f, -fb, -f},
            {GoldenInt(3), 3, 0, 0, -1, f, fb, f, fb},
            {GoldenInt(3), 3, 0, 0, -1, fb, f, fb, f},
            {GoldenInt(4), 4, 1, 1, 0, -1, -1, -1, -1},
            {GoldenInt(4), -4, -1, 1, 0, 1, 1, -1, -1},
            {GoldenInt(5), 5, -1, -1, 1, 0, 0, 0, 0},
            {GoldenInt(6), -6, 0, 0, 0, -1, -1, 1, 1},
        }};
    }();
    return kRows;
}

constexpr long kExpectedSizes[9] = {1, 1, 20, 20, 30, 12, 12, 12, 12};

std::array<GoldenRational, 9> expected_densities() {
    return {GoldenRational(1, 4),   GoldenRational(1, 6),  GoldenRational(1, 6),
            GoldenRational(1, 120), GoldenRational(1, 120), GoldenRational(1, 10),
            GoldenRational(1, 10),  GoldenRational(1, 10),  GoldenRational(1, 10)};
}

SectionResult check_golden() {
    Check c;
    GoldenInt phi = GoldenInt::phi(), phibar = GoldenInt::phibar();
    c.expect(phi * phi == GoldenInt(1) + phi, "phi^2 != phi + 1");
    c.expect(phi * phibar == GoldenInt(-1), "phi * phibar != -1");
    c.expect(phi.conj() == phibar, "tau(phi) != 1 - phi");
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            GoldenInt u{BigInt(a), BigInt(b)};
            c.expect(u.conj().conj() == u, "tau not involutive");
            for (long a2 = -3; a2 <= 3; ++a2)
                for (long b2 = -3; b2 <= 3; ++b2) {
                    GoldenInt v{BigInt(a2), BigInt(b2)};
                    c.expect((u * v).norm() == u.norm() * v.norm(), "norm not multiplicative");
                    c.expect((u * v).conj() == u.conj() * v.conj(), "tau not a homomorphism");
                }
            GoldenRational q{u, BigInt(7)};
            c.expect(parse_golden(q.str()) == q, "print/parse round trip failed");
            if (!u.is_zero()) {
                GoldenRational inv = GoldenRational{u}.inverse();
                c.expect(inv * GoldenRational{u} == GoldenRational(1), "inverse failed");
            }
        }
    std::multiset<long> norms;
    for (const auto& alpha : a_set()) {
        c.expect(in_A(alpha.conj()) && in_A(-alpha), "A not closed under tau and negation");
        norms.insert(alpha.norm().convert_to<long>());
    }
    c.expect(norms == std::multiset<long>({0, 1, 1, 4, 4, -1, -1, -1, -1}),
             "norm multiset of A is wrong");
    return c.result("golden");
}

SectionResult check_bipoly() {
    Check c;
    BiPoly x = BiPoly::variable(Var::X);
    c.expect(pk(2) == x * x - BiPoly(1), "P_2 wrong");
    c.expect(pk(3) == x * x * x - GoldenRational(2) * x, "P_3 wrong");
    c.expect(pk(4) == x.pow(4) - GoldenRational(3) * x.pow(2) + BiPoly(1), "P_4 wrong");
    c.expect(pk(5) == x.pow(5) - GoldenRational(4) * x.pow(3) + GoldenRational(3) * x, "P_5 wrong");
    for (long k = 0; k <= 50; ++k) {
        c.expect(pk(k).eval(2, 0) == GoldenRational(k + 1), "P_k(2) != k+1");
        long sign = k % 2 == 0 ? 1 : -1;
        c.expect(pk(k).eval(-2, 0) == GoldenRational(sign * (k + 1)), "P_k(-2) parity failed");
    }
    for (long k = 2; k <= 8; ++k)
        c.expect(tk(k) == pk(k) - pk(k - 2), "t_k != P_k - P_{k-2}");
    for (long a = 0; a <= 8; ++a)
        for (long b = 0; b <= 8; ++b) {
            BiPoly sum;
            for (long idx : pk_product(a, b)) sum += pk(idx);
            c.expect(pk(a) * pk(b) == sum, "pk_product expansion failed");
        }
    for (long k = 0; k <= 12; ++k) {
        BiPoly mono = x.pow(k);
        c.expect(to_p_basis(mono, Var::X).reconstruct() == mono, "P-basis round trip failed");
    }
    return c.result("bipoly");
}

SectionResult check_rescalc() {
    Check c;
    RFunctional r;
    const auto& rows = expected_r_rows();
    for (long i = 0; i <= 8; ++i)
        for (long j = 0; i + j <= 8; ++j) {
            c.expect(r.r_monomial(i, j) == GoldenRational(rows[i][j]), "r table mismatch");
            c.expect(r.r_monomial(i, j) == r.r_monomial(j, i), "r table asymmetric");
        }
    BiPoly x = BiPoly::variable(Var::X), y = BiPoly::variable(Var::Y);
    BiPoly d = x - y;
    BiPoly F = d * d * (d * d - BiPoly(5));
    BiPoly H = (x * y + BiPoly(1)) * x * x * (x * x - BiPoly(1)) * (x * x - BiPoly(4));
    c.expect(r.r_poly(F) == GoldenRational(0), "r(F) != 0");
    c.expect(r.r_poly((x * y).pow(2)) == GoldenRational(1), "r((xy)^2) != 1");
    c.expect(r.r_poly(H) == GoldenRational(0), "r(H) != 0");
    c.expect(r.r_poly(make_f_alpha(GoldenInt(0))) == GoldenRational(1), "r(f_0) != 1");
    auto dens = all_densities();
    auto want = expected_densities();
    GoldenRational total;
    for (int i = 0; i < 9; ++i) {
        c.expect(dens[i] == want[i], "density mismatch at " + a_label(a_set()[i]));
        total = total + dens[i];
        for (int j = 0; j < 9; ++j)
            if (a_set()[i].norm() == a_set()[j].norm())
                c.expect(dens[i] == dens[j], "density not norm-invariant");
    }
    c.expect(total == GoldenRational(1), "densities do not sum to 1");
    return c.result("rescalc");
}

SectionResult check_identities() {
    Check c;
    std::vector<std::pair<std::string, bool>> results;
    bool all = verify_all_identities(&results);
    c.expect(all && results.size() == 12, "identity ledger failed");
    for (const auto& [id, pass] : results) c.expect(pass, "identity " + id + " failed");
    c.expect(!tampered_i1().run().pass, "tampered control unexpectedly passed");
    return c.result("identities");
}

SectionResult check_icosagroup() {
    Check c;
    c.expect(enumerate_group().size() == 120, "group order != 120");
    const auto& T = group_table();
    for (int i = 0; i < 9; ++i)
        c.expect(T.cls(i).size == kExpectedSizes[i], "class size mismatch");
    const auto& rows = expected_char_rows();
    for (int i = 0; i < 9; ++i) {
        ClassFunction row = char_from_h(i);
        for (int j = 0; j < 9; ++j)
            c.expect(row[j] == GoldenRational{rows[i][j]}, "character table mismatch");
    }
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            GoldenRational ip = inner(char_from_h(i), char_from_h(j));
            c.expect(ip == GoldenRational(i == j ? 1 : 0), "row orthogonality failed");
        }
    for (int ci = 0; ci < 9; ++ci)
        for (int cj = 0; cj < 9; ++cj) {
            GoldenRational s;
            for (int i = 0; i < 9; ++i) {
                ClassFunction row = char_from_h(i);
                s = s + row[ci] * row[cj];
            }
            GoldenRational want =
                ci == cj ? GoldenRational(120) / GoldenRational(T.cls(ci).size) : GoldenRational(0);
            c.expect(s == want, "column orthogonality failed");
        }
    auto m5 = multiplicities(5);
    c.expect(m5 == std::array<long, 9>{0, 0, 0, 0, 0, 0, 0, 0, 1}, "m_5 does not select sigma_8");
    for (long k = 0; k <= 50; ++k) {
        auto m = multiplicities(k);  // integrality enforced inside
        long dim = 0;
        for (int i = 0; i < 9; ++i) dim += m[i] * char_degrees()[i];
        c.expect(dim == k + 1, "dimension bookkeeping failed at k=" + std::to_string(k));
    }
    RFunctional r;
    for (long i = 0; i <= 8; ++i)
        for (long j = 0; i + j <= 8; ++j) {
            BiPoly mono = BiPoly::monomial(i, j, 1);
            c.expect(group_average(mono) == r.r_monomial(i, j),
                     "group average disagrees with r at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
        }
    return c.result("icosagroup");
}

SectionResult check_isobaric() {
    Check c;
    for (const auto& atom : atom_table()) {
        c.expect(atom.h.eval(2, 2) == GoldenRational(atom.degree),
                 "atom degree != dictionary value at identity");
    }
    for (long k = 0; k <= 20; ++k) {
        IsobaricRep rep = build_Pi(k);
        auto m = multiplicities(k);
        for (const auto& alpha : a_set()) {
            GoldenRational a{alpha}, b{alpha.conj()};
            GoldenRational lhs = pk(k).eval(a, 0);
            GoldenRational via_h;
            for (int i = 0; i < 9; ++i)
                via_h = via_h + GoldenRational(m[i]) * h_poly(i).eval(a, b);
            c.expect(lhs == via_h, "pointwise bridge failed at k=" + std::to_string(k));
            c.expect(coeff_rep(rep, a, b) == lhs, "coeff_rep disagrees with P_k");
        }
    }
    for (long k = 0; k <= 50; ++k)
        c.expect(build_Pi(k).degree() == k + 1, "Pi_k degree != k+1");
    return c.result("isobaric");
}

SectionResult check_frobsim(std::uint64_t x, std::uint64_t seed, unsigned threads) {
    Check c;
    SimReport rep = run_report(x, seed, default_targets(), threads);
    static const std::map<std::uint64_t, long> kPi = {
        {10000, 1229}, {100000, 9592}, {1000000, 78498}};
    auto it = kPi.find(x);
    if (it != kPi.end())
        c.expect(rep.pi_x == it->second, "pi(x) mismatch");
    else
        c.expect(rep.pi_x > 0, "empty prime list");
    auto want = expected_densities();
    for (int i = 0; i < 9; ++i) {
        double target = want[i].to_double();
        double sigma = std::sqrt(target * (1.0 - target) / static_cast<double>(rep.pi_x));
        c.expect(std::abs(rep.densities[i] - target) <= 3.0 * sigma,
                 "empirical density outside 3 sigma at " + a_label(a_set()[i]));
    }
    // The 5% band is calibrated at x = 10^6; scale it like sigma ~ x^{-1/2}
    // for smaller cutoffs so the section stays meaningful there.
    double band = 0.05 * std::max(1.0, std::sqrt(1000000.0 / static_cast<double>(x)));
    for (const auto& row : rep.partial_sums)
        c.expect(std::abs(row.ratio - row.target) <= band,
                 "partial-sum ratio outside the tolerance band for f = " + row.label);
    // H vanishes on every tempered pair, so its sum is exactly zero.
    c.expect(rep.partial_sums.at(1).ratio == 0.0, "H partial sum not exactly zero");
    return c.result("frobsim");
}

}  // namespace

VerifyReport verify_all(std::uint64_t x, std::uint64_t seed, unsigned threads) {
    VerifyReport rep;
    rep.all_pass = true;
    auto add = [&rep](SectionResult r) {
        rep.sections.push_back(r);
        rep.all_pass = rep.all_pass && r.pass;
        return r.pass;
    };
    if (!add(check_golden())) return rep;
    if (!add(check_bipoly())) return rep;
    if (!add(check_rescalc())) return rep;
    if (!add(check_identities())) return rep;
    if (!add(check_icosagroup())) return rep;
    if (!add(check_isobaric())) return rep;
    add(check_frobsim(x, seed, threads));
    return rep;
}

}  // namespace icosa
