#include "icosa/identities.hpp"

#include "icosa/rescalc.hpp"

namespace icosa {

namespace {

BiPoly xv() { return BiPoly::variable(Var::X); }
BiPoly yv() { return BiPoly::variable(Var::Y); }
BiPoly P(long k, Var v) { return pk(k, v); }

// (x - y)^2 ((x - y)^2 - 5)
BiPoly gap_poly() {
    BiPoly d = xv() - yv();
    return d * d * (d * d - BiPoly(5));
}

// The expanded form of the gap polynomial, with the P_2(x)P_2(y) coefficient
// exposed so the tampered control can corrupt it.
BiPoly gap_expansion_rhs(long c22) {
    BiPoly x = xv(), y = yv();
    return P(4, Var::X) - GoldenRational(4) * (P(3, Var::X) * y) +
           GoldenRational(c22) * (P(2, Var::X) * P(2, Var::Y)) -
           GoldenRational(4) * (x * P(3, Var::Y)) + P(4, Var::Y) +
           GoldenRational(4) * P(2, Var::X) - GoldenRational(6) * (x * y) +
           GoldenRational(4) * P(2, Var::Y);
}

IdentityRecord equality_record(std::string id, std::string location, BiPoly lhs, BiPoly rhs) {
    return {std::move(id), IdentityKind::Equality, std::move(location),
            [lhs = std::move(lhs), rhs = std::move(rhs)]() {
                IdentityReport rep;
                rep.witness = lhs - rhs;
                rep.pass = rep.witness.is_zero();
                rep.detail = rep.pass ? "difference is the zero polynomial"
                                      : "nonzero difference " + rep.witness.str();
                return rep;
            }};
}

IdentityReport run_i9() {
    BiPoly x = xv(), y = yv(), d = xv() - yv();
    IdentityReport rep;
    rep.witness = d.pow(4) * gap_poly() - d.pow(6) * (d * d - BiPoly(5));
    if (!rep.witness.is_zero()) {
        rep.detail = "equality part failed";
        return rep;
    }
    BiPoly g = GoldenRational(128) * (x.pow(8) + y.pow(8)) - d.pow(8);
    // Exact sign check on the grid {-4.0, -3.9, ..., 4.0}^2.
    for (long ku = -40; ku <= 40; ++ku)
        for (long kw = -40; kw <= 40; ++kw) {
            GoldenRational u(ku, 10), w(kw, 10);
            if (g.eval(u, w).sign() < 0) {
                rep.detail = "128-bound failed at grid point";
                return rep;
            }
        }
    // On the ray y = -x the bound is tight: the difference vanishes identically.
    BiPoly on_ray = g.subst(xv(), -xv());
    if (!on_ray.is_zero()) {
        rep.detail = "128-bound not tight on the ray y = -x";
        return rep;
    }
    rep.pass = true;
    rep.detail = "equality holds; bound nonnegative on 6561 grid points, tight on y = -x";
    return rep;
}

IdentityReport run_i10() {
    BiPoly F = gap_poly();
    IdentityReport rep;
    long checked = 0;
    for (long u = -50; u <= 50; ++u)
        for (long v = -50; v <= 50; ++v) {
            if (((u - v) % 2) != 0) continue;
            // beta = (u + v sqrt5)/2 = (u - v)/2 + v*phi, an algebraic integer.
            GoldenRational beta{GoldenInt(BigInt(u - v), BigInt(2 * v)), BigInt(2)};
            GoldenRational val = F.eval(beta, beta.conj());
            GoldenRational vv(v);
            GoldenRational expected = GoldenRational(25) * vv * vv * (vv * vv - GoldenRational(1));
            if (val != expected || val.sign() < 0) {
                rep.detail = "failed at u=" + std::to_string(u) + " v=" + std::to_string(v);
                return rep;
            }
            if (v % 2 == 0) {
                GoldenRational dsq = (beta - beta.conj()) * (beta - beta.conj());
                if ((val - GoldenRational(15) * dsq).sign() < 0) {
                    rep.detail = "15(x-y)^2 bound failed at u=" + std::to_string(u) +
                                 " v=" + std::to_string(v);
                    return rep;
                }
            }
            ++checked;
        }
    rep.pass = true;
    rep.detail = std::to_string(checked) + " conjugate pairs checked";
    return rep;
}

IdentityReport run_i12() {
    IdentityReport rep;
    long evals = 0;
    for (const GoldenInt& alpha : a_set()) {
        BiPoly f = make_f_alpha(alpha);
        GoldenRational at_alpha = f.eval(GoldenRational{alpha}, GoldenRational{alpha.conj()});
        if (at_alpha.sign() <= 0) {
            rep.detail = "not positive at alpha = " + alpha.str();
            return rep;
        }
        for (const GoldenInt& beta : a_set()) {
            if (beta == alpha) continue;
            if (!f.eval(GoldenRational{beta}, GoldenRational{beta.conj()}).is_zero()) {
                rep.detail = "does not vanish at beta = " + beta.str() +
                             " for alpha = " + alpha.str();
                return rep;
            }
            ++evals;
        }
        for (long m = -100; m <= 100; ++m) {
            if (f.eval(GoldenRational(m), GoldenRational(m)).sign() < 0) {
                rep.detail = "negative at integer m = " + std::to_string(m) +
                             " for alpha = " + alpha.str();
                return rep;
            }
            ++evals;
        }
    }
    rep.pass = true;
    rep.detail = std::to_string(evals) + " selector evaluations checked";
    return rep;
}

std::vector<IdentityRecord> build_ledger() {
    std::vector<IdentityRecord> L;
    BiPoly x = xv(), y = yv();
    BiPoly F = gap_poly();

    L.push_back(equality_record("I1", "defining expansion of the gap polynomial", F,
                                gap_expansion_rhs(6)));

    {
        // Half-integer coordinates: x = (u + v sqrt5)/2, y = (u - v sqrt5)/2,
        // with (u, v) written as (x, y) and sqrt5 = 2 phi - 1.
        GoldenRational half(1, 2);
        GoldenRational half_sqrt5{GoldenInt::sqrt5(), BigInt(2)};
        BiPoly gx = half * x + half_sqrt5 * y;
        BiPoly gy = half * x - half_sqrt5 * y;
        BiPoly rhs = GoldenRational(25) * (y * y * (y * y - BiPoly(1)));
        L.push_back(equality_record("I2", "gap polynomial in half-integer coordinates",
                                    F.subst(gx, gy), rhs));
    }

    L.push_back(equality_record(
        "I3", "square of the cross term", (x * y).pow(2),
        P(2, Var::X) * P(2, Var::Y) + P(2, Var::X) + P(2, Var::Y) + BiPoly(1)));

    {
        BiPoly rhs = BiPoly(20) - (x - y).pow(2) * F + P(2, Var::X) * P(4, Var::X) -
                     GoldenRational(6) * (P(3, Var::X) * (y * P(2, Var::X))) +
                     GoldenRational(15) * (P(4, Var::X) * P(2, Var::Y)) +
                     GoldenRational(15) * (P(2, Var::X) * P(4, Var::Y)) -
                     GoldenRational(6) * ((x * P(2, Var::Y)) * P(3, Var::Y)) +
                     P(2, Var::Y) * P(4, Var::Y) + GoldenRational(14) * P(4, Var::X) -
                     GoldenRational(38) * (P(3, Var::X) * y) +
                     GoldenRational(60) * (P(2, Var::X) * P(2, Var::Y)) -
                     GoldenRational(38) * (x * P(3, Var::Y)) +
                     GoldenRational(14) * P(4, Var::Y) + GoldenRational(38) * P(2, Var::X) -
                     GoldenRational(48) * (x * y) + GoldenRational(38) * P(2, Var::Y);
        L.push_back(equality_record("I4", "long expansion isolating P3(x)P3(y)",
                                    GoldenRational(20) * (P(3, Var::X) * P(3, Var::Y)), rhs));
    }

    L.push_back(equality_record(
        "I5", "product of the two mixed cubic terms",
        (x * P(2, Var::Y)) * (y * P(2, Var::X)),
        P(3, Var::X) * P(3, Var::Y) + x * P(3, Var::Y) + y * P(3, Var::X) + x * y));

    L.push_back(equality_record(
        "I6", "difference of fourth symmetric powers factors through x + y",
        P(4, Var::X) - P(4, Var::Y),
        (x + y) * (P(3, Var::X) - P(3, Var::Y) + x * P(2, Var::Y) - y * P(2, Var::X))));

    L.push_back(equality_record(
        "I7", "integrality dichotomy factorization",
        x * x * (P(3, Var::X) - P(3, Var::Y)) +
            (x * x + x * y - BiPoly(1)) * (x * P(2, Var::Y) - y * P(2, Var::X)),
        (x - y) * (x * x - x - BiPoly(1)) * (x * x + x - BiPoly(1))));

    L.push_back(equality_record("I8", "eighth power as a squared P-combination", x.pow(8),
                                (P(4, Var::X) + GoldenRational(3) * P(2, Var::X) + BiPoly(2)).pow(2)));

    L.push_back({"I9", IdentityKind::Equality,
                 "gap polynomial against even powers; 128-bound", run_i9});

    L.push_back({"I10", IdentityKind::Pointwise,
                 "nonnegativity of the gap polynomial on conjugate pairs", run_i10});

    L.push_back(equality_record("I11", "fifth symmetric power root set",
                                P(5, Var::X) - x * (x * x - BiPoly(1)),
                                x * (x * x - BiPoly(1)) * (x * x - BiPoly(4))));

    L.push_back({"I12", IdentityKind::Pointwise,
                 "selector family vanishing and positivity", run_i12});
    return L;
}

}  // namespace

const std::vector<IdentityRecord>& identity_ledger() {
    static const std::vector<IdentityRecord> kLedger = build_ledger();
    return kLedger;
}

IdentityReport verify_identity(const std::string& id) {
    for (const auto& rec : identity_ledger())
        if (rec.id == id) return rec.run();
    throw UnknownIdentity("no ledger entry with id '" + id + "'");
}

bool verify_all_identities(std::vector<std::pair<std::string, bool>>* results) {
    bool all = true;
    for (const auto& rec : identity_ledger()) {
        bool pass = rec.run().pass;
        all = all && pass;
        if (results) results->emplace_back(rec.id, pass);
    }
    return all;
}

IdentityRecord tampered_i1() {
    return equality_record("I1-tampered", "negative control with a corrupted coefficient",
                           gap_poly(), gap_expansion_rhs(7));
}

}  // namespace icosa
