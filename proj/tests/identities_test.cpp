#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "icosa/identities.hpp"
#include "icosa/rescalc.hpp"

using icosa::BiPoly;
using icosa::GoldenRational;
using icosa::identity_ledger;
using icosa::IdentityKind;
using icosa::IdentityRecord;
using icosa::IdentityReport;
using icosa::pk;
using icosa::tampered_i1;
using icosa::Var;
using icosa::verify_all_identities;
using icosa::verify_identity;

namespace {

const BiPoly kX = BiPoly::variable(Var::X);
const BiPoly kY = BiPoly::variable(Var::Y);

}  // namespace

TEST_CASE("the ledger carries twelve uniquely named entries") {
    const auto& L = identity_ledger();
    REQUIRE(L.size() == 12);
    std::set<std::string> ids;
    for (std::size_t n = 0; n < L.size(); ++n) {
        CHECK(L[n].id == "I" + std::to_string(n + 1));
        CHECK_FALSE(L[n].location.empty());
        ids.insert(L[n].id);
    }
    CHECK(ids.size() == 12);
}

TEST_CASE("every ledger entry passes") {
    for (const auto& rec : identity_ledger()) {
        CAPTURE(rec.id);
        IdentityReport rep = rec.run();
        CHECK(rep.pass);
        if (rec.kind == IdentityKind::Equality) CHECK(rep.witness.is_zero());
    }
    std::vector<std::pair<std::string, bool>> results;
    CHECK(verify_all_identities(&results));
    CHECK(results.size() == 12);
}

TEST_CASE("lookup by id") {
    CHECK(verify_identity("I7").pass);
    CHECK(verify_identity("I12").pass);
    CHECK_THROWS_AS(verify_identity("I13"), icosa::UnknownIdentity);
    CHECK_THROWS_AS(verify_identity(""), icosa::UnknownIdentity);
}

TEST_CASE("the tampered control fails loudly") {
    IdentityRecord bad = tampered_i1();
    IdentityReport rep = bad.run();
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.witness.is_zero());
    CHECK_FALSE(rep.detail.empty());
}

TEST_CASE("independent restatement: the integrality dichotomy") {
    BiPoly lhs = kX.pow(2) * (pk(3) - pk(3, Var::Y)) +
                 (kX * kX + kX * kY - BiPoly(1)) * (kX * pk(2, Var::Y) - kY * pk(2));
    BiPoly rhs = (kX - kY) * (kX * kX - kX - BiPoly(1)) * (kX * kX + kX - BiPoly(1));
    CHECK(lhs == rhs);
}

TEST_CASE("independent restatement: the eighth power square") {
    BiPoly rhs = (pk(4) + GoldenRational(3) * pk(2) + BiPoly(2)).pow(2);
    CHECK(kX.pow(8) == rhs);
    // Perturbing the middle coefficient breaks it.
    BiPoly wrong = (pk(4) + GoldenRational(4) * pk(2) + BiPoly(2)).pow(2);
    CHECK(kX.pow(8) != wrong);
}

TEST_CASE("perturbing any single small coefficient breaks the defining expansion") {
    BiPoly F = (kX - kY).pow(2) * ((kX - kY).pow(2) - BiPoly(5));
    for (const auto& [key, c] : F.terms()) {
        BiPoly dented = F;
        dented.add_term(key.first, key.second, GoldenRational(1));
        CHECK(dented != F);
        CHECK(dented.coeff(key.first, key.second) == c + GoldenRational(1));
    }
}

TEST_CASE("the gap polynomial bridges to the residue functional") {
    // r annihilates F and stays zero after multiplying by the square gap.
    icosa::RFunctional r;
    BiPoly F = (kX - kY).pow(2) * ((kX - kY).pow(2) - BiPoly(5));
    CHECK(r.r_poly(F) == GoldenRational(0));
    CHECK(r.r_poly((kX - kY).pow(2) * F) == GoldenRational(0));
    CHECK(r.r_poly((kX - kY).pow(2)) == GoldenRational(2));
}
