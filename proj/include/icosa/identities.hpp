#pragma once

#include <functional>
#include <string>
#include <vector>

#include "icosa/bipoly.hpp"

namespace icosa {

enum class IdentityKind { Equality, Pointwise };

struct IdentityReport {
    bool pass = false;
    // Difference lhs - rhs for equality entries; zero for pointwise entries.
    BiPoly witness;
    std::string detail;
};

struct IdentityRecord {
    std::string id;
    IdentityKind kind;
    std::string location;
    std::function<IdentityReport()> run;
};

// The twelve-entry ledger I1..I12, in order.
const std::vector<IdentityRecord>& identity_ledger();

// Throws UnknownIdentity for an id not in the ledger.
IdentityReport verify_identity(const std::string& id);

// Runs every entry; optionally reports (id, pass) pairs. True iff all pass.
bool verify_all_identities(std::vector<std::pair<std::string, bool>>* results = nullptr);

// Negative control: the defining expansion with one coefficient corrupted
// (6 -> 7); its run() must fail with a nonzero witness.
IdentityRecord tampered_i1();

}  // namespace icosa
