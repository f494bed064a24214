#pragma once

#include "osps3/realizations.hpp"
#include "osps3/sphere.hpp"

#include <json.hpp>

#include <optional>
#include <set>

namespace osps3 {

// One machine-checked operator identity. `method` records which decision
// procedure settled it: "normal-form" (canonical-form equality on the ambient
// Laurent module) or "sphere-quotient" (annihilation of a spanning set of the
// sphere's coordinate ring up to the configured degree). On failure `witness`
// holds a concrete counterexample: the first offending monomial and the
// nonzero residue it produces.
struct IdentityCheck {
    std::string id;
    std::string relation;
    std::string method;
    bool pass = false;
    std::string witness;
    double elapsed_ms = 0.0;
};

struct VerifierConfig {
    int sphere_cap = 6;                  // degree cap for quotient-ring checks
    std::set<std::string> sections;      // empty = run everything
    std::optional<Subset> only_subset;   // restrict per-subset families
    Mutation mutation = Mutation::none;
};

struct VerificationReport {
    std::vector<IdentityCheck> checks;

    int passed() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass ? 1 : 0;
        return n;
    }
    int failed() const { return static_cast<int>(checks.size()) - passed(); }
    bool all_pass() const { return failed() == 0; }
};

// the section names accepted by VerifierConfig::sections and the CLI
const std::vector<std::string>& verifier_sections();

// Individual families; each appends to `rep.checks` in deterministic order.
void verify_osp(VerificationReport& rep, const VerifierConfig& cfg);
void verify_scasimir(VerificationReport& rep, const VerifierConfig& cfg);
void verify_identifications(VerificationReport& rep, const VerifierConfig& cfg);
void verify_structure(VerificationReport& rep, const VerifierConfig& cfg);
void verify_rank1(VerificationReport& rep, const VerifierConfig& cfg);
void verify_symmetries(VerificationReport& rep, const VerifierConfig& cfg);

VerificationReport run_full_suite(const VerifierConfig& cfg);

nlohmann::json report_to_json(const VerificationReport& rep, const VerifierConfig& cfg);

} // namespace osps3
