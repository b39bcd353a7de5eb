#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "heisensym/serialize.hpp"

namespace heisensym {

/// Outcome of one named check. status is "pass", "fail", "budget exceeded",
/// or "n/a (...)" when the check does not apply to the signature.
struct CheckResult {
    std::string name;
    std::string status;
    Json details = Json::object();
    double seconds = 0.0;

    bool ok() const { return status == "pass" || status.rfind("n/a", 0) == 0; }
};

// Single systems: the group is exactly the determinant-one matrices (naive scan).
CheckResult check_determinant_condition(const Signature& sig, const Budget& budget);
// Single systems: every group element lifts to a word realizing it.
CheckResult check_lift_section(const Signature& sig, const Budget& budget);
CheckResult check_automorphism_count(const Signature& sig, const Budget& budget);
CheckResult check_generation(const Signature& sig, const Budget& budget);
// Equal dimensions: order matches the closed form and membership is the plain
// condition transpose(H)·J·H = J.
CheckResult check_symplectic_formula(const Signature& sig, const Budget& budget);
// Exhaustive when there are at most `exhaustive_points` phase points,
// otherwise `samples` random (H, u, v) triples.
CheckResult check_pairing_invariance(const Signature& sig, const Budget& budget, std::uint64_t seed,
                                     std::uint64_t samples = 10'000, std::uint64_t exhaustive_points = 36);
CheckResult check_coupling_normalization(const Signature& sig);
CheckResult check_commutation(const Signature& sig, std::uint64_t seed, std::uint64_t samples = 1'000);

struct VerifyReport {
    Signature signature;
    std::vector<CheckResult> checks;

    bool passed() const;
    bool budget_exceeded() const;
};

/// Runs every check; progress lines go to `progress` if non-null.
VerifyReport run_verification(const Signature& sig, const Budget& budget, std::uint64_t seed,
                              std::ostream* progress = nullptr);

Json check_to_json(const CheckResult& c);
Json verify_to_json(const VerifyReport& r);

}  // namespace heisensym
