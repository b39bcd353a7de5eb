#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "heisensym/budget.hpp"
#include "heisensym/phasespace.hpp"
#include "heisensym/symplectic.hpp"

namespace heisensym {

/// Images of the 2k standard generator projections under a candidate
/// endomorphism of the phase space. Built only from PhasePoint arithmetic.
class GeneratorImageTable {
public:
    GeneratorImageTable(Signature sig, std::vector<PhasePoint> images);

    static GeneratorImageTable identity(const Signature& sig);

    const Signature& signature() const noexcept { return sig_; }
    const std::vector<PhasePoint>& images() const noexcept { return images_; }

    // n_t · image = 0 for the image of every generator on factor t.
    bool satisfies_order_condition() const;

    friend bool operator==(const GeneratorImageTable&, const GeneratorImageTable&) = default;

private:
    Signature sig_;
    std::vector<PhasePoint> images_;
};

/// e_t = projection of A_t, 1-based.
PhasePoint basis_point(const Signature& sig, std::size_t t);

bool is_pairing_preserving(const GeneratorImageTable& table);
bool is_invertible(const GeneratorImageTable& table);

/// Columns of the block matrix are the images, each in (P, Q) coordinates
/// per factor. Throws StructureViolation if the table breaks divisibility.
BlockSymplecticMatrix witness_matrix(const GeneratorImageTable& table);
GeneratorImageTable image_table(const BlockSymplecticMatrix& h);

struct AutomorphismSearchOptions {
    Budget budget;
    // Check pairings as each image is placed; false defers all checks to the leaves.
    bool prune = true;
};

/// Number of order-respecting, pairing-preserving, invertible tables.
/// `witness`, if given, receives each one in a deterministic order.
std::uint64_t count_automorphisms(const Signature& sig, const AutomorphismSearchOptions& options = {},
                                  const std::function<void(const GeneratorImageTable&)>& witness = {});

struct CrossCheckReport {
    Signature signature;
    std::uint64_t oracle_count = 0;
    std::uint64_t group_count = 0;
    std::optional<BigInt> formula_count;  // equal dimensions only
    bool counts_agree = false;
    bool formula_agrees = true;
    // Oracle witness → matrix is injective and lands on symmetries, and every
    // enumerated symmetry comes back as a valid oracle table.
    bool bijection_verified = false;
    double seconds = 0.0;

    bool passed() const noexcept { return counts_agree && formula_agrees && bijection_verified; }
};

CrossCheckReport cross_check(const Signature& sig, const Budget& budget = {});

}  // namespace heisensym
