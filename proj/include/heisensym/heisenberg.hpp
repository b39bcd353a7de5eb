#pragma once

#include <vector>

#include "heisensym/cyclotomic.hpp"
#include "heisensym/modring.hpp"

namespace heisensym {

/// Exponents of Q^q P^p on one tensor factor.
struct FactorExponents {
    Residue q;
    Residue p;
    friend bool operator==(const FactorExponents&, const FactorExponents&) = default;
};

/// ω_L^phase · ⊗_t Q_{n_t}^{q_t} P_{n_t}^{p_t}, normal ordered Q before P on
/// every factor. The phase lives in Z_L with L = lcm(n_1..n_k).
class HeisenbergElement {
public:
    HeisenbergElement(Signature sig, Residue phase, std::vector<FactorExponents> factors);

    static HeisenbergElement identity(const Signature& sig);
    // Convenience: plain integers, reduced into the right rings.
    static HeisenbergElement from_ints(const Signature& sig, Int phase, const std::vector<std::pair<Int, Int>>& qp);
    // ω_L^phase · I
    static HeisenbergElement central(const Signature& sig, Int phase);

    const Signature& signature() const noexcept { return sig_; }
    const Residue& phase() const noexcept { return phase_; }
    const std::vector<FactorExponents>& factors() const noexcept { return factors_; }
    const FactorExponents& factor(std::size_t t) const { return factors_.at(t); }

    bool is_identity() const noexcept;

    friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;

private:
    Signature sig_;
    Residue phase_;
    std::vector<FactorExponents> factors_;
};

std::ostream& operator<<(std::ostream& os, const HeisenbergElement& a);

HeisenbergElement compose(const HeisenbergElement& a, const HeisenbergElement& b);
HeisenbergElement inverse(const HeisenbergElement& a);
HeisenbergElement power(const HeisenbergElement& a, std::uint64_t exponent);

/// c with compose(a, b) = ω_L^c · compose(b, a).
Residue commutator_phase(const HeisenbergElement& a, const HeisenbergElement& b);

/// Smallest m >= 1 with a^m = identity.
Int element_order(const HeisenbergElement& a);

/// A_t for t in 1..2k: odd t = 2i-1 is P on factor i, even t = 2i is Q.
HeisenbergElement standard_generator(const Signature& sig, std::size_t t);

/// N×N monomial matrix at cyclotomic order M = 2L.
CycloMatrix to_matrix(const HeisenbergElement& a);

/// Exact inverse of to_matrix. Throws NotHeisenberg.
HeisenbergElement from_monomial(const Signature& sig, const CycloMatrix& x);

/// Reads x as λ·to_matrix(a) for some nonzero scalar λ and returns (a, λ)
/// with a.phase() == 0. Throws NotHeisenberg.
struct ProjectiveMatch {
    HeisenbergElement element;
    CycloElement scalar;
};
ProjectiveMatch match_projective(const Signature& sig, const CycloMatrix& x);

}  // namespace heisensym
