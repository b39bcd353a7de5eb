#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heisensym/budget.hpp"
#include "heisensym/cyclotomic.hpp"
#include "heisensym/heisenberg.hpp"
#include "heisensym/symplectic.hpp"

namespace heisensym {

enum class GeneratorKind { Fourier, Gauss, Multiplier, Coupling };

/// One letter of a generator word. Local letters (F, G, M) act on `factor`
/// (1-based) of a multipartite system; `factor` is 1 for single systems.
/// Coupling letters are R_ij with 1 <= i < j <= k.
struct GeneratorRef {
    GeneratorKind kind;
    Int n = 0;
    Int a = 1;
    std::size_t factor = 1;
    std::size_t i = 0;
    std::size_t j = 0;

    static GeneratorRef fourier(Int n, std::size_t factor = 1) { return {GeneratorKind::Fourier, n, 1, factor, 0, 0}; }
    static GeneratorRef gauss(Int n, std::size_t factor = 1) { return {GeneratorKind::Gauss, n, 1, factor, 0, 0}; }
    static GeneratorRef multiplier(Int n, Int a, std::size_t factor = 1) {
        return {GeneratorKind::Multiplier, n, a, factor, 0, 0};
    }
    static GeneratorRef coupling(std::size_t i, std::size_t j) { return {GeneratorKind::Coupling, 0, 1, 0, i, j}; }

    // "F(2)", "G(3)", "M(5,2)", "R(1,2)"; local letters in a multipartite
    // word carry the factor as "F(2)@1".
    std::string text(bool with_factor = false) const;

    friend bool operator==(const GeneratorRef&, const GeneratorRef&) = default;
};

/// Letters multiply left to right: the word [g1, g2] denotes g1·g2.
using GeneratorWord = std::vector<GeneratorRef>;

/// Invertible (scaled-unitary) matrix over Z[ζ_M] meant to normalize the
/// Heisenberg group of its signature.
class NormalizerUnitary {
public:
    NormalizerUnitary(Signature sig, CycloMatrix matrix, std::optional<GeneratorWord> word);

    const Signature& signature() const noexcept { return sig_; }
    const CycloMatrix& matrix() const noexcept { return matrix_; }
    // nullopt for externally loaded matrices.
    const std::optional<GeneratorWord>& word() const noexcept { return word_; }

    NormalizerUnitary operator*(const NormalizerUnitary& o) const;

private:
    Signature sig_;
    CycloMatrix matrix_;
    std::optional<GeneratorWord> word_;
};

/// F[k][j] = ω_n^{kj}, unnormalized; conjugation sends Q ↦ P, P ↦ Q^{-1}.
NormalizerUnitary fourier(Int n);
/// Diagonal quadratic phase; fixes Q and sends P ↦ Q^{-1}P up to a scalar.
/// Entries ω_{2n}^{j²} for even n and ω_{2n}^{j² + jn} for odd n.
NormalizerUnitary gauss_phase(Int n);
/// |j⟩ ↦ |a·j⟩; conjugation sends Q ↦ Q^{a^{-1}}, P ↦ P^a.
NormalizerUnitary multiplier(Int n, Int a);
/// Coupling unitary R_ij (1-based, i < j) built from T_ij = I ⊗ Q_{n_j}^{n_j/gcd(n_i,n_j)}.
NormalizerUnitary r_matrix(const Signature& sig, std::size_t i, std::size_t j);
/// I ⊗ ... ⊗ U ⊗ ... ⊗ I with U in slot `factor` (1-based).
NormalizerUnitary tensor_local(const Signature& sig, std::size_t factor, const NormalizerUnitary& u);

/// Single generator letter realized at the full signature.
NormalizerUnitary realize(const Signature& sig, const GeneratorRef& g);
NormalizerUnitary realize(const Signature& sig, const GeneratorWord& word);

/// Symplectic action of Ad_U on the phase space. Column t is the image of
/// generator A_t. Throws NotInNormalizer.
BlockSymplecticMatrix induced_matrix(const NormalizerUnitary& u);

/// Same as induced_matrix for a bare matrix at the signature's order.
BlockSymplecticMatrix induced_matrix(const Signature& sig, const CycloMatrix& u);

/// Row-vector 2×2 presentation (rows are images of Q and P in (Q,P)
/// coordinates) of a single-system block matrix.
std::array<std::array<Int, 2>, 2> row_presentation(const BlockSymplecticMatrix& h);

/// Word in {F, G, M} whose induced matrix is h2 (single system, det = 1).
/// Throws NotSL2.
GeneratorWord lift_sl2(Int n, const BlockSymplecticMatrix& h2);

/// Standard generating letters of the normalizer for a signature: F, G and
/// every nontrivial multiplier on each factor, then every R_ij.
std::vector<GeneratorRef> standard_letters(const Signature& sig);

/// Breadth-first search over words in standard_letters for one realizing
/// target. Throws LiftNotFound when the closure is exhausted, BudgetExceeded
/// past the budget.
GeneratorWord lift_by_search(const Signature& sig, const BlockSymplecticMatrix& target, const Budget& budget = {});

/// Lift for any signature: lift_sl2 for k = 1, search otherwise. The result
/// is checked with induced_matrix before returning.
GeneratorWord lift(const Signature& sig, const BlockSymplecticMatrix& target, const Budget& budget = {});

struct GenerationReport {
    Signature signature;
    std::uint64_t group_order = 0;
    std::uint64_t generated_order = 0;
    bool full = false;
    struct Letter {
        GeneratorRef ref;
        BlockSymplecticMatrix induced;
        bool trivial;
    };
    std::vector<Letter> letters;
};

/// Closure of the induced matrices of standard_letters compared with the
/// enumerated group.
GenerationReport verify_generation(const Signature& sig, const Budget& budget = {});

}  // namespace heisensym
