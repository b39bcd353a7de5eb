#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "heisensym/budget.hpp"
#include "heisensym/modring.hpp"
#include "heisensym/phasespace.hpp"

namespace heisensym {

/// n_i / gcd(n_i, n_j): every scaled entry of block (i, j) is a multiple of it.
Int block_scale(const Signature& sig, std::size_t i, std::size_t j);

/// Fixed-width packing of a matrix, used as a hash key in closures.
struct MatrixKey {
    std::array<std::uint64_t, 4> words{};
    friend bool operator==(const MatrixKey&, const MatrixKey&) = default;
};

struct MatrixKeyHash {
    std::size_t operator()(const MatrixKey& k) const noexcept;
};

/// Element of the monoid S_[n_1..n_k]: a 2k×2k matrix whose (i, j) 2×2 block
/// holds the scaled entries (n_i/g_ij)·A_ij mod n_i. Within each factor the
/// coordinates are ordered (P-exponent, Q-exponent), matching the generator
/// order A_{2i-1} = P, A_{2i} = Q. Columns are images of generators.
class BlockSymplecticMatrix {
public:
    // Scaled entries, row-major. Throws StructureViolation unless each entry
    // lies in [0, n_i) and in (n_i/g_ij)·Z_{n_i}.
    static BlockSymplecticMatrix from_entries(const Signature& sig, std::vector<Int> row_major);
    // Unscaled A entries (any integers); scaled and reduced here.
    static BlockSymplecticMatrix from_unscaled(const Signature& sig, const std::vector<Int>& row_major);
    static BlockSymplecticMatrix identity(const Signature& sig);
    static BlockSymplecticMatrix from_key(const Signature& sig, const MatrixKey& key);

    const Signature& signature() const noexcept { return sig_; }
    std::size_t dim() const noexcept { return 2 * sig_.k(); }
    Int entry(std::size_t row, std::size_t col) const { return entries_.at(row * dim() + col); }
    const std::vector<Int>& entries() const noexcept { return entries_; }
    Int row_modulus(std::size_t row) const { return sig_.dim(row / 2); }
    // Scaled 2×2 block (i, j), 0-based factor indices.
    std::array<std::array<Int, 2>, 2> block(std::size_t i, std::size_t j) const;

    MatrixKey key() const;

    friend bool operator==(const BlockSymplecticMatrix&, const BlockSymplecticMatrix&) = default;

private:
    BlockSymplecticMatrix(Signature sig, std::vector<Int> entries) : sig_(std::move(sig)), entries_(std::move(entries)) {}

    Signature sig_;
    std::vector<Int> entries_;

    friend BlockSymplecticMatrix multiply(const BlockSymplecticMatrix&, const BlockSymplecticMatrix&);
};

std::ostream& operator<<(std::ostream& os, const BlockSymplecticMatrix& h);

// Throws StructureViolation when any entry breaks range or divisibility.
void check_structure(const Signature& sig, const std::vector<Int>& row_major);
bool is_structure_valid(const Signature& sig, const std::vector<Int>& row_major);

BlockSymplecticMatrix multiply(const BlockSymplecticMatrix& h, const BlockSymplecticMatrix& k);
BlockSymplecticMatrix adjoint(const BlockSymplecticMatrix& h);
BlockSymplecticMatrix negate(const BlockSymplecticMatrix& h);
BlockSymplecticMatrix standard_J(const Signature& sig);
bool is_symmetry(const BlockSymplecticMatrix& h);
/// (−J)·H*·J; throws NotASymmetry unless is_symmetry(h).
BlockSymplecticMatrix inverse_in_group(const BlockSymplecticMatrix& h);
PhasePoint apply(const BlockSymplecticMatrix& h, const PhasePoint& v);

/// Plain transpose; only defined for equal dimensions.
BlockSymplecticMatrix plain_transpose(const BlockSymplecticMatrix& h);
/// Plain transpose(H)·J·H == J over Z_n; only defined for equal dimensions.
bool is_plain_symplectic(const BlockSymplecticMatrix& h);

/// Uniformly random element of the monoid.
BlockSymplecticMatrix random_monoid_element(const Signature& sig, std::mt19937_64& rng);

/// Number of structure-valid matrices Π_i Π_j gcd(n_i, n_j)^4.
BigInt monoid_size(const Signature& sig);

/// Visits every H with H*JH = J exactly once, in a deterministic order.
/// Candidate columns are charged against the budget.
void for_each_symmetry(const Signature& sig, const Budget& budget,
                       const std::function<void(const BlockSymplecticMatrix&)>& visit);
std::vector<BlockSymplecticMatrix> enumerate_group(const Signature& sig, const Budget& budget = {});
std::uint64_t group_order_by_enumeration(const Signature& sig, const Budget& budget = {});

}  // namespace heisensym
