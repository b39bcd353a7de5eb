#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heisensym/error.hpp"

namespace heisensym {

// Machine integer for residues and dimensions. Every product that could
// leave the range goes through checked_mul / checked_add.
using Int = std::int64_t;
// Arbitrary precision for group orders and cyclotomic coefficients.
using BigInt = mpz_class;

Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);

// Least nonnegative representative of a mod n (n >= 1).
constexpr Int mod_floor(Int a, Int n) noexcept {
    Int r = a % n;
    return r < 0 ? r + n : r;
}

Int gcd(Int a, Int b) noexcept;
Int lcm(Int a, Int b);

/// Element of Z_n. Arithmetic between residues of different moduli throws
/// ModulusMismatch; use the named maps below to move between rings.
class Residue {
public:
    Residue(Int value, Int modulus);

    Int value() const noexcept { return value_; }
    Int modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator-() const;
    Residue& operator+=(const Residue& o) { return *this = *this + o; }
    Residue& operator-=(const Residue& o) { return *this = *this - o; }
    Residue& operator*=(const Residue& o) { return *this = *this * o; }

    // Multiplication by an integer scalar stays inside Z_n.
    Residue scaled(Int factor) const;

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    Int value_;
    Int modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

Residue mod_inv(const Residue& a);

/// x mod from ↦ (to / gcd(to, from)) · x mod to. Well defined for every
/// pair of moduli because (to/g)·from is a multiple of `to`.
Residue scale_into(const Residue& x, Int to);

/// x mod n ↦ x mod d, for d dividing n.
Residue reduce_to(const Residue& x, Int divisor);

/// Ordered tuple of subsystem dimensions (n_1, ..., n_k), each >= 2.
class Signature {
public:
    explicit Signature(std::vector<Int> dims);

    // "2,3,4" -> (2,3,4). Throws ParseError on malformed text.
    static Signature parse(std::string_view text);

    const std::vector<Int>& dims() const noexcept { return dims_; }
    std::size_t k() const noexcept { return dims_.size(); }
    Int dim(std::size_t t) const { return dims_.at(t); }
    Int N() const noexcept { return total_; }
    Int L() const noexcept { return lcm_; }
    Int M() const noexcept { return 2 * lcm_; }

    // Product of n_t over t in [first, last).
    Int dim_product(std::size_t first, std::size_t last) const;

    bool equal_dims() const noexcept;
    bool pairwise_coprime() const noexcept;
    std::string to_string() const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<Int> dims_;
    Int total_ = 1;
    Int lcm_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Signature& s);

void require_same(const Signature& a, const Signature& b);

struct PrimePower {
    Int prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::vector<PrimePower> prime_power_factorization(Int n);

/// |SL(2, Z_n)| = n^3 Π_{p|n} (1 - p^-2).
BigInt sl2_order(Int n);

/// |Sp(2k, Z_n)| = n^{k(2k+1)} Π_{p|n} Π_{i=1..k} (1 - p^-2i).
BigInt sp2k_order(Int n, int k);

}  // namespace heisensym
