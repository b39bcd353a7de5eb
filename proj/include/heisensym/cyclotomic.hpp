#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "heisensym/modring.hpp"

namespace heisensym {

/// Dense integer polynomial, lowest degree first, trailing zeros trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    // x^degree - 1
    static IntPolynomial x_pow_minus_one(std::size_t degree);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;

    // Exact division by a monic divisor; throws InvalidArgument on a remainder.
    IntPolynomial divide_exact(const IntPolynomial& monic_divisor) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

Int euler_phi(Int n);

/// Φ_M, memoized process-wide.
const IntPolynomial& cyclotomic_polynomial(Int order);

/// Z[x]/Φ_M with a table of reduced powers x^e for 0 <= e < max(M, 2φ(M) - 1).
class CycloRing {
public:
    static std::shared_ptr<const CycloRing> get(Int order);

    Int order() const noexcept { return order_; }
    std::size_t degree() const noexcept { return degree_; }
    const std::vector<BigInt>& power(std::size_t e) const { return powers_.at(e); }

    explicit CycloRing(Int order);

private:
    Int order_;
    std::size_t degree_;
    std::vector<std::vector<BigInt>> powers_;
};

/// Element of Z[ζ_M], canonically reduced mod Φ_M: coefficient equality is
/// equality of the complex numbers.
class CycloElement {
public:
    static CycloElement zero(Int order);
    static CycloElement one(Int order);
    static CycloElement integer(Int order, const BigInt& value);
    static CycloElement from_coeffs(Int order, std::vector<BigInt> coeffs);

    Int order() const noexcept { return ring_->order(); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    CycloElement operator+(const CycloElement& o) const;
    CycloElement operator-(const CycloElement& o) const;
    CycloElement operator*(const CycloElement& o) const;
    CycloElement operator-() const;
    CycloElement& operator+=(const CycloElement& o);
    CycloElement& operator-=(const CycloElement& o);
    CycloElement& operator*=(const CycloElement& o) { return *this = *this * o; }

    // Complex conjugation: ζ ↦ ζ^{-1}.
    CycloElement conjugate() const;
    // this · ζ^e
    CycloElement times_root(Int e) const;
    CycloElement pow(std::uint64_t exponent) const;
    // Same complex number inside Z[ζ_{new_order}]; order() must divide new_order.
    CycloElement lift_to(Int new_order) const;

    // e in [0, M) with this == ζ^e · base, if any. base must be nonzero.
    std::optional<Int> root_ratio(const CycloElement& base) const;

    friend bool operator==(const CycloElement& a, const CycloElement& b);

private:
    CycloElement(std::shared_ptr<const CycloRing> ring, std::vector<BigInt> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}
    void require_order(const CycloElement& o) const;

    std::shared_ptr<const CycloRing> ring_;
    std::vector<BigInt> coeffs_;

    friend CycloElement root_of_unity(Int order, Int e);
};

std::ostream& operator<<(std::ostream& os, const CycloElement& z);

/// ζ_M^e, i.e. exp(2πi e / M).
CycloElement root_of_unity(Int order, Int e);

/// Square matrix over Z[ζ_M]. Matrices with exactly one nonzero entry per
/// row and column are stored sparsely and keep the monomial tag through
/// products with one another.
class CycloMatrix {
public:
    static CycloMatrix identity(std::size_t dim, Int order);
    static CycloMatrix zero(std::size_t dim, Int order);
    static CycloMatrix dense(std::size_t dim, Int order, std::vector<CycloElement> row_major);
    // Row r holds values[r] in column columns[r]; columns must be a permutation.
    static CycloMatrix monomial(Int order, std::vector<std::size_t> columns, std::vector<CycloElement> values);
    // Diagonal matrix with entries ζ^{exponents[r]}.
    static CycloMatrix diagonal_roots(Int order, std::span<const Int> exponents);

    std::size_t dim() const noexcept { return dim_; }
    Int order() const noexcept { return order_; }
    bool is_monomial() const noexcept { return monomial_; }

    CycloElement entry(std::size_t row, std::size_t col) const;
    // Monomial matrices only.
    std::size_t column_of(std::size_t row) const;
    const CycloElement& value_in_row(std::size_t row) const;

    // Re-tags a dense matrix as monomial when its support allows it.
    CycloMatrix normalized() const;

    CycloMatrix operator*(const CycloMatrix& o) const;
    CycloMatrix scaled(const CycloElement& s) const;
    // Conjugate transpose.
    CycloMatrix adjoint() const;
    CycloMatrix kron(const CycloMatrix& o) const;
    CycloMatrix pow(std::uint64_t exponent) const;
    CycloMatrix lift_to(Int new_order) const;

    // Scalar s with this == s·I, if any.
    std::optional<CycloElement> as_scalar() const;

private:
    CycloMatrix(std::size_t dim, Int order) : dim_(dim), order_(order) {}
    void require_compatible(const CycloMatrix& o) const;

    std::size_t dim_ = 0;
    Int order_ = 1;
    bool monomial_ = false;
    std::vector<CycloElement> dense_;      // row-major, dense form
    std::vector<std::size_t> columns_;     // monomial form
    std::vector<CycloElement> values_;     // monomial form
};

CycloMatrix matrix_mul(const CycloMatrix& a, const CycloMatrix& b);
bool matrix_equal(const CycloMatrix& a, const CycloMatrix& b);

}  // namespace heisensym
