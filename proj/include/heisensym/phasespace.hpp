#pragma once

#include <cstdint>
#include <vector>

#include "heisensym/budget.hpp"
#include "heisensym/heisenberg.hpp"

namespace heisensym {

/// Point of ⊕_t Z_{n_t}², i.e. a Heisenberg coset modulo the center.
class PhasePoint {
public:
    PhasePoint(Signature sig, std::vector<FactorExponents> pairs);

    static PhasePoint zero(const Signature& sig);
    static PhasePoint from_ints(const Signature& sig, const std::vector<std::pair<Int, Int>>& qp);

    const Signature& signature() const noexcept { return sig_; }
    const std::vector<FactorExponents>& pairs() const noexcept { return pairs_; }
    const FactorExponents& pair(std::size_t t) const { return pairs_.at(t); }
    bool is_zero() const noexcept;

    PhasePoint operator+(const PhasePoint& o) const;
    PhasePoint operator-() const;
    PhasePoint times(Int m) const;

    friend bool operator==(const PhasePoint&, const PhasePoint&) = default;

private:
    Signature sig_;
    std::vector<FactorExponents> pairs_;
};

std::ostream& operator<<(std::ostream& os, const PhasePoint& v);

PhasePoint project(const HeisenbergElement& a);

/// Σ_t (L/n_t)(u.p_t v.q_t − u.q_t v.p_t) in Z_L; the commutator phase of any lifts.
Residue pairing(const PhasePoint& u, const PhasePoint& v);

/// Indexed, restartable view of every phase point of a signature.
class PointEnumeration {
public:
    // Throws BudgetExceeded when Π n_t² > max_points.
    PointEnumeration(Signature sig, std::uint64_t max_points);

    std::uint64_t size() const noexcept { return size_; }
    PhasePoint at(std::uint64_t index) const;

    template <class F>
    void for_each(F&& visit) const {
        for (std::uint64_t i = 0; i < size_; ++i) visit(at(i));
    }

private:
    Signature sig_;
    std::uint64_t size_;
};

PointEnumeration enumerate_points(const Signature& sig, std::uint64_t max_points = 1'000'000);

}  // namespace heisensym
