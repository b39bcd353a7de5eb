#include "heisensym/phasespace.hpp"

#include <ostream>

namespace heisensym {

PhasePoint::PhasePoint(Signature sig, std::vector<FactorExponents> pairs)
    : sig_(std::move(sig)), pairs_(std::move(pairs)) {
    if (pairs_.size() != sig_.k()) fail(ErrorKind::SignatureMismatch, "one pair per factor");
    for (std::size_t t = 0; t < pairs_.size(); ++t) {
        if (pairs_[t].q.modulus() != sig_.dim(t) || pairs_[t].p.modulus() != sig_.dim(t)) {
            fail(ErrorKind::ModulusMismatch, "phase point component outside Z_{n_t}");
        }
    }
}

PhasePoint PhasePoint::zero(const Signature& sig) {
    return from_ints(sig, std::vector<std::pair<Int, Int>>(sig.k(), {0, 0}));
}

PhasePoint PhasePoint::from_ints(const Signature& sig, const std::vector<std::pair<Int, Int>>& qp) {
    if (qp.size() != sig.k()) fail(ErrorKind::SignatureMismatch, "one pair per factor");
    std::vector<FactorExponents> pairs;
    for (std::size_t t = 0; t < qp.size(); ++t) {
        pairs.push_back({Residue(qp[t].first, sig.dim(t)), Residue(qp[t].second, sig.dim(t))});
    }
    return {sig, std::move(pairs)};
}

bool PhasePoint::is_zero() const noexcept {
    for (const auto& f : pairs_) {
        if (!f.q.is_zero() || !f.p.is_zero()) return false;
    }
    return true;
}

PhasePoint PhasePoint::operator+(const PhasePoint& o) const {
    require_same(sig_, o.sig_);
    std::vector<FactorExponents> out;
    for (std::size_t t = 0; t < pairs_.size(); ++t) {
        out.push_back({pairs_[t].q + o.pairs_[t].q, pairs_[t].p + o.pairs_[t].p});
    }
    return {sig_, std::move(out)};
}

PhasePoint PhasePoint::operator-() const { return times(-1); }

PhasePoint PhasePoint::times(Int m) const {
    std::vector<FactorExponents> out;
    for (const auto& f : pairs_) out.push_back({f.q.scaled(m), f.p.scaled(m)});
    return {sig_, std::move(out)};
}

std::ostream& operator<<(std::ostream& os, const PhasePoint& v) {
    os << '(';
    for (std::size_t t = 0; t < v.pairs().size(); ++t) {
        os << (t ? "; " : "") << v.pair(t).q.value() << ',' << v.pair(t).p.value();
    }
    return os << ')';
}

PhasePoint project(const HeisenbergElement& a) { return {a.signature(), a.factors()}; }

Residue pairing(const PhasePoint& u, const PhasePoint& v) {
    require_same(u.signature(), v.signature());
    const Signature& sig = u.signature();
    Residue c(0, sig.L());
    for (std::size_t t = 0; t < sig.k(); ++t) {
        const auto& x = u.pair(t);
        const auto& y = v.pair(t);
        Int w = checked_mul(x.p.value(), y.q.value()) - checked_mul(x.q.value(), y.p.value());
        c += Residue(w, sig.L()).scaled(sig.L() / sig.dim(t));
    }
    return c;
}

PointEnumeration::PointEnumeration(Signature sig, std::uint64_t max_points) : sig_(std::move(sig)), size_(1) {
    for (Int n : sig_.dims()) {
        const auto sq = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
        if (size_ > max_points / sq) {
            fail(ErrorKind::BudgetExceeded, "phase space of " + sig_.to_string() + " exceeds point budget");
        }
        size_ *= sq;
    }
    if (size_ > max_points) fail(ErrorKind::BudgetExceeded, "phase space exceeds point budget");
}

PhasePoint PointEnumeration::at(std::uint64_t index) const {
    if (index >= size_) fail(ErrorKind::IndexOutOfRange, "phase point index");
    std::vector<std::pair<Int, Int>> qp(sig_.k());
    for (std::size_t t = sig_.k(); t-- > 0;) {
        const auto n = static_cast<std::uint64_t>(sig_.dim(t));
        qp[t].second = static_cast<Int>(index % n);
        index /= n;
        qp[t].first = static_cast<Int>(index % n);
        index /= n;
    }
    return PhasePoint::from_ints(sig_, qp);
}

PointEnumeration enumerate_points(const Signature& sig, std::uint64_t max_points) { return {sig, max_points}; }

}  // namespace heisensym
