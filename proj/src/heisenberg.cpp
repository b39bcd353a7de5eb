#include "heisensym/heisenberg.hpp"

#include <ostream>

namespace heisensym {

HeisenbergElement::HeisenbergElement(Signature sig, Residue phase, std::vector<FactorExponents> factors)
    : sig_(std::move(sig)), phase_(phase), factors_(std::move(factors)) {
    if (phase_.modulus() != sig_.L()) fail(ErrorKind::ModulusMismatch, "phase must live in Z_L");
    if (factors_.size() != sig_.k()) fail(ErrorKind::SignatureMismatch, "one exponent pair per factor");
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        if (factors_[t].q.modulus() != sig_.dim(t) || factors_[t].p.modulus() != sig_.dim(t)) {
            fail(ErrorKind::ModulusMismatch, "factor exponents must live in Z_{n_t}");
        }
    }
}

HeisenbergElement HeisenbergElement::identity(const Signature& sig) { return central(sig, 0); }

HeisenbergElement HeisenbergElement::central(const Signature& sig, Int phase) {
    std::vector<FactorExponents> f;
    for (Int n : sig.dims()) f.push_back({Residue(0, n), Residue(0, n)});
    return {sig, Residue(phase, sig.L()), std::move(f)};
}

HeisenbergElement HeisenbergElement::from_ints(const Signature& sig, Int phase,
                                               const std::vector<std::pair<Int, Int>>& qp) {
    if (qp.size() != sig.k()) fail(ErrorKind::SignatureMismatch, "one exponent pair per factor");
    std::vector<FactorExponents> f;
    for (std::size_t t = 0; t < qp.size(); ++t) {
        f.push_back({Residue(qp[t].first, sig.dim(t)), Residue(qp[t].second, sig.dim(t))});
    }
    return {sig, Residue(phase, sig.L()), std::move(f)};
}

bool HeisenbergElement::is_identity() const noexcept {
    if (!phase_.is_zero()) return false;
    for (const auto& f : factors_) {
        if (!f.q.is_zero() || !f.p.is_zero()) return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const HeisenbergElement& a) {
    os << "w^" << a.phase().value();
    for (const auto& f : a.factors()) os << " [Q^" << f.q.value() << " P^" << f.p.value() << ']';
    return os;
}

HeisenbergElement compose(const HeisenbergElement& a, const HeisenbergElement& b) {
    require_same(a.signature(), b.signature());
    const Signature& sig = a.signature();
    // P^j Q^i = ω^{ij} Q^i P^j moves b's Q-part left past a's P-part.
    Residue phase = a.phase() + b.phase();
    std::vector<FactorExponents> f;
    f.reserve(sig.k());
    for (std::size_t t = 0; t < sig.k(); ++t) {
        const auto& x = a.factor(t);
        const auto& y = b.factor(t);
        phase += Residue(checked_mul(x.p.value(), y.q.value()), sig.L()).scaled(sig.L() / sig.dim(t));
        f.push_back({x.q + y.q, x.p + y.p});
    }
    return {sig, phase, std::move(f)};
}

HeisenbergElement inverse(const HeisenbergElement& a) {
    const Signature& sig = a.signature();
    // (Q^q P^p)^{-1} = P^{-p} Q^{-q} = ω^{pq} Q^{-q} P^{-p}
    Residue phase = -a.phase();
    std::vector<FactorExponents> f;
    for (std::size_t t = 0; t < sig.k(); ++t) {
        const auto& x = a.factor(t);
        phase += Residue(checked_mul(x.p.value(), x.q.value()), sig.L()).scaled(sig.L() / sig.dim(t));
        f.push_back({-x.q, -x.p});
    }
    return {sig, phase, std::move(f)};
}

HeisenbergElement power(const HeisenbergElement& a, std::uint64_t exponent) {
    HeisenbergElement result = HeisenbergElement::identity(a.signature());
    HeisenbergElement base = a;
    while (exponent > 0) {
        if (exponent & 1U) result = compose(result, base);
        exponent >>= 1U;
        if (exponent > 0) base = compose(base, base);
    }
    return result;
}

Residue commutator_phase(const HeisenbergElement& a, const HeisenbergElement& b) {
    require_same(a.signature(), b.signature());
    const Signature& sig = a.signature();
    Residue c(0, sig.L());
    for (std::size_t t = 0; t < sig.k(); ++t) {
        const auto& x = a.factor(t);
        const auto& y = b.factor(t);
        Int v = checked_mul(x.p.value(), y.q.value()) - checked_mul(x.q.value(), y.p.value());
        c += Residue(v, sig.L()).scaled(sig.L() / sig.dim(t));
    }
    return c;
}

Int element_order(const HeisenbergElement& a) {
    // Every element satisfies x^{2L} = 1 (x^L is central of order <= 2).
    HeisenbergElement x = a;
    for (Int m = 1; m <= a.signature().M(); ++m) {
        if (x.is_identity()) return m;
        x = compose(x, a);
    }
    fail(ErrorKind::InvalidArgument, "element order exceeds 2L");
}

HeisenbergElement standard_generator(const Signature& sig, std::size_t t) {
    if (t < 1 || t > 2 * sig.k()) {
        fail(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(t) + " outside 1.." +
                                             std::to_string(2 * sig.k()));
    }
    std::vector<std::pair<Int, Int>> qp(sig.k(), {0, 0});
    std::size_t slot = (t - 1) / 2;
    if (t % 2 == 1) {
        qp[slot].second = 1;
    } else {
        qp[slot].first = 1;
    }
    return HeisenbergElement::from_ints(sig, 0, qp);
}

namespace {

std::vector<Int> strides(const Signature& sig) {
    std::vector<Int> s(sig.k());
    Int acc = 1;
    for (std::size_t t = sig.k(); t-- > 0;) {
        s[t] = acc;
        acc *= sig.dim(t);
    }
    return s;
}

}  // namespace

CycloMatrix to_matrix(const HeisenbergElement& a) {
    const Signature& sig = a.signature();
    const Int dim = sig.N();
    const Int order = sig.M();
    const auto stride = strides(sig);
    std::vector<std::size_t> cols(static_cast<std::size_t>(dim));
    std::vector<CycloElement> vals;
    vals.reserve(cols.size());
    // Row r = (r_t): column (r_t + p_t), value ω_L^phase Π_t ω_{n_t}^{q_t r_t}.
    for (Int row = 0; row < dim; ++row) {
        Int col = 0;
        Int exponent = 2 * a.phase().value();
        for (std::size_t t = 0; t < sig.k(); ++t) {
            const Int n = sig.dim(t);
            const Int digit = (row / stride[t]) % n;
            col += mod_floor(digit + a.factor(t).p.value(), n) * stride[t];
            exponent += (order / n) * ((digit * a.factor(t).q.value()) % n);
        }
        cols[static_cast<std::size_t>(row)] = static_cast<std::size_t>(col);
        vals.push_back(root_of_unity(order, exponent));
    }
    return CycloMatrix::monomial(order, std::move(cols), std::move(vals));
}

namespace {

// Shared reader for from_monomial (unit = 1) and match_projective
// (unit = the row-0 entry).
HeisenbergElement decode(const Signature& sig, const CycloMatrix& x, const CycloElement& unit) {
    const Int order = sig.M();
    const auto stride = strides(sig);
    const auto dim = static_cast<std::size_t>(sig.N());

    std::vector<FactorExponents> f;
    f.reserve(sig.k());
    std::vector<Int> shift(sig.k());
    for (std::size_t t = 0; t < sig.k(); ++t) {
        shift[t] = (static_cast<Int>(x.column_of(0)) / stride[t]) % sig.dim(t);
    }

    auto log_of = [&](std::size_t row) -> Int {
        auto e = x.value_in_row(row).root_ratio(unit);
        if (!e) fail(ErrorKind::NotHeisenberg, "entry in row " + std::to_string(row) + " is not a root of unity");
        return *e;
    };

    const Int e0 = log_of(0);
    if (e0 % 2 != 0) fail(ErrorKind::NotHeisenberg, "global phase is not a power of ω_L");
    std::vector<Int> clock(sig.k());
    for (std::size_t t = 0; t < sig.k(); ++t) {
        const Int n = sig.dim(t);
        const Int d = mod_floor(log_of(static_cast<std::size_t>(stride[t])) - e0, order);
        if (d % (order / n) != 0) fail(ErrorKind::NotHeisenberg, "diagonal ratio is not a power of ω_n");
        clock[t] = d / (order / n);
        f.push_back({Residue(clock[t], n), Residue(shift[t], n)});
    }

    for (std::size_t row = 0; row < dim; ++row) {
        Int col = 0;
        Int exponent = e0;
        for (std::size_t t = 0; t < sig.k(); ++t) {
            const Int n = sig.dim(t);
            const Int digit = (static_cast<Int>(row) / stride[t]) % n;
            col += ((digit + shift[t]) % n) * stride[t];
            exponent += (order / n) * ((digit * clock[t]) % n);
        }
        if (x.column_of(row) != static_cast<std::size_t>(col)) {
            fail(ErrorKind::NotHeisenberg, "permutation is not a tensor product of cyclic shifts");
        }
        if (!(x.value_in_row(row) == unit.times_root(exponent))) {
            fail(ErrorKind::NotHeisenberg, "phases inconsistent with a clock-shift product");
        }
    }
    return {sig, Residue(e0 / 2, sig.L()), std::move(f)};
}

CycloMatrix require_monomial(const Signature& sig, const CycloMatrix& x) {
    if (x.dim() != static_cast<std::size_t>(sig.N())) fail(ErrorKind::DimensionMismatch, "matrix size != N");
    if (x.order() != sig.M()) fail(ErrorKind::OrderMismatch, "matrix order != 2L");
    CycloMatrix m = x.normalized();
    if (!m.is_monomial()) fail(ErrorKind::NotHeisenberg, "matrix is not monomial");
    return m;
}

}  // namespace

HeisenbergElement from_monomial(const Signature& sig, const CycloMatrix& x) {
    CycloMatrix m = require_monomial(sig, x);
    return decode(sig, m, CycloElement::one(sig.M()));
}

ProjectiveMatch match_projective(const Signature& sig, const CycloMatrix& x) {
    CycloMatrix m = require_monomial(sig, x);
    CycloElement scalar = m.value_in_row(0);
    HeisenbergElement a = decode(sig, m, scalar);
    return {std::move(a), std::move(scalar)};
}

}  // namespace heisensym
