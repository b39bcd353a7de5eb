#include "heisensym/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <ostream>

namespace heisensym {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t degree) {
    std::vector<BigInt> c(degree + 1);
    c[0] = -1;
    c[degree] += 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& d) const {
    if (d.is_zero() || d.coeffs_.back() != 1) fail(ErrorKind::InvalidArgument, "divisor must be monic");
    if (degree() < d.degree()) {
        if (!is_zero()) fail(ErrorKind::InvalidArgument, "inexact polynomial division");
        return {};
    }
    std::vector<BigInt> rem = coeffs_;
    std::size_t dd = d.coeffs_.size() - 1;
    std::vector<BigInt> q(rem.size() - dd);
    for (std::size_t i = q.size(); i-- > 0;) {
        BigInt lead = rem[i + dd];
        q[i] = lead;
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= lead * d.coeffs_[j];
    }
    for (const auto& r : rem) {
        if (r != 0) fail(ErrorKind::InvalidArgument, "inexact polynomial division");
    }
    return IntPolynomial(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    os << '[';
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? ", " : "") << p.coeffs()[i];
    return os << ']';
}

Int euler_phi(Int n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "euler_phi needs n >= 1");
    Int result = n;
    for (const auto& pp : prime_power_factorization(n)) result = result / pp.prime * (pp.prime - 1);
    return result;
}

const IntPolynomial& cyclotomic_polynomial(Int order) {
    static std::mutex mutex;
    static std::map<Int, IntPolynomial> cache;
    if (order < 1) fail(ErrorKind::InvalidArgument, "cyclotomic order must be >= 1");
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(order); it != cache.end()) return it->second;
    }
    // Computed outside the lock: recursion re-enters for proper divisors.
    IntPolynomial divisor({BigInt(1)});
    for (Int d = 1; d < order; ++d) {
        if (order % d == 0) divisor = divisor * cyclotomic_polynomial(d);
    }
    IntPolynomial phi = IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(order)).divide_exact(divisor);
    std::lock_guard lock(mutex);
    return cache.emplace(order, std::move(phi)).first->second;
}

CycloRing::CycloRing(Int order) : order_(order) {
    const auto& phi = cyclotomic_polynomial(order).coeffs();
    degree_ = phi.size() - 1;
    std::size_t count = std::max<std::size_t>(static_cast<std::size_t>(order), 2 * degree_ - 1);
    powers_.reserve(count);
    std::vector<BigInt> current(degree_);
    current[0] = 1;
    powers_.push_back(current);
    for (std::size_t e = 1; e < count; ++e) {
        // multiply by x, then fold x^degree back with the monic Φ
        BigInt top = current[degree_ - 1];
        for (std::size_t i = degree_ - 1; i > 0; --i) current[i] = current[i - 1];
        current[0] = 0;
        if (top != 0) {
            for (std::size_t i = 0; i < degree_; ++i) current[i] -= top * phi[i];
        }
        powers_.push_back(current);
    }
}

std::shared_ptr<const CycloRing> CycloRing::get(Int order) {
    static std::mutex mutex;
    static std::map<Int, std::shared_ptr<const CycloRing>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(order); it != cache.end()) return it->second;
    }
    auto ring = std::make_shared<const CycloRing>(order);
    std::lock_guard lock(mutex);
    return cache.emplace(order, std::move(ring)).first->second;
}

CycloElement CycloElement::zero(Int order) {
    auto ring = CycloRing::get(order);
    std::vector<BigInt> c(ring->degree());
    return {std::move(ring), std::move(c)};
}

CycloElement CycloElement::one(Int order) { return integer(order, 1); }

CycloElement CycloElement::integer(Int order, const BigInt& value) {
    auto z = zero(order);
    z.coeffs_[0] = value;
    return z;
}

CycloElement CycloElement::from_coeffs(Int order, std::vector<BigInt> coeffs) {
    auto ring = CycloRing::get(order);
    std::size_t deg = ring->degree();
    std::vector<BigInt> c(deg);
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e] == 0) continue;
        if (e < deg) {
            c[e] += coeffs[e];
        } else {
            const auto& p = ring->power(e % static_cast<std::size_t>(order));
            for (std::size_t i = 0; i < deg; ++i) c[i] += coeffs[e] * p[i];
        }
    }
    return {std::move(ring), std::move(c)};
}

bool CycloElement::is_zero() const noexcept {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool CycloElement::is_one() const noexcept {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return false;
    }
    return true;
}

void CycloElement::require_order(const CycloElement& o) const {
    if (order() != o.order()) {
        fail(ErrorKind::OrderMismatch, "cyclotomic orders " + std::to_string(order()) + " and " +
                                           std::to_string(o.order()));
    }
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
    CycloElement r = *this;
    r += o;
    return r;
}

CycloElement CycloElement::operator-(const CycloElement& o) const {
    CycloElement r = *this;
    r -= o;
    return r;
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
    require_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) {
    require_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycloElement CycloElement::operator-() const {
    CycloElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
    require_order(o);
    const std::size_t deg = coeffs_.size();
    std::vector<BigInt> prod(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    std::vector<BigInt> c(prod.begin(), prod.begin() + static_cast<long>(deg));
    for (std::size_t e = deg; e < prod.size(); ++e) {
        if (prod[e] == 0) continue;
        const auto& p = ring_->power(e);
        for (std::size_t i = 0; i < deg; ++i) c[i] += prod[e] * p[i];
    }
    return {ring_, std::move(c)};
}

CycloElement CycloElement::times_root(Int e) const {
    const std::size_t m = static_cast<std::size_t>(order());
    const std::size_t shift = static_cast<std::size_t>(mod_floor(e, order()));
    if (shift == 0) return *this;
    std::vector<BigInt> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const auto& p = ring_->power((i + shift) % m);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (p[j] != 0) c[j] += coeffs_[i] * p[j];
        }
    }
    return {ring_, std::move(c)};
}

CycloElement CycloElement::conjugate() const {
    const std::size_t m = static_cast<std::size_t>(order());
    std::vector<BigInt> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const auto& p = ring_->power((m - i % m) % m);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (p[j] != 0) c[j] += coeffs_[i] * p[j];
        }
    }
    return {ring_, std::move(c)};
}

CycloElement CycloElement::pow(std::uint64_t exponent) const {
    CycloElement result = one(order());
    CycloElement base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

CycloElement CycloElement::lift_to(Int new_order) const {
    if (new_order == order()) return *this;
    if (new_order % order() != 0) fail(ErrorKind::OrderMismatch, "lift_to needs a multiple of the order");
    const auto factor = static_cast<std::size_t>(new_order / order());
    std::vector<BigInt> spread(coeffs_.size() == 0 ? 0 : (coeffs_.size() - 1) * factor + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) spread[i * factor] = coeffs_[i];
    return from_coeffs(new_order, std::move(spread));
}

std::optional<Int> CycloElement::root_ratio(const CycloElement& base) const {
    require_order(base);
    if (base.is_zero()) fail(ErrorKind::InvalidArgument, "root_ratio against zero");
    for (Int e = 0; e < order(); ++e) {
        if (base.times_root(e) == *this) return e;
    }
    return std::nullopt;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    a.require_order(b);
    return a.coeffs_ == b.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const CycloElement& z) {
    os << '[';
    for (std::size_t i = 0; i < z.coeffs().size(); ++i) os << (i ? ", " : "") << z.coeffs()[i];
    return os << "]_" << z.order();
}

CycloElement root_of_unity(Int order, Int e) {
    auto ring = CycloRing::get(order);
    auto c = ring->power(static_cast<std::size_t>(mod_floor(e, order)));
    return {std::move(ring), std::move(c)};
}

// ---------------------------------------------------------------- matrices

CycloMatrix CycloMatrix::identity(std::size_t dim, Int order) {
    std::vector<std::size_t> cols(dim);
    for (std::size_t r = 0; r < dim; ++r) cols[r] = r;
    return monomial(order, std::move(cols), std::vector<CycloElement>(dim, CycloElement::one(order)));
}

CycloMatrix CycloMatrix::zero(std::size_t dim, Int order) {
    return dense(dim, order, std::vector<CycloElement>(dim * dim, CycloElement::zero(order)));
}

CycloMatrix CycloMatrix::dense(std::size_t dim, Int order, std::vector<CycloElement> row_major) {
    if (row_major.size() != dim * dim) fail(ErrorKind::DimensionMismatch, "dense matrix entry count");
    for (const auto& z : row_major) {
        if (z.order() != order) fail(ErrorKind::OrderMismatch, "matrix entry order");
    }
    CycloMatrix m(dim, order);
    m.dense_ = std::move(row_major);
    return m;
}

CycloMatrix CycloMatrix::monomial(Int order, std::vector<std::size_t> columns, std::vector<CycloElement> values) {
    const std::size_t dim = columns.size();
    if (values.size() != dim) fail(ErrorKind::DimensionMismatch, "monomial value count");
    std::vector<bool> seen(dim, false);
    for (std::size_t c : columns) {
        if (c >= dim || seen[c]) fail(ErrorKind::InvalidArgument, "monomial columns must form a permutation");
        seen[c] = true;
    }
    for (const auto& z : values) {
        if (z.order() != order) fail(ErrorKind::OrderMismatch, "matrix entry order");
        if (z.is_zero()) fail(ErrorKind::InvalidArgument, "monomial entries must be nonzero");
    }
    CycloMatrix m(dim, order);
    m.monomial_ = true;
    m.columns_ = std::move(columns);
    m.values_ = std::move(values);
    return m;
}

CycloMatrix CycloMatrix::diagonal_roots(Int order, std::span<const Int> exponents) {
    std::vector<std::size_t> cols(exponents.size());
    std::vector<CycloElement> vals;
    vals.reserve(exponents.size());
    for (std::size_t r = 0; r < exponents.size(); ++r) {
        cols[r] = r;
        vals.push_back(root_of_unity(order, exponents[r]));
    }
    return monomial(order, std::move(cols), std::move(vals));
}

CycloElement CycloMatrix::entry(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_) fail(ErrorKind::IndexOutOfRange, "matrix index");
    if (!monomial_) return dense_[row * dim_ + col];
    return columns_[row] == col ? values_[row] : CycloElement::zero(order_);
}

std::size_t CycloMatrix::column_of(std::size_t row) const {
    if (!monomial_) fail(ErrorKind::InvalidArgument, "matrix is not tagged monomial");
    return columns_.at(row);
}

const CycloElement& CycloMatrix::value_in_row(std::size_t row) const {
    if (!monomial_) fail(ErrorKind::InvalidArgument, "matrix is not tagged monomial");
    return values_.at(row);
}

CycloMatrix CycloMatrix::normalized() const {
    if (monomial_) return *this;
    std::vector<std::size_t> cols(dim_);
    std::vector<CycloElement> vals;
    vals.reserve(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        std::size_t found = dim_;
        for (std::size_t c = 0; c < dim_; ++c) {
            if (dense_[r * dim_ + c].is_zero()) continue;
            if (found != dim_) return *this;
            found = c;
        }
        if (found == dim_) return *this;
        cols[r] = found;
        vals.push_back(dense_[r * dim_ + found]);
    }
    std::vector<bool> seen(dim_, false);
    for (std::size_t c : cols) {
        if (seen[c]) return *this;
        seen[c] = true;
    }
    return monomial(order_, std::move(cols), std::move(vals));
}

void CycloMatrix::require_compatible(const CycloMatrix& o) const {
    if (dim_ != o.dim_) {
        fail(ErrorKind::DimensionMismatch, std::to_string(dim_) + " vs " + std::to_string(o.dim_));
    }
    if (order_ != o.order_) {
        fail(ErrorKind::OrderMismatch, std::to_string(order_) + " vs " + std::to_string(o.order_));
    }
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
    require_compatible(o);
    const std::size_t n = dim_;
    if (monomial_ && o.monomial_) {
        std::vector<std::size_t> cols(n);
        std::vector<CycloElement> vals;
        vals.reserve(n);
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t mid = columns_[r];
            cols[r] = o.columns_[mid];
            vals.push_back(values_[r] * o.values_[mid]);
        }
        return monomial(order_, std::move(cols), std::move(vals));
    }
    std::vector<CycloElement> out(n * n, CycloElement::zero(order_));
    if (monomial_) {
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t mid = columns_[r];
            for (std::size_t c = 0; c < n; ++c) out[r * n + c] = values_[r] * o.dense_[mid * n + c];
        }
    } else if (o.monomial_) {
        for (std::size_t mid = 0; mid < n; ++mid) {
            std::size_t c = o.columns_[mid];
            for (std::size_t r = 0; r < n; ++r) out[r * n + c] = dense_[r * n + mid] * o.values_[mid];
        }
    } else {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t mid = 0; mid < n; ++mid) {
                const auto& a = dense_[r * n + mid];
                if (a.is_zero()) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    const auto& b = o.dense_[mid * n + c];
                    if (!b.is_zero()) out[r * n + c] += a * b;
                }
            }
        }
    }
    return dense(n, order_, std::move(out));
}

CycloMatrix CycloMatrix::scaled(const CycloElement& s) const {
    if (s.order() != order_) fail(ErrorKind::OrderMismatch, "scalar order");
    CycloMatrix m = *this;
    if (monomial_) {
        if (s.is_zero()) return zero(dim_, order_);
        for (auto& v : m.values_) v = v * s;
    } else {
        for (auto& v : m.dense_) v = v * s;
    }
    return m;
}

CycloMatrix CycloMatrix::adjoint() const {
    const std::size_t n = dim_;
    if (monomial_) {
        std::vector<std::size_t> cols(n);
        std::vector<CycloElement> vals(n, CycloElement::zero(order_));
        for (std::size_t r = 0; r < n; ++r) {
            cols[columns_[r]] = r;
            vals[columns_[r]] = values_[r].conjugate();
        }
        return monomial(order_, std::move(cols), std::move(vals));
    }
    std::vector<CycloElement> out;
    out.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out.push_back(dense_[c * n + r].conjugate());
    }
    return dense(n, order_, std::move(out));
}

CycloMatrix CycloMatrix::kron(const CycloMatrix& o) const {
    if (order_ != o.order_) fail(ErrorKind::OrderMismatch, "kron orders");
    const std::size_t n = dim_ * o.dim_;
    if (monomial_ && o.monomial_) {
        std::vector<std::size_t> cols(n);
        std::vector<CycloElement> vals;
        vals.reserve(n);
        for (std::size_t a = 0; a < dim_; ++a) {
            for (std::size_t b = 0; b < o.dim_; ++b) {
                cols[a * o.dim_ + b] = columns_[a] * o.dim_ + o.columns_[b];
                vals.push_back(values_[a] * o.values_[b]);
            }
        }
        return monomial(order_, std::move(cols), std::move(vals));
    }
    std::vector<CycloElement> out(n * n, CycloElement::zero(order_));
    for (std::size_t r1 = 0; r1 < dim_; ++r1) {
        for (std::size_t c1 = 0; c1 < dim_; ++c1) {
            CycloElement a = entry(r1, c1);
            if (a.is_zero()) continue;
            for (std::size_t r2 = 0; r2 < o.dim_; ++r2) {
                for (std::size_t c2 = 0; c2 < o.dim_; ++c2) {
                    CycloElement b = o.entry(r2, c2);
                    if (!b.is_zero()) out[(r1 * o.dim_ + r2) * n + c1 * o.dim_ + c2] = a * b;
                }
            }
        }
    }
    return dense(n, order_, std::move(out));
}

CycloMatrix CycloMatrix::pow(std::uint64_t exponent) const {
    CycloMatrix result = identity(dim_, order_);
    CycloMatrix base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

CycloMatrix CycloMatrix::lift_to(Int new_order) const {
    CycloMatrix m = *this;
    m.order_ = new_order;
    for (auto& v : m.dense_) v = v.lift_to(new_order);
    for (auto& v : m.values_) v = v.lift_to(new_order);
    return m;
}

std::optional<CycloElement> CycloMatrix::as_scalar() const {
    if (dim_ == 0) return std::nullopt;
    CycloElement s = entry(0, 0);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            CycloElement e = entry(r, c);
            if (r == c ? !(e == s) : !e.is_zero()) return std::nullopt;
        }
    }
    return s;
}

CycloMatrix matrix_mul(const CycloMatrix& a, const CycloMatrix& b) { return a * b; }

bool matrix_equal(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.dim() != b.dim()) fail(ErrorKind::DimensionMismatch, "matrix_equal dimensions");
    if (a.order() != b.order()) fail(ErrorKind::OrderMismatch, "matrix_equal orders");
    if (a.is_monomial() && b.is_monomial()) {
        for (std::size_t r = 0; r < a.dim(); ++r) {
            if (a.column_of(r) != b.column_of(r) || !(a.value_in_row(r) == b.value_in_row(r))) return false;
        }
        return true;
    }
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (!(a.entry(r, c) - b.entry(r, c)).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace heisensym
