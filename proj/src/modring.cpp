#include "heisensym/modring.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

namespace heisensym {

Int checked_mul(Int a, Int b) {
    Int out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        fail(ErrorKind::InvalidArgument, "integer overflow in multiplication");
    }
    return out;
}

Int checked_add(Int a, Int b) {
    Int out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        fail(ErrorKind::InvalidArgument, "integer overflow in addition");
    }
    return out;
}

Int gcd(Int a, Int b) noexcept { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd(a, b), b < 0 ? -b : b);
}

Residue::Residue(Int value, Int modulus) : value_(0), modulus_(modulus) {
    if (modulus < 1) fail(ErrorKind::InvalidArgument, "modulus must be positive");
    value_ = mod_floor(value, modulus);
}

namespace {
void require_modulus(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus()) {
        fail(ErrorKind::ModulusMismatch, "Z_" + std::to_string(a.modulus()) + " vs Z_" +
                                             std::to_string(b.modulus()));
    }
}
}  // namespace

Residue Residue::operator+(const Residue& o) const {
    require_modulus(*this, o);
    return {value_ + o.value_, modulus_};
}

Residue Residue::operator-(const Residue& o) const {
    require_modulus(*this, o);
    return {value_ - o.value_, modulus_};
}

Residue Residue::operator*(const Residue& o) const {
    require_modulus(*this, o);
    return {checked_mul(value_, o.value_), modulus_};
}

Residue Residue::operator-() const { return {-value_, modulus_}; }

Residue Residue::scaled(Int factor) const {
    return {checked_mul(value_, mod_floor(factor, modulus_)), modulus_};
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
    return os << r.value() << " mod " << r.modulus();
}

Residue mod_inv(const Residue& a) {
    // Extended Euclid on (value, modulus).
    Int old_r = a.value(), r = a.modulus();
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) {
        fail(ErrorKind::NotAUnit, std::to_string(a.value()) + " is not invertible mod " +
                                      std::to_string(a.modulus()));
    }
    return {old_s, a.modulus()};
}

Residue scale_into(const Residue& x, Int to) {
    Int g = gcd(to, x.modulus());
    return Residue(x.value(), to).scaled(to / g);
}

Residue reduce_to(const Residue& x, Int divisor) {
    if (divisor < 1 || x.modulus() % divisor != 0) {
        fail(ErrorKind::InvalidArgument, std::to_string(divisor) + " does not divide " +
                                             std::to_string(x.modulus()));
    }
    return {x.value(), divisor};
}

Signature::Signature(std::vector<Int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) fail(ErrorKind::InvalidArgument, "signature needs at least one factor");
    for (Int n : dims_) {
        if (n < 2) fail(ErrorKind::InvalidArgument, "subsystem dimension must be >= 2");
        total_ = checked_mul(total_, n);
        lcm_ = lcm(lcm_, n);
    }
    checked_mul(lcm_, 2);
}

Signature Signature::parse(std::string_view text) {
    std::vector<Int> dims;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view field = text.substr(pos, comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        Int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            fail(ErrorKind::ParseError, "bad signature '" + std::string(text) + "'");
        }
        if (value < 2) fail(ErrorKind::ParseError, "dimensions must be >= 2");
        dims.push_back(value);
        pos = comma + 1;
    }
    return Signature(std::move(dims));
}

Int Signature::dim_product(std::size_t first, std::size_t last) const {
    Int p = 1;
    for (std::size_t t = first; t < last; ++t) p *= dims_.at(t);
    return p;
}

bool Signature::equal_dims() const noexcept {
    for (Int n : dims_) {
        if (n != dims_.front()) return false;
    }
    return true;
}

bool Signature::pairwise_coprime() const noexcept {
    for (std::size_t a = 0; a < dims_.size(); ++a) {
        for (std::size_t b = a + 1; b < dims_.size(); ++b) {
            if (gcd(dims_[a], dims_[b]) != 1) return false;
        }
    }
    return true;
}

std::string Signature::to_string() const {
    std::ostringstream os;
    for (std::size_t t = 0; t < dims_.size(); ++t) os << (t ? "," : "") << dims_[t];
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Signature& s) { return os << '(' << s.to_string() << ')'; }

void require_same(const Signature& a, const Signature& b) {
    if (!(a == b)) fail(ErrorKind::SignatureMismatch, a.to_string() + " vs " + b.to_string());
}

std::vector<PrimePower> prime_power_factorization(Int n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "factorization needs n >= 1");
    std::vector<PrimePower> out;
    for (Int p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

BigInt sl2_order(Int n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "sl2_order needs n >= 2");
    return sp2k_order(n, 1);
}

BigInt sp2k_order(Int n, int k) {
    if (n < 2 || k < 1) fail(ErrorKind::InvalidArgument, "sp2k_order needs n >= 2, k >= 1");
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), BigInt(static_cast<long>(n)).get_mpz_t(),
               static_cast<unsigned long>(k) * (2 * k + 1));
    for (const auto& [p, e] : prime_power_factorization(n)) {
        for (int i = 1; i <= k; ++i) {
            BigInt q;
            mpz_pow_ui(q.get_mpz_t(), BigInt(static_cast<long>(p)).get_mpz_t(), 2 * i);
            // n^{k(2k+1)} carries p^{k(2k+1)} >= p^{k(k+1)}, so this division is exact.
            result /= q;
            result *= q - 1;
        }
    }
    return result;
}

}  // namespace heisensym
