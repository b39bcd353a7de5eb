#include "heisensym/symplectic.hpp"

#include <bit>
#include <ostream>

#include "heisensym/parallel.hpp"

namespace heisensym {

Int block_scale(const Signature& sig, std::size_t i, std::size_t j) {
    return sig.dim(i) / gcd(sig.dim(i), sig.dim(j));
}

std::size_t MatrixKeyHash::operator()(const MatrixKey& k) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto w : k.words) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6U) + (h >> 2U);
        h *= 0xBF58476D1CE4E5B9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31U));
}

void check_structure(const Signature& sig, const std::vector<Int>& m) {
    const std::size_t d = 2 * sig.k();
    if (m.size() != d * d) {
        fail(ErrorKind::StructureViolation, "expected " + std::to_string(d * d) + " entries");
    }
    for (std::size_t r = 0; r < d; ++r) {
        const Int n = sig.dim(r / 2);
        for (std::size_t c = 0; c < d; ++c) {
            const Int v = m[r * d + c];
            if (v < 0 || v >= n) {
                fail(ErrorKind::StructureViolation, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                                        ") outside [0," + std::to_string(n) + ")");
            }
            const Int s = block_scale(sig, r / 2, c / 2);
            if (v % s != 0) {
                fail(ErrorKind::StructureViolation, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                                        ") not a multiple of " + std::to_string(s));
            }
        }
    }
}

bool is_structure_valid(const Signature& sig, const std::vector<Int>& m) {
    try {
        check_structure(sig, m);
        return true;
    } catch (const Error&) {
        return false;
    }
}

BlockSymplecticMatrix BlockSymplecticMatrix::from_entries(const Signature& sig, std::vector<Int> row_major) {
    check_structure(sig, row_major);
    return {sig, std::move(row_major)};
}

BlockSymplecticMatrix BlockSymplecticMatrix::from_unscaled(const Signature& sig, const std::vector<Int>& a) {
    const std::size_t d = 2 * sig.k();
    if (a.size() != d * d) fail(ErrorKind::StructureViolation, "expected " + std::to_string(d * d) + " entries");
    std::vector<Int> m(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        const Int n = sig.dim(r / 2);
        for (std::size_t c = 0; c < d; ++c) {
            m[r * d + c] = mod_floor(checked_mul(mod_floor(a[r * d + c], n), block_scale(sig, r / 2, c / 2)), n);
        }
    }
    return {sig, std::move(m)};
}

BlockSymplecticMatrix BlockSymplecticMatrix::identity(const Signature& sig) {
    const std::size_t d = 2 * sig.k();
    std::vector<Int> m(d * d, 0);
    for (std::size_t r = 0; r < d; ++r) m[r * d + r] = 1;
    return {sig, std::move(m)};
}

std::array<std::array<Int, 2>, 2> BlockSymplecticMatrix::block(std::size_t i, std::size_t j) const {
    return {{{entry(2 * i, 2 * j), entry(2 * i, 2 * j + 1)}, {entry(2 * i + 1, 2 * j), entry(2 * i + 1, 2 * j + 1)}}};
}

namespace {

unsigned bits_for(Int n) { return static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(n - 1))); }

void require_packable(const Signature& sig) {
    std::size_t total = 0;
    const std::size_t d = 2 * sig.k();
    for (std::size_t r = 0; r < d; ++r) total += d * bits_for(sig.dim(r / 2));
    if (total > 256) fail(ErrorKind::BudgetExceeded, "matrix too large for a 256-bit key");
}

}  // namespace

MatrixKey BlockSymplecticMatrix::key() const {
    require_packable(sig_);
    MatrixKey k;
    std::size_t bit = 0;
    const std::size_t d = dim();
    for (std::size_t r = 0; r < d; ++r) {
        const unsigned b = bits_for(row_modulus(r));
        for (std::size_t c = 0; c < d; ++c) {
            auto v = static_cast<std::uint64_t>(entries_[r * d + c]);
            for (unsigned i = 0; i < b; ++i, ++bit) {
                if ((v >> i) & 1U) k.words[bit / 64] |= std::uint64_t{1} << (bit % 64);
            }
        }
    }
    return k;
}

BlockSymplecticMatrix BlockSymplecticMatrix::from_key(const Signature& sig, const MatrixKey& k) {
    require_packable(sig);
    const std::size_t d = 2 * sig.k();
    std::vector<Int> m(d * d);
    std::size_t bit = 0;
    for (std::size_t r = 0; r < d; ++r) {
        const unsigned b = bits_for(sig.dim(r / 2));
        for (std::size_t c = 0; c < d; ++c) {
            std::uint64_t v = 0;
            for (unsigned i = 0; i < b; ++i, ++bit) v |= ((k.words[bit / 64] >> (bit % 64)) & 1U) << i;
            m[r * d + c] = static_cast<Int>(v);
        }
    }
    return {sig, std::move(m)};
}

std::ostream& operator<<(std::ostream& os, const BlockSymplecticMatrix& h) {
    os << '[';
    for (std::size_t r = 0; r < h.dim(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < h.dim(); ++c) os << (c ? " " : "") << h.entry(r, c);
    }
    return os << ']';
}

BlockSymplecticMatrix multiply(const BlockSymplecticMatrix& h, const BlockSymplecticMatrix& k) {
    require_same(h.signature(), k.signature());
    const std::size_t d = h.dim();
    std::vector<Int> m(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        const Int n = h.row_modulus(r);
        for (std::size_t c = 0; c < d; ++c) {
            Int acc = 0;
            for (std::size_t l = 0; l < d; ++l) acc = checked_add(acc, checked_mul(h.entries_[r * d + l], k.entries_[l * d + c]));
            m[r * d + c] = mod_floor(acc, n);
        }
    }
    // The monoid is closed; a failure here is a bug.
    check_structure(h.signature(), m);
    return {h.signature(), std::move(m)};
}

namespace {

// Entry of H* at (s, r) from the stored entry H[r][s]: recover the unscaled
// value mod g and rescale into the row ring of s.
Int adjoint_entry(const Signature& sig, Int stored, std::size_t s_factor, std::size_t r_factor) {
    const Int g = gcd(sig.dim(s_factor), sig.dim(r_factor));
    const Int unscaled = stored / (sig.dim(r_factor) / g);
    return mod_floor(checked_mul(sig.dim(s_factor) / g, unscaled), sig.dim(s_factor));
}

}  // namespace

BlockSymplecticMatrix adjoint(const BlockSymplecticMatrix& h) {
    const Signature& sig = h.signature();
    const std::size_t d = h.dim();
    std::vector<Int> m(d * d);
    for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t r = 0; r < d; ++r) m[s * d + r] = adjoint_entry(sig, h.entry(r, s), s / 2, r / 2);
    }
    return BlockSymplecticMatrix::from_entries(sig, std::move(m));
}

BlockSymplecticMatrix negate(const BlockSymplecticMatrix& h) {
    const std::size_t d = h.dim();
    std::vector<Int> m(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) m[r * d + c] = mod_floor(-h.entry(r, c), h.row_modulus(r));
    }
    return BlockSymplecticMatrix::from_entries(h.signature(), std::move(m));
}

BlockSymplecticMatrix standard_J(const Signature& sig) {
    const std::size_t d = 2 * sig.k();
    std::vector<Int> m(d * d, 0);
    for (std::size_t i = 0; i < sig.k(); ++i) {
        m[(2 * i) * d + 2 * i + 1] = 1;
        m[(2 * i + 1) * d + 2 * i] = sig.dim(i) - 1;
    }
    return BlockSymplecticMatrix::from_entries(sig, std::move(m));
}

bool is_symmetry(const BlockSymplecticMatrix& h) {
    const auto j = standard_J(h.signature());
    return multiply(multiply(adjoint(h), j), h) == j;
}

BlockSymplecticMatrix inverse_in_group(const BlockSymplecticMatrix& h) {
    if (!is_symmetry(h)) fail(ErrorKind::NotASymmetry, "matrix does not satisfy H*JH = J");
    const auto j = standard_J(h.signature());
    return multiply(multiply(negate(j), adjoint(h)), j);
}

PhasePoint apply(const BlockSymplecticMatrix& h, const PhasePoint& v) {
    require_same(h.signature(), v.signature());
    const Signature& sig = h.signature();
    const std::size_t d = h.dim();
    std::vector<Int> x(d);
    for (std::size_t t = 0; t < sig.k(); ++t) {
        x[2 * t] = v.pair(t).p.value();
        x[2 * t + 1] = v.pair(t).q.value();
    }
    std::vector<std::pair<Int, Int>> qp(sig.k());
    for (std::size_t t = 0; t < sig.k(); ++t) {
        Int p = 0, q = 0;
        for (std::size_t c = 0; c < d; ++c) {
            p = checked_add(p, checked_mul(h.entry(2 * t, c), x[c]));
            q = checked_add(q, checked_mul(h.entry(2 * t + 1, c), x[c]));
        }
        qp[t] = {q, p};
    }
    return PhasePoint::from_ints(sig, qp);
}

BlockSymplecticMatrix plain_transpose(const BlockSymplecticMatrix& h) {
    if (!h.signature().equal_dims()) fail(ErrorKind::InvalidArgument, "plain transpose needs equal dimensions");
    const std::size_t d = h.dim();
    std::vector<Int> m(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) m[r * d + c] = h.entry(c, r);
    }
    return BlockSymplecticMatrix::from_entries(h.signature(), std::move(m));
}

bool is_plain_symplectic(const BlockSymplecticMatrix& h) {
    const auto j = standard_J(h.signature());
    return multiply(multiply(plain_transpose(h), j), h) == j;
}

BlockSymplecticMatrix random_monoid_element(const Signature& sig, std::mt19937_64& rng) {
    const std::size_t d = 2 * sig.k();
    std::vector<Int> a(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        std::uniform_int_distribution<Int> dist(0, sig.dim(r / 2) - 1);
        for (std::size_t c = 0; c < d; ++c) a[r * d + c] = dist(rng);
    }
    return BlockSymplecticMatrix::from_unscaled(sig, a);
}

BigInt monoid_size(const Signature& sig) {
    BigInt total = 1;
    for (std::size_t i = 0; i < sig.k(); ++i) {
        for (std::size_t j = 0; j < sig.k(); ++j) {
            BigInt g = static_cast<long>(gcd(sig.dim(i), sig.dim(j)));
            total *= g * g * g * g;
        }
    }
    return total;
}

namespace {

// Column search: column t (generator t) ranges over structure-valid vectors;
// after each choice the new entries of H*JH are compared with J.
class ColumnSearch {
public:
    ColumnSearch(const Signature& sig, BudgetMeter& meter) : sig_(sig), d_(2 * sig.k()), meter_(meter) {
        for (std::size_t f = 0; f < sig.k(); ++f) candidates_.push_back(build_candidates(f));
    }

    std::size_t first_level_size() const { return candidates_[0].size(); }

    void run_partition(std::size_t first, std::vector<MatrixKey>& out) {
        std::vector<const Candidate*> chosen;
        chosen.push_back(&candidates_[0][first]);
        meter_.charge();
        if (consistent(chosen)) descend(chosen, out);
    }

private:
    struct Candidate {
        std::vector<Int> column;   // scaled entries, rows in their own rings
        std::vector<Int> adj_row;  // corresponding row of H*
        std::vector<Int> j_column; // J·column
    };

    std::vector<Candidate> build_candidates(std::size_t f) const {
        std::vector<Candidate> out;
        std::vector<Int> col(d_, 0);
        std::function<void(std::size_t)> rec = [&](std::size_t r) {
            if (r == d_) {
                Candidate c;
                c.column = col;
                c.adj_row.resize(d_);
                c.j_column.resize(d_);
                for (std::size_t x = 0; x < d_; ++x) {
                    c.adj_row[x] = adjoint_entry(sig_, col[x], f, x / 2);
                    c.j_column[x] = x % 2 == 0 ? col[x + 1] : -col[x - 1];
                }
                out.push_back(std::move(c));
                return;
            }
            const Int n = sig_.dim(r / 2);
            const Int step = block_scale(sig_, r / 2, f);
            for (Int v = 0; v < n; v += step) {
                col[r] = v;
                rec(r + 1);
            }
        };
        rec(0);
        return out;
    }

    Int target(std::size_t s, std::size_t t) const {
        if (s / 2 != t / 2 || s == t) return 0;
        return s % 2 == 0 ? 1 : sig_.dim(s / 2) - 1;
    }

    Int form(const Candidate& a, std::size_t s, const Candidate& b) const {
        Int acc = 0;
        for (std::size_t x = 0; x < d_; ++x) acc += a.adj_row[x] * b.j_column[x];
        return mod_floor(acc, sig_.dim(s / 2));
    }

    bool consistent(const std::vector<const Candidate*>& chosen) const {
        const std::size_t t = chosen.size() - 1;
        for (std::size_t s = 0; s <= t; ++s) {
            if (form(*chosen[s], s, *chosen[t]) != target(s, t)) return false;
            if (form(*chosen[t], t, *chosen[s]) != target(t, s)) return false;
        }
        return true;
    }

    void descend(std::vector<const Candidate*>& chosen, std::vector<MatrixKey>& out) {
        if (chosen.size() == d_) {
            std::vector<Int> m(d_ * d_);
            for (std::size_t c = 0; c < d_; ++c) {
                for (std::size_t r = 0; r < d_; ++r) m[r * d_ + c] = chosen[c]->column[r];
            }
            auto h = BlockSymplecticMatrix::from_entries(sig_, std::move(m));
            if (is_symmetry(h)) out.push_back(h.key());
            return;
        }
        const std::size_t f = chosen.size() / 2;
        for (const auto& cand : candidates_[f]) {
            meter_.charge();
            chosen.push_back(&cand);
            if (consistent(chosen)) descend(chosen, out);
            chosen.pop_back();
        }
    }

    const Signature& sig_;
    std::size_t d_;
    BudgetMeter& meter_;
    std::vector<std::vector<Candidate>> candidates_;
};

}  // namespace

void for_each_symmetry(const Signature& sig, const Budget& budget,
                       const std::function<void(const BlockSymplecticMatrix&)>& visit) {
    BudgetMeter meter(budget, "enumerate_group(" + sig.to_string() + ")");
    ColumnSearch search(sig, meter);
    std::vector<std::vector<MatrixKey>> parts(search.first_level_size());
    parallel_for(parts.size(), [&](std::size_t i) { search.run_partition(i, parts[i]); });
    for (const auto& part : parts) {
        for (const auto& key : part) visit(BlockSymplecticMatrix::from_key(sig, key));
    }
}

std::vector<BlockSymplecticMatrix> enumerate_group(const Signature& sig, const Budget& budget) {
    std::vector<BlockSymplecticMatrix> out;
    for_each_symmetry(sig, budget, [&](const BlockSymplecticMatrix& h) { out.push_back(h); });
    return out;
}

std::uint64_t group_order_by_enumeration(const Signature& sig, const Budget& budget) {
    std::uint64_t count = 0;
    for_each_symmetry(sig, budget, [&](const BlockSymplecticMatrix&) { ++count; });
    return count;
}

}  // namespace heisensym
