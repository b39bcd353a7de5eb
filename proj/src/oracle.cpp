#include "heisensym/oracle.hpp"

#include <unordered_set>

#include "heisensym/parallel.hpp"
#include "heisensym/symplectic.hpp"

namespace heisensym {

GeneratorImageTable::GeneratorImageTable(Signature sig, std::vector<PhasePoint> images)
    : sig_(std::move(sig)), images_(std::move(images)) {
    if (images_.size() != 2 * sig_.k()) fail(ErrorKind::SignatureMismatch, "need one image per generator");
    for (const auto& v : images_) require_same(sig_, v.signature());
}

GeneratorImageTable GeneratorImageTable::identity(const Signature& sig) {
    std::vector<PhasePoint> images;
    for (std::size_t t = 1; t <= 2 * sig.k(); ++t) images.push_back(basis_point(sig, t));
    return {sig, std::move(images)};
}

bool GeneratorImageTable::satisfies_order_condition() const {
    for (std::size_t t = 0; t < images_.size(); ++t) {
        if (!images_[t].times(sig_.dim(t / 2)).is_zero()) return false;
    }
    return true;
}

PhasePoint basis_point(const Signature& sig, std::size_t t) {
    if (t < 1 || t > 2 * sig.k()) fail(ErrorKind::IndexOutOfRange, "generator index");
    std::vector<std::pair<Int, Int>> qp(sig.k(), {0, 0});
    auto& slot = qp[(t - 1) / 2];
    (t % 2 == 1 ? slot.second : slot.first) = 1;
    return PhasePoint::from_ints(sig, qp);
}

bool is_pairing_preserving(const GeneratorImageTable& table) {
    const Signature& sig = table.signature();
    const auto& img = table.images();
    for (std::size_t s = 0; s < img.size(); ++s) {
        for (std::size_t t = s + 1; t < img.size(); ++t) {
            if (!(pairing(img[s], img[t]) == pairing(basis_point(sig, s + 1), basis_point(sig, t + 1)))) return false;
        }
    }
    return true;
}

bool is_invertible(const GeneratorImageTable& table) {
    // The images generate a subgroup; count it by closure over point indices.
    const Signature& sig = table.signature();
    const auto total = enumerate_points(sig, 10'000'000).size();
    std::vector<Int> moduli;
    for (Int n : sig.dims()) {
        moduli.push_back(n);
        moduli.push_back(n);
    }
    auto coords_of = [&](const PhasePoint& v) {
        std::vector<Int> c;
        for (const auto& f : v.pairs()) {
            c.push_back(f.q.value());
            c.push_back(f.p.value());
        }
        return c;
    };
    auto index_of = [&](const std::vector<Int>& c) {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < c.size(); ++i) idx = idx * static_cast<std::uint64_t>(moduli[i]) + static_cast<std::uint64_t>(c[i]);
        return idx;
    };
    std::vector<std::vector<Int>> gens;
    for (const auto& g : table.images()) gens.push_back(coords_of(g));
    std::vector<char> seen(total, 0);
    std::vector<std::vector<Int>> stack{std::vector<Int>(moduli.size(), 0)};
    seen[0] = 1;
    std::uint64_t reached = 1;
    while (!stack.empty()) {
        auto x = std::move(stack.back());
        stack.pop_back();
        for (const auto& g : gens) {
            std::vector<Int> y(x.size());
            for (std::size_t i = 0; i < y.size(); ++i) y[i] = (x[i] + g[i]) % moduli[i];
            auto idx = index_of(y);
            if (!seen[idx]) {
                seen[idx] = 1;
                ++reached;
                stack.push_back(std::move(y));
            }
        }
    }
    return reached == total;
}

namespace {

// Index-based search: points are numbered by PointEnumeration and the
// pairing and addition tables are filled from PhasePoint arithmetic.
class ImageSearch {
public:
    ImageSearch(const Signature& sig, const AutomorphismSearchOptions& options)
        : sig_(sig), d_(2 * sig.k()), options_(options), meter_(options.budget, "count_automorphisms(" + sig.to_string() + ")"),
          points_(enumerate_points(sig, 4096)) {
        const std::size_t n = points_.size();
        std::vector<PhasePoint> pts;
        for (std::uint64_t i = 0; i < n; ++i) pts.push_back(points_.at(i));
        pair_.resize(n * n);
        add_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                pair_[a * n + b] = pairing(pts[a], pts[b]).value();
                add_[a * n + b] = index_of(pts[a] + pts[b]);
            }
        }
        for (std::size_t t = 1; t <= d_; ++t) basis_.push_back(index_of(basis_point(sig, t)));
        for (std::size_t f = 0; f < sig.k(); ++f) {
            std::vector<std::uint32_t> c;
            for (std::size_t a = 0; a < n; ++a) {
                if (pts[a].times(sig.dim(f)).is_zero()) c.push_back(static_cast<std::uint32_t>(a));
            }
            candidates_.push_back(std::move(c));
        }
    }

    std::size_t first_level_size() const { return candidates_[0].size(); }

    std::uint64_t run_partition(std::size_t first, std::vector<std::uint32_t>* witnesses) {
        std::vector<std::uint32_t> chosen{candidates_[0][first]};
        meter_.charge();
        std::uint64_t count = 0;
        descend(chosen, count, witnesses);
        return count;
    }

    GeneratorImageTable table(std::span<const std::uint32_t> images) const {
        std::vector<PhasePoint> pts;
        for (auto i : images) pts.push_back(points_.at(i));
        return {sig_, std::move(pts)};
    }

    std::size_t width() const { return d_; }

private:
    std::uint32_t index_of(const PhasePoint& v) const {
        std::uint64_t idx = 0;
        for (std::size_t t = 0; t < sig_.k(); ++t) {
            const auto n = static_cast<std::uint64_t>(sig_.dim(t));
            idx = (idx * n + static_cast<std::uint64_t>(v.pair(t).q.value())) * n + static_cast<std::uint64_t>(v.pair(t).p.value());
        }
        return static_cast<std::uint32_t>(idx);
    }

    bool pairs_ok(const std::vector<std::uint32_t>& chosen, std::size_t t) const {
        const std::size_t n = points_.size();
        for (std::size_t s = 0; s < t; ++s) {
            if (pair_[chosen[s] * n + chosen[t]] != pair_[basis_[s] * n + basis_[t]]) return false;
        }
        return true;
    }

    bool spans(const std::vector<std::uint32_t>& chosen) const {
        const std::size_t n = points_.size();
        std::vector<char> seen(n, 0);
        std::vector<std::uint32_t> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto g : chosen) {
                auto y = add_[x * n + g];
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        return reached == n;
    }

    void descend(std::vector<std::uint32_t>& chosen, std::uint64_t& count, std::vector<std::uint32_t>* witnesses) {
        const std::size_t t = chosen.size() - 1;
        if (options_.prune && !pairs_ok(chosen, t)) return;
        if (chosen.size() == d_) {
            if (!options_.prune) {
                for (std::size_t s = 1; s < d_; ++s) {
                    if (!pairs_ok(chosen, s)) return;
                }
            }
            if (!spans(chosen)) return;
            ++count;
            if (witnesses) witnesses->insert(witnesses->end(), chosen.begin(), chosen.end());
            return;
        }
        for (auto c : candidates_[chosen.size() / 2]) {
            meter_.charge();
            chosen.push_back(c);
            descend(chosen, count, witnesses);
            chosen.pop_back();
        }
    }

    Signature sig_;
    std::size_t d_;
    AutomorphismSearchOptions options_;
    BudgetMeter meter_;
    PointEnumeration points_;
    std::vector<Int> pair_;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> basis_;
    std::vector<std::vector<std::uint32_t>> candidates_;
};

}  // namespace

std::uint64_t count_automorphisms(const Signature& sig, const AutomorphismSearchOptions& options,
                                  const std::function<void(const GeneratorImageTable&)>& witness) {
    ImageSearch search(sig, options);
    const std::size_t parts = search.first_level_size();
    std::vector<std::uint64_t> counts(parts, 0);
    std::vector<std::vector<std::uint32_t>> buffers(witness ? parts : 0);
    parallel_for(parts, [&](std::size_t i) { counts[i] = search.run_partition(i, witness ? &buffers[i] : nullptr); });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (witness) {
        const std::size_t w = search.width();
        for (const auto& buf : buffers) {
            for (std::size_t off = 0; off < buf.size(); off += w) {
                witness(search.table(std::span<const std::uint32_t>(buf.data() + off, w)));
            }
        }
    }
    return total;
}

BlockSymplecticMatrix witness_matrix(const GeneratorImageTable& t) {
    const Signature& sig = t.signature();
    const std::size_t d = 2 * sig.k();
    std::vector<Int> m(d * d);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t f = 0; f < sig.k(); ++f) {
            m[(2 * f) * d + c] = t.images()[c].pair(f).p.value();
            m[(2 * f + 1) * d + c] = t.images()[c].pair(f).q.value();
        }
    }
    return BlockSymplecticMatrix::from_entries(sig, std::move(m));
}

GeneratorImageTable image_table(const BlockSymplecticMatrix& h) {
    const Signature& sig = h.signature();
    std::vector<PhasePoint> images;
    for (std::size_t c = 0; c < h.dim(); ++c) {
        std::vector<std::pair<Int, Int>> qp;
        for (std::size_t f = 0; f < sig.k(); ++f) qp.emplace_back(h.entry(2 * f + 1, c), h.entry(2 * f, c));
        images.push_back(PhasePoint::from_ints(sig, qp));
    }
    return {sig, std::move(images)};
}

CrossCheckReport cross_check(const Signature& sig, const Budget& budget) {
    BudgetMeter clock(Budget{}, "cross_check");
    CrossCheckReport report{sig, 0, 0, std::nullopt, false, true, false, 0.0};
    std::unordered_set<MatrixKey, MatrixKeyHash> images;
    bool witness_ok = true;
    report.oracle_count = count_automorphisms(sig, {budget, true}, [&](const GeneratorImageTable& t) {
        if (!witness_ok) return;
        try {
            auto h = witness_matrix(t);
            witness_ok = is_symmetry(h) && images.insert(h.key()).second;
        } catch (const Error&) {
            witness_ok = false;
        }
    });

    bool group_ok = true;
    for_each_symmetry(sig, budget, [&](const BlockSymplecticMatrix& h) {
        ++report.group_count;
        // Membership in the witness set means the column table passed every
        // oracle predicate.
        if (group_ok) group_ok = images.count(h.key()) == 1;
    });

    report.counts_agree = report.oracle_count == report.group_count;
    if (sig.equal_dims()) {
        report.formula_count = sp2k_order(sig.dim(0), static_cast<int>(sig.k()));
        report.formula_agrees = *report.formula_count == BigInt(std::to_string(report.group_count));
    }
    report.bijection_verified = witness_ok && group_ok && images.size() == report.oracle_count && report.counts_agree;
    report.seconds = clock.elapsed();
    return report;
}

}  // namespace heisensym
