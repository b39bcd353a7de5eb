#include "heisensym/clifford.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace heisensym {

std::string GeneratorRef::text(bool with_factor) const {
    std::ostringstream os;
    switch (kind) {
        case GeneratorKind::Fourier: os << "F(" << n << ')'; break;
        case GeneratorKind::Gauss: os << "G(" << n << ')'; break;
        case GeneratorKind::Multiplier: os << "M(" << n << ',' << a << ')'; break;
        case GeneratorKind::Coupling: os << "R(" << i << ',' << j << ')'; return os.str();
    }
    if (with_factor) os << '@' << factor;
    return os.str();
}

NormalizerUnitary::NormalizerUnitary(Signature sig, CycloMatrix matrix, std::optional<GeneratorWord> word)
    : sig_(std::move(sig)), matrix_(std::move(matrix)), word_(std::move(word)) {
    if (matrix_.dim() != static_cast<std::size_t>(sig_.N())) {
        fail(ErrorKind::DimensionMismatch, "unitary dimension " + std::to_string(matrix_.dim()) + " != N = " +
                                               std::to_string(sig_.N()));
    }
    if (matrix_.order() != sig_.M()) fail(ErrorKind::OrderMismatch, "unitary order must be 2L");
}

NormalizerUnitary NormalizerUnitary::operator*(const NormalizerUnitary& o) const {
    require_same(sig_, o.sig_);
    std::optional<GeneratorWord> w;
    if (word_ && o.word_) {
        w = *word_;
        w->insert(w->end(), o.word_->begin(), o.word_->end());
    }
    return {sig_, matrix_ * o.matrix_, std::move(w)};
}

NormalizerUnitary fourier(Int n) {
    const Signature sig({n});
    const Int order = sig.M();
    std::vector<CycloElement> entries;
    entries.reserve(static_cast<std::size_t>(n * n));
    for (Int r = 0; r < n; ++r) {
        for (Int c = 0; c < n; ++c) entries.push_back(root_of_unity(order, 2 * ((r * c) % n)));
    }
    return {sig, CycloMatrix::dense(static_cast<std::size_t>(n), order, std::move(entries)),
            GeneratorWord{GeneratorRef::fourier(n)}};
}

NormalizerUnitary gauss_phase(Int n) {
    const Signature sig({n});
    std::vector<Int> exponents;
    for (Int j = 0; j < n; ++j) {
        // j² alone is not a function of j mod n when n is odd.
        exponents.push_back(n % 2 == 0 ? j * j : j * j + j * n);
    }
    return {sig, CycloMatrix::diagonal_roots(sig.M(), exponents), GeneratorWord{GeneratorRef::gauss(n)}};
}

NormalizerUnitary multiplier(Int n, Int a) {
    const Signature sig({n});
    const Residue unit(a, n);
    const Int inv = mod_inv(unit).value();
    std::vector<std::size_t> cols(static_cast<std::size_t>(n));
    for (Int r = 0; r < n; ++r) cols[static_cast<std::size_t>(r)] = static_cast<std::size_t>((inv * r) % n);
    std::vector<CycloElement> ones(cols.size(), CycloElement::one(sig.M()));
    return {sig, CycloMatrix::monomial(sig.M(), std::move(cols), std::move(ones)),
            GeneratorWord{GeneratorRef::multiplier(n, unit.value())}};
}

namespace {

CycloMatrix eye(Int dim, Int order) { return CycloMatrix::identity(static_cast<std::size_t>(dim), order); }

// Block diagonal of monomial blocks.
CycloMatrix direct_sum(const std::vector<CycloMatrix>& blocks, Int order) {
    std::vector<std::size_t> cols;
    std::vector<CycloElement> vals;
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.dim(); ++r) {
            cols.push_back(offset + b.column_of(r));
            vals.push_back(b.value_in_row(r));
        }
        offset += b.dim();
    }
    return CycloMatrix::monomial(order, std::move(cols), std::move(vals));
}

}  // namespace

NormalizerUnitary r_matrix(const Signature& sig, std::size_t i, std::size_t j) {
    if (i < 1 || j > sig.k() || i >= j) {
        fail(ErrorKind::IndexOutOfRange, "R_ij needs 1 <= i < j <= " + std::to_string(sig.k()));
    }
    const Int order = sig.M();
    const Int ni = sig.dim(i - 1);
    const Int nj = sig.dim(j - 1);
    const Int g = gcd(ni, nj);

    // Q_{n_j} at the global order, then T_ij = I_{n_{i+1}..n_{j-1}} ⊗ Q^{n_j/g}.
    std::vector<Int> q_exp;
    for (Int x = 0; x < nj; ++x) q_exp.push_back((order / nj) * x);
    const CycloMatrix q = CycloMatrix::diagonal_roots(order, q_exp);
    const CycloMatrix t = eye(sig.dim_product(i, j - 1), order).kron(q.pow(static_cast<std::uint64_t>(nj / g)));

    std::vector<CycloMatrix> blocks;
    CycloMatrix power = eye(sig.dim_product(i, j), order);
    for (Int x = 0; x < ni; ++x) {
        blocks.push_back(power);
        power = power * t;
    }
    const CycloMatrix inner = direct_sum(blocks, order);
    CycloMatrix full = eye(sig.dim_product(0, i - 1), order).kron(inner).kron(eye(sig.dim_product(j, sig.k()), order));
    return {sig, std::move(full), GeneratorWord{GeneratorRef::coupling(i, j)}};
}

NormalizerUnitary tensor_local(const Signature& sig, std::size_t factor, const NormalizerUnitary& u) {
    if (factor < 1 || factor > sig.k()) fail(ErrorKind::IndexOutOfRange, "factor outside 1..k");
    if (u.signature().k() != 1 || u.signature().dim(0) != sig.dim(factor - 1)) {
        fail(ErrorKind::DimensionMismatch, "local unitary of dimension " + std::to_string(u.matrix().dim()) +
                                               " in slot of dimension " + std::to_string(sig.dim(factor - 1)));
    }
    const Int order = sig.M();
    CycloMatrix full = eye(sig.dim_product(0, factor - 1), order)
                           .kron(u.matrix().lift_to(order))
                           .kron(eye(sig.dim_product(factor, sig.k()), order));
    std::optional<GeneratorWord> word;
    if (u.word()) {
        word = *u.word();
        for (auto& g : *word) g.factor = factor;
    }
    return {sig, std::move(full), std::move(word)};
}

NormalizerUnitary realize(const Signature& sig, const GeneratorRef& g) {
    if (g.kind == GeneratorKind::Coupling) return r_matrix(sig, g.i, g.j);
    if (g.factor < 1 || g.factor > sig.k()) fail(ErrorKind::IndexOutOfRange, "letter factor outside 1..k");
    if (g.n != sig.dim(g.factor - 1)) fail(ErrorKind::DimensionMismatch, "letter " + g.text(true) + " does not fit slot");
    switch (g.kind) {
        case GeneratorKind::Fourier: return tensor_local(sig, g.factor, fourier(g.n));
        case GeneratorKind::Gauss: return tensor_local(sig, g.factor, gauss_phase(g.n));
        case GeneratorKind::Multiplier: return tensor_local(sig, g.factor, multiplier(g.n, g.a));
        case GeneratorKind::Coupling: break;
    }
    fail(ErrorKind::InvalidArgument, "unknown generator kind");
}

NormalizerUnitary realize(const Signature& sig, const GeneratorWord& word) {
    NormalizerUnitary u(sig, eye(sig.N(), sig.M()), GeneratorWord{});
    for (const auto& g : word) u = u * realize(sig, g);
    return u;
}

BlockSymplecticMatrix induced_matrix(const Signature& sig, const CycloMatrix& u) {
    if (u.dim() != static_cast<std::size_t>(sig.N())) fail(ErrorKind::DimensionMismatch, "unitary dimension != N");
    if (u.order() != sig.M()) fail(ErrorKind::OrderMismatch, "unitary order != 2L");
    const std::size_t d = 2 * sig.k();
    const CycloMatrix u_dag = u.adjoint();
    std::vector<Int> m(d * d);
    for (std::size_t t = 1; t <= d; ++t) {
        const CycloMatrix a = to_matrix(standard_generator(sig, t));
        const CycloMatrix ua = u * a;
        HeisenbergElement image = HeisenbergElement::identity(sig);
        try {
            image = match_projective(sig, ua * u_dag).element;
        } catch (const Error& e) {
            fail(ErrorKind::NotInNormalizer, "conjugate of A_" + std::to_string(t) + " rejected: " + e.what());
        }
        // Confirm U·A_t = λ·W·U exactly for a root of unity λ.
        const CycloMatrix wu = to_matrix(image) * u;
        bool matched = false;
        for (std::size_t r = 0; r < u.dim() && !matched; ++r) {
            for (std::size_t c = 0; c < u.dim(); ++c) {
                CycloElement rhs = wu.entry(r, c);
                if (rhs.is_zero()) continue;
                auto e = ua.entry(r, c).root_ratio(rhs);
                if (!e || !matrix_equal(ua, wu.scaled(root_of_unity(sig.M(), *e)))) {
                    fail(ErrorKind::NotInNormalizer, "conjugation identity fails for A_" + std::to_string(t));
                }
                matched = true;
                break;
            }
        }
        if (!matched) fail(ErrorKind::NotInNormalizer, "degenerate unitary");
        for (std::size_t f = 0; f < sig.k(); ++f) {
            m[(2 * f) * d + (t - 1)] = image.factor(f).p.value();
            m[(2 * f + 1) * d + (t - 1)] = image.factor(f).q.value();
        }
    }
    if (!is_structure_valid(sig, m)) fail(ErrorKind::NotInNormalizer, "induced map breaks block structure");
    auto h = BlockSymplecticMatrix::from_entries(sig, std::move(m));
    if (!is_symmetry(h)) fail(ErrorKind::NotInNormalizer, "induced map does not preserve the pairing");
    return h;
}

BlockSymplecticMatrix induced_matrix(const NormalizerUnitary& u) { return induced_matrix(u.signature(), u.matrix()); }

std::array<std::array<Int, 2>, 2> row_presentation(const BlockSymplecticMatrix& h) {
    if (h.signature().k() != 1) fail(ErrorKind::InvalidArgument, "row presentation is for single systems");
    return {{{h.entry(1, 1), h.entry(0, 1)}, {h.entry(1, 0), h.entry(0, 0)}}};
}

namespace {

// Letters realizing upper/lower unipotents in block coordinates.
void append_upper(GeneratorWord& w, Int n, Int x) {
    // F·G^x·F^3 induces [[1, x], [0, 1]].
    x = mod_floor(x, n);
    if (x == 0) return;
    w.push_back(GeneratorRef::fourier(n));
    for (Int s = 0; s < x; ++s) w.push_back(GeneratorRef::gauss(n));
    for (int s = 0; s < 3; ++s) w.push_back(GeneratorRef::fourier(n));
}

void append_lower(GeneratorWord& w, Int n, Int y) {
    // G^m induces [[1, 0], [-m, 1]].
    Int m = mod_floor(-y, n);
    for (Int s = 0; s < m; ++s) w.push_back(GeneratorRef::gauss(n));
}

bool is_unit(Int a, Int n) { return gcd(mod_floor(a, n), n) == 1; }

}  // namespace

GeneratorWord lift_sl2(Int n, const BlockSymplecticMatrix& h2) {
    if (!(h2.signature() == Signature({n}))) fail(ErrorKind::NotSL2, "expected a 2x2 matrix over Z_" + std::to_string(n));
    Int a = h2.entry(0, 0), b = h2.entry(0, 1), c = h2.entry(1, 0), d = h2.entry(1, 1);
    if (mod_floor(a * d - b * c, n) != 1 % n) fail(ErrorKind::NotSL2, "determinant is not 1");

    // Invariant: h2 = ind(word) · [[a, b], [c, d]]. Each step left-multiplies
    // the current matrix by E and appends a word for E^{-1}.
    GeneratorWord word;
    auto left_mul = [&](Int e00, Int e01, Int e10, Int e11) {
        Int na = mod_floor(e00 * a + e01 * c, n), nb = mod_floor(e00 * b + e01 * d, n);
        Int nc = mod_floor(e10 * a + e11 * c, n), nd = mod_floor(e10 * b + e11 * d, n);
        a = na, b = nb, c = nc, d = nd;
    };

    if (c != 0 && !is_unit(a, n)) {
        if (is_unit(c, n)) {
            left_mul(0, -1, 1, 0);  // S^{-1}
            word.push_back(GeneratorRef::fourier(n));
        } else {
            // gcd(a, c, n) = 1 guarantees a shift a + x·c that is a unit.
            Int x = 1;
            while (x < n && !is_unit(a + x * c, n)) ++x;
            if (x == n) fail(ErrorKind::NotSL2, "first column does not generate Z_n");
            left_mul(1, x, 0, 1);
            append_upper(word, n, -x);
        }
    }
    if (c != 0) {
        Int y = mod_floor(-c * mod_inv(Residue(a, n)).value(), n);
        left_mul(1, 0, y, 1);
        append_lower(word, n, -y);
    }
    if (a != 1 % n) {
        Int inv = mod_inv(Residue(a, n)).value();
        word.push_back(GeneratorRef::multiplier(n, a));
        left_mul(inv, 0, 0, a);
    }
    if (b != 0) {
        Int bb = b;
        left_mul(1, -bb, 0, 1);
        append_upper(word, n, bb);
    }
    if (a != 1 % n || b != 0 || c != 0 || d != 1 % n) fail(ErrorKind::NotSL2, "reduction did not reach the identity");
    return word;
}

std::vector<GeneratorRef> standard_letters(const Signature& sig) {
    std::vector<GeneratorRef> out;
    for (std::size_t f = 1; f <= sig.k(); ++f) {
        const Int n = sig.dim(f - 1);
        out.push_back(GeneratorRef::fourier(n, f));
        out.push_back(GeneratorRef::gauss(n, f));
        for (Int a = 2; a < n; ++a) {
            if (gcd(a, n) == 1) out.push_back(GeneratorRef::multiplier(n, a, f));
        }
    }
    for (std::size_t i = 1; i <= sig.k(); ++i) {
        for (std::size_t j = i + 1; j <= sig.k(); ++j) out.push_back(GeneratorRef::coupling(i, j));
    }
    return out;
}

GeneratorWord lift_by_search(const Signature& sig, const BlockSymplecticMatrix& target, const Budget& budget) {
    require_same(sig, target.signature());
    if (!is_symmetry(target)) fail(ErrorKind::NotASymmetry, "target does not satisfy H*JH = J");
    const auto letters = standard_letters(sig);
    std::vector<BlockSymplecticMatrix> induced;
    for (const auto& g : letters) induced.push_back(induced_matrix(realize(sig, g)));

    struct Parent {
        MatrixKey from;
        std::size_t letter;
    };
    BudgetMeter meter(budget, "lift search");
    const MatrixKey start = BlockSymplecticMatrix::identity(sig).key();
    const MatrixKey goal = target.key();
    std::unordered_map<MatrixKey, Parent, MatrixKeyHash> parent;
    parent.emplace(start, Parent{start, letters.size()});
    std::deque<MatrixKey> queue{start};
    bool found = start == goal;
    while (!found && !queue.empty()) {
        const MatrixKey key = queue.front();
        queue.pop_front();
        const auto g = BlockSymplecticMatrix::from_key(sig, key);
        for (std::size_t s = 0; s < letters.size() && !found; ++s) {
            meter.charge();
            const MatrixKey next = multiply(g, induced[s]).key();
            if (parent.emplace(next, Parent{key, s}).second) {
                queue.push_back(next);
                found = next == goal;
            }
        }
    }
    if (!found) fail(ErrorKind::LiftNotFound, "target is outside the generated subgroup");
    GeneratorWord word;
    for (MatrixKey k = goal; !(k == start);) {
        const Parent& p = parent.at(k);
        word.push_back(letters[p.letter]);
        k = p.from;
    }
    return {word.rbegin(), word.rend()};
}

GeneratorWord lift(const Signature& sig, const BlockSymplecticMatrix& target, const Budget& budget) {
    require_same(sig, target.signature());
    if (!is_symmetry(target)) fail(ErrorKind::NotASymmetry, "target does not satisfy H*JH = J");
    GeneratorWord word = sig.k() == 1 ? lift_sl2(sig.dim(0), target) : lift_by_search(sig, target, budget);
    if (!(induced_matrix(realize(sig, word)) == target)) {
        fail(ErrorKind::LiftNotFound, "lifted word does not reproduce the target");
    }
    return word;
}

GenerationReport verify_generation(const Signature& sig, const Budget& budget) {
    GenerationReport report{sig, 0, 0, false, {}};
    const auto identity = BlockSymplecticMatrix::identity(sig);
    std::vector<BlockSymplecticMatrix> gens;
    for (const auto& g : standard_letters(sig)) {
        auto h = induced_matrix(realize(sig, g));
        report.letters.push_back({g, h, h == identity});
        if (!(h == identity)) gens.push_back(h);
    }

    BudgetMeter meter(budget, "generation closure(" + sig.to_string() + ")");
    std::unordered_set<MatrixKey, MatrixKeyHash> seen{identity.key()};
    std::vector<MatrixKey> frontier{identity.key()};
    while (!frontier.empty()) {
        std::vector<MatrixKey> next;
        for (const auto& key : frontier) {
            const auto g = BlockSymplecticMatrix::from_key(sig, key);
            for (const auto& s : gens) {
                meter.charge();
                auto k = multiply(g, s).key();
                if (seen.insert(k).second) next.push_back(k);
            }
        }
        frontier = std::move(next);
    }
    report.generated_order = seen.size();
    report.group_order = group_order_by_enumeration(sig, budget);
    report.full = report.generated_order == report.group_order;
    return report;
}

}  // namespace heisensym
