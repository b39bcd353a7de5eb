#include "doctest.h"

#include <set>

#include "generators.hpp"
#include "heisensym/symplectic.hpp"

using namespace heisensym;
using heisensym::testing::random_point;

namespace {

BlockSymplecticMatrix m2(Int n, Int a, Int b, Int c, Int d) {
    return BlockSymplecticMatrix::from_entries(Signature({n}), {a, b, c, d});
}

// Naive determinant scan of all 2×2 matrices mod n.
std::set<std::vector<Int>> det_one_matrices(Int n) {
    std::set<std::vector<Int>> out;
    for (Int a = 0; a < n; ++a)
        for (Int b = 0; b < n; ++b)
            for (Int c = 0; c < n; ++c)
                for (Int d = 0; d < n; ++d)
                    if (mod_floor(a * d - b * c, n) == 1) out.insert({a, b, c, d});
    return out;
}

Int plain_entry(const std::vector<Int>& m, std::size_t dim, std::size_t r, std::size_t c) { return m[r * dim + c]; }

}  // namespace

TEST_CASE("structure validation") {
    const Signature s({2, 4});
    CHECK(is_structure_valid(s, BlockSymplecticMatrix::identity(s).entries()));
    // block (2,1) must be multiples of 4/2 = 2 mod 4
    std::vector<Int> bad = BlockSymplecticMatrix::identity(s).entries();
    bad[2 * 4 + 0] = 1;
    CHECK_FALSE(is_structure_valid(s, bad));
    try {
        BlockSymplecticMatrix::from_entries(s, bad);
        FAIL("expected StructureViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::StructureViolation);
    }
    bad[2 * 4 + 0] = 2;
    CHECK(is_structure_valid(s, bad));
    CHECK_THROWS_AS(m2(3, 3, 0, 0, 1), Error);
    CHECK_THROWS_AS(m2(3, -1, 0, 0, 1), Error);
    CHECK(block_scale(s, 1, 0) == 2);
    CHECK(block_scale(s, 0, 1) == 1);
    CHECK(monoid_size(Signature({2, 3})) == BigInt(16 * 81 * 1 * 1));
    CHECK(monoid_size(Signature({2, 4})) == BigInt(16 * 256 * 16 * 16));
}

TEST_CASE("multiply examples") {
    const Signature s({2, 3});
    auto h = BlockSymplecticMatrix::from_unscaled(s, {1, 1, 5, 5, 0, 1, 7, 7, 9, 9, 2, 1, 9, 9, 1, 1});
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 2; c < 4; ++c) {
            CHECK(h.entry(r, c) == 0);
            CHECK(h.entry(c, r) == 0);
        }
    CHECK(multiply(h, BlockSymplecticMatrix::identity(s)) == h);
    CHECK(multiply(BlockSymplecticMatrix::identity(s), h) == h);

    const Signature s22({2, 2});
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        auto a = random_monoid_element(s22, rng);
        auto b = random_monoid_element(s22, rng);
        auto c = multiply(a, b);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t col = 0; col < 4; ++col) {
                Int acc = 0;
                for (std::size_t l = 0; l < 4; ++l) acc += a.entry(r, l) * b.entry(l, col);
                CHECK(c.entry(r, col) == acc % 2);
            }
    }
    CHECK_THROWS_AS(multiply(BlockSymplecticMatrix::identity(s), BlockSymplecticMatrix::identity(s22)), Error);
}

TEST_CASE("monoid closure holds on random products") {
    for (const auto& s : {Signature({2, 4}), Signature({2, 6}), Signature({4, 6}), Signature({2, 4, 8})}) {
        std::mt19937_64 rng(17);
        for (int t = 0; t < 10000; ++t) {
            auto a = random_monoid_element(s, rng);
            auto b = random_monoid_element(s, rng);
            REQUIRE(is_structure_valid(s, multiply(a, b).entries()));
        }
    }
}

TEST_CASE("adjoint") {
    const Signature s({3, 3});
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
        auto h = random_monoid_element(s, rng);
        CHECK(adjoint(h) == plain_transpose(h));
    }
    for (const auto& sig : {Signature({2}), Signature({2, 4}), Signature({4, 6}), Signature({2, 3, 6})}) {
        CHECK(adjoint(standard_J(sig)) == negate(standard_J(sig)));
        CHECK(adjoint(BlockSymplecticMatrix::identity(sig)) == BlockSymplecticMatrix::identity(sig));
        for (int t = 0; t < 200; ++t) {
            auto h = random_monoid_element(sig, rng);
            auto k = random_monoid_element(sig, rng);
            CHECK(adjoint(adjoint(h)) == h);
            CHECK(adjoint(multiply(h, k)) == multiply(adjoint(k), adjoint(h)));
        }
    }
}

TEST_CASE("standard J") {
    CHECK(standard_J(Signature({5})) == m2(5, 0, 1, 4, 0));
    for (const auto& sig : {Signature({3}), Signature({2, 4}), Signature({2, 3, 5})}) {
        const auto j = standard_J(sig);
        CHECK(multiply(j, j) == negate(BlockSymplecticMatrix::identity(sig)));
        CHECK(multiply(adjoint(j), j) == BlockSymplecticMatrix::identity(sig));
        CHECK(is_symmetry(j));
        CHECK(inverse_in_group(j) == negate(j));
    }
}

TEST_CASE("is_symmetry and inverse examples") {
    CHECK(is_symmetry(BlockSymplecticMatrix::identity(Signature({2}))));
    CHECK(is_symmetry(m2(2, 1, 1, 0, 1)));
    CHECK(is_symmetry(m2(2, 1, 0, 1, 1)));
    CHECK_FALSE(is_symmetry(m2(2, 1, 1, 1, 1)));
    CHECK(inverse_in_group(m2(2, 1, 1, 0, 1)) == m2(2, 1, 1, 0, 1));
    CHECK(inverse_in_group(BlockSymplecticMatrix::identity(Signature({4}))) == BlockSymplecticMatrix::identity(Signature({4})));
    try {
        inverse_in_group(m2(4, 2, 0, 0, 2));
        FAIL("expected NotASymmetry");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotASymmetry);
    }
}

TEST_CASE("k = 1: symmetries are exactly the determinant-one matrices") {
    const std::uint64_t expected[] = {6, 24, 48, 120, 144};
    for (Int n = 2; n <= 6; ++n) {
        const auto naive = det_one_matrices(n);
        std::set<std::vector<Int>> found;
        for (const auto& h : enumerate_group(Signature({n}))) found.insert(h.entries());
        CHECK(found == naive);
        CHECK(found.size() == expected[n - 2]);
        CHECK(BigInt(static_cast<unsigned long>(found.size())) == sl2_order(n));
    }
}

TEST_CASE("apply") {
    const Signature s({7});
    for (Int i = 0; i < 7; ++i)
        for (Int j = 0; j < 7; ++j) {
            // pairs are (q, p); the coordinate vector is (p, q)
            auto v = PhasePoint::from_ints(s, {{j, i}});
            auto w = apply(standard_J(s), v);
            CHECK(w.pair(0).p.value() == j);
            CHECK(w.pair(0).q.value() == mod_floor(-i, 7));
            CHECK(apply(BlockSymplecticMatrix::identity(s), v) == v);
        }
    std::mt19937_64 rng(8);
    for (const auto& sig : {Signature({2, 4}), Signature({4, 6}), Signature({2, 3})}) {
        for (int t = 0; t < 200; ++t) {
            auto h = random_monoid_element(sig, rng);
            auto k = random_monoid_element(sig, rng);
            auto v = random_point(sig, rng);
            CHECK(apply(multiply(h, k), v) == apply(h, apply(k, v)));
        }
    }
}

TEST_CASE("group axioms hold on enumerated groups") {
    for (const auto& sig : {Signature({2}), Signature({4}), Signature({2, 2}), Signature({2, 3}), Signature({2, 4})}) {
        const auto group = enumerate_group(sig);
        std::set<std::vector<Int>> keys;
        for (const auto& h : group) keys.insert(h.entries());
        REQUIRE(keys.size() == group.size());
        CHECK(keys.count(BlockSymplecticMatrix::identity(sig).entries()) == 1);
        std::mt19937_64 rng(21);
        std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
        const std::size_t trials = std::min<std::size_t>(group.size() * group.size(), 20000);
        for (std::size_t t = 0; t < trials; ++t) {
            const auto& h = group[pick(rng)];
            const auto& k = group[pick(rng)];
            REQUIRE(keys.count(multiply(h, k).entries()) == 1);
        }
        for (const auto& h : group) {
            auto g = inverse_in_group(h);
            REQUIRE(keys.count(g.entries()) == 1);
            CHECK(multiply(g, h) == BlockSymplecticMatrix::identity(sig));
            CHECK(multiply(h, g) == BlockSymplecticMatrix::identity(sig));
        }
    }
}

TEST_CASE("group orders") {
    CHECK(group_order_by_enumeration(Signature({2})) == 6);
    CHECK(group_order_by_enumeration(Signature({2, 2})) == 720);
    CHECK(group_order_by_enumeration(Signature({2, 3})) == 144);
    CHECK(BigInt(720) == sp2k_order(2, 2));
    CHECK(BigInt(144) == sl2_order(2) * sl2_order(3));
    CHECK(BigInt(static_cast<unsigned long>(group_order_by_enumeration(Signature({3, 4})))) == sl2_order(12));
}

TEST_CASE("coprime splitting: off-diagonal blocks vanish") {
    for (const auto& h : enumerate_group(Signature({2, 3}))) {
        auto b01 = h.block(0, 1);
        auto b10 = h.block(1, 0);
        CHECK((b01[0][0] | b01[0][1] | b01[1][0] | b01[1][1]) == 0);
        CHECK((b10[0][0] | b10[0][1] | b10[1][0] | b10[1][1]) == 0);
    }
}

TEST_CASE("equal dimensions: membership is the plain symplectic condition") {
    for (const auto& sig : {Signature({2, 2}), Signature({3, 3})}) {
        std::mt19937_64 rng(31);
        for (int t = 0; t < 5000; ++t) {
            auto h = random_monoid_element(sig, rng);
            CHECK(is_symmetry(h) == is_plain_symplectic(h));
        }
        for (const auto& h : enumerate_group(Signature({2, 2}))) CHECK(is_plain_symplectic(h));
    }
    // literal transpose·J·H at (2,2), computed by hand
    const std::size_t d = 4;
    const auto j = standard_J(Signature({2, 2})).entries();
    std::size_t count = 0;
    for (const auto& h : enumerate_group(Signature({2, 2}))) {
        const auto& m = h.entries();
        bool ok = true;
        for (std::size_t r = 0; r < d && ok; ++r)
            for (std::size_t c = 0; c < d && ok; ++c) {
                Int acc = 0;
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b)
                        acc += plain_entry(m, d, a, r) * plain_entry(j, d, a, b) * plain_entry(m, d, b, c);
                ok = mod_floor(acc, 2) == plain_entry(j, d, r, c);
            }
        count += ok ? 1 : 0;
    }
    CHECK(count == 720);
    CHECK_THROWS_AS(plain_transpose(BlockSymplecticMatrix::identity(Signature({2, 4}))), Error);
}

TEST_CASE("pairing is preserved by every symmetry") {
    for (const auto& sig : {Signature({2}), Signature({3}), Signature({2, 2}), Signature({2, 3})}) {
        const auto points = enumerate_points(sig);
        for (const auto& h : enumerate_group(sig)) {
            std::vector<PhasePoint> image;
            points.for_each([&](const PhasePoint& u) { image.push_back(apply(h, u)); });
            for (std::uint64_t a = 0; a < points.size(); ++a)
                for (std::uint64_t b = a + 1; b < points.size(); ++b)
                    REQUIRE(pairing(image[a], image[b]) == pairing(points.at(a), points.at(b)));
        }
    }
    std::mt19937_64 rng(41);
    const Signature sig({2, 4});
    const auto group = enumerate_group(sig);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int t = 0; t < 2000; ++t) {
        const auto& h = group[pick(rng)];
        auto u = random_point(sig, rng);
        auto v = random_point(sig, rng);
        CHECK(pairing(apply(h, u), apply(h, v)) == pairing(u, v));
    }
}

TEST_CASE("budget is enforced") {
    Budget tiny;
    tiny.max_candidates = 10;
    try {
        group_order_by_enumeration(Signature({3, 3}), tiny);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("keys round trip") {
    std::mt19937_64 rng(5);
    for (const auto& sig : {Signature({2, 4}), Signature({2, 2, 2}), Signature({3, 3})}) {
        for (int t = 0; t < 200; ++t) {
            auto h = random_monoid_element(sig, rng);
            CHECK(BlockSymplecticMatrix::from_key(sig, h.key()) == h);
        }
    }
}
