#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "heisensym/cyclotomic.hpp"

using namespace heisensym;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

CycloElement random_element(Int order, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-5, 5);
    std::vector<BigInt> c;
    for (Int i = 0; i < euler_phi(order); ++i) c.emplace_back(dist(rng));
    return CycloElement::from_coeffs(order, c);
}

// Dense copies built entry by entry, so products go through the dense path.
CycloMatrix densify(const CycloMatrix& m) {
    std::vector<CycloElement> e;
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) e.push_back(m.entry(r, c));
    return CycloMatrix::dense(m.dim(), m.order(), std::move(e));
}

CycloMatrix shift_matrix(Int n, Int order) {
    // P|j> = |j-1>: row r has its 1 in column r+1.
    std::vector<CycloElement> e(static_cast<std::size_t>(n * n), CycloElement::zero(order));
    for (Int r = 0; r < n; ++r) e[static_cast<std::size_t>(r * n + (r + 1) % n)] = CycloElement::one(order);
    return CycloMatrix::dense(static_cast<std::size_t>(n), order, std::move(e));
}

CycloMatrix clock_matrix(Int n, Int order) {
    std::vector<CycloElement> e(static_cast<std::size_t>(n * n), CycloElement::zero(order));
    for (Int r = 0; r < n; ++r) e[static_cast<std::size_t>(r * n + r)] = root_of_unity(order, (order / n) * r);
    return CycloMatrix::dense(static_cast<std::size_t>(n), order, std::move(e));
}

}  // namespace

TEST_CASE("cyclotomic_polynomial small cases") {
    CHECK(cyclotomic_polynomial(1).coeffs() == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(4).coeffs() == ints({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6).coeffs() == ints({1, -1, 1}));
    CHECK(cyclotomic_polynomial(2).coeffs() == ints({1, 1}));
    CHECK(cyclotomic_polynomial(12).coeffs() == ints({1, 0, -1, 0, 1}));
}

TEST_CASE("product of Φ_d over divisors is x^M - 1") {
    for (Int m = 1; m <= 48; ++m) {
        IntPolynomial prod({BigInt(1)});
        for (Int d = 1; d <= m; ++d) {
            if (m % d == 0) prod = prod * cyclotomic_polynomial(d);
        }
        CHECK(prod == IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(m)));
        CHECK(cyclotomic_polynomial(m).degree() == euler_phi(m));
    }
}

TEST_CASE("roots of unity") {
    CHECK(root_of_unity(2, 1).coeffs() == ints({-1}));
    CHECK(root_of_unity(4, 2) == CycloElement::integer(4, -1));
    CHECK(root_of_unity(7, 0).is_one());
    for (Int m = 1; m <= 30; ++m) {
        for (Int e = 0; e < m; ++e) {
            CHECK((root_of_unity(m, e) * root_of_unity(m, m - e)).is_one());
            CycloElement z = root_of_unity(m, e);
            CHECK(z.pow(static_cast<std::uint64_t>(m)).is_one());
            const Int ord = m / gcd(e, m);
            CycloElement acc = z;
            for (Int j = 1; j < ord; ++j) {
                CHECK_FALSE(acc.is_one());
                acc = acc * z;
            }
            CHECK(acc.is_one());
        }
    }
}

TEST_CASE("exact identities") {
    CHECK((CycloElement::one(3) + root_of_unity(3, 1) + root_of_unity(3, 2)).is_zero());
    CHECK(root_of_unity(8, 1) * root_of_unity(8, 1) == root_of_unity(8, 2));
    CHECK((root_of_unity(5, 1).conjugate() * root_of_unity(5, 1)).is_one());
    CHECK(root_of_unity(4, 1).lift_to(8) == root_of_unity(8, 2));
    CHECK(root_of_unity(3, 2).lift_to(12) == root_of_unity(12, 8));
    for (Int m = 2; m <= 24; ++m) {
        CycloElement sum = CycloElement::zero(m);
        for (Int e = 0; e < m; ++e) sum += root_of_unity(m, e);
        CHECK(sum.is_zero());
    }
    CHECK(root_of_unity(12, 5).root_ratio(root_of_unity(12, 2)) == std::optional<Int>(3));
    CHECK_FALSE(CycloElement::integer(4, 2).root_ratio(CycloElement::one(4)).has_value());
}

TEST_CASE("order mismatch is an error") {
    try {
        (void)(root_of_unity(4, 1) * root_of_unity(8, 1));
        FAIL("expected OrderMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OrderMismatch);
    }
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937_64 rng(7);
    for (Int m : {3, 4, 8, 12, 15, 24}) {
        for (int trial = 0; trial < 50; ++trial) {
            auto a = random_element(m, rng), b = random_element(m, rng), c = random_element(m, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
            CHECK(a.times_root(5) == a * root_of_unity(m, 5));
        }
    }
}

TEST_CASE("matrix products") {
    const Int order = 6;
    const auto p3 = shift_matrix(3, order);
    const auto q3 = clock_matrix(3, order);
    CHECK(matrix_equal(p3 * CycloMatrix::identity(3, order), p3));
    CHECK(matrix_equal(p3 * p3 * p3, CycloMatrix::identity(3, order)));
    CHECK(matrix_equal(q3.pow(3), CycloMatrix::identity(3, order)));
    // P Q = ω Q P, both sides built independently
    CHECK(matrix_equal(p3 * q3, (q3 * p3).scaled(root_of_unity(order, 2))));
    CHECK_FALSE(matrix_equal(p3 * q3, q3 * p3));
    CHECK((p3 * p3).normalized().is_monomial());
    CHECK_THROWS_AS(p3 * CycloMatrix::identity(4, order), Error);
    CHECK_THROWS_AS(p3 * CycloMatrix::identity(3, 12), Error);
}

TEST_CASE("monomial and dense paths agree") {
    std::mt19937_64 rng(11);
    const Int order = 12;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::size_t> perm_a(5), perm_b(5);
        std::iota(perm_a.begin(), perm_a.end(), 0);
        std::iota(perm_b.begin(), perm_b.end(), 0);
        std::shuffle(perm_a.begin(), perm_a.end(), rng);
        std::shuffle(perm_b.begin(), perm_b.end(), rng);
        std::vector<CycloElement> va, vb;
        for (int i = 0; i < 5; ++i) {
            va.push_back(root_of_unity(order, static_cast<Int>(rng() % 12)));
            vb.push_back(random_element(order, rng) + CycloElement::integer(order, 100));
        }
        auto a = CycloMatrix::monomial(order, perm_a, va);
        auto b = CycloMatrix::monomial(order, perm_b, vb);
        auto mono = a * b;
        CHECK(mono.is_monomial());
        CHECK(matrix_equal(mono, densify(a) * densify(b)));
        CHECK(matrix_equal(mono, densify(a) * b));
        CHECK(matrix_equal(mono, a * densify(b)));
        CHECK(matrix_equal(a.adjoint(), densify(a).adjoint()));
        CHECK(matrix_equal(a.kron(b), densify(a).kron(densify(b))));
        CHECK(matrix_equal(a * a.adjoint(), CycloMatrix::identity(5, order)));
    }
}

TEST_CASE("matrix_equal is a congruence") {
    std::mt19937_64 rng(3);
    const Int order = 8;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<CycloElement> e1, e2;
        for (int i = 0; i < 9; ++i) {
            e1.push_back(random_element(order, rng));
            e2.push_back(random_element(order, rng));
        }
        auto a = CycloMatrix::dense(3, order, e1);
        auto b = CycloMatrix::dense(3, order, e2);
        // a rebuilt from unreduced coefficients equals a
        std::vector<CycloElement> e3;
        for (const auto& z : e1) {
            std::vector<BigInt> c = z.coeffs();
            c.resize(8);
            // add a multiple of Φ_8 = x^4 + 1
            c[0] += 3;
            c[4] += 3;
            e3.push_back(CycloElement::from_coeffs(order, c));
        }
        auto a2 = CycloMatrix::dense(3, order, e3);
        CHECK(matrix_equal(a, a2));
        CHECK(matrix_equal(a2, a));
        CHECK(matrix_equal(a * b, a2 * b));
        CHECK(matrix_equal(b * a, b * a2));
    }
}
