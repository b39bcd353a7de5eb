// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "heisensym/verify.hpp"

using namespace heisensym;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            note << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.note << " [exception: " << e.what() << "]";
    }
    const double secs = since(start);
    if (limit_seconds > 0 && secs > limit_seconds) {
        o.ok = false;
        o.note << " [over time limit " << limit_seconds << " s]";
    }
    if (!o.ok) ++failures;
    std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << " | " << title << " |" << o.note.str()
              << " (" << secs << " s)" << std::endl;
}

// transpose(H)·J·H computed from raw entries, equal dimensions only.
bool literal_symplectic(const BlockSymplecticMatrix& h) {
    const std::size_t d = h.dim();
    const Int n = h.signature().dim(0);
    const auto j = standard_J(h.signature());
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            Int acc = 0;
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) acc += h.entry(a, r) * j.entry(a, b) * h.entry(b, c);
            if (mod_floor(acc, n) != j.entry(r, c)) return false;
        }
    return true;
}

}  // namespace

int main() {
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);

    criterion(1, "single system: group = determinant-one matrices for n = 2..6", 10.0, [](Outcome& o) {
        const std::uint64_t expected[] = {6, 24, 48, 120, 144};
        for (Int n = 2; n <= 6; ++n) {
            std::set<std::vector<Int>> naive;
            for (Int a = 0; a < n; ++a)
                for (Int b = 0; b < n; ++b)
                    for (Int c = 0; c < n; ++c)
                        for (Int d = 0; d < n; ++d)
                            if (mod_floor(a * d - b * c, n) == 1) naive.insert({a, b, c, d});
            std::set<std::vector<Int>> group;
            for (const auto& h : enumerate_group(Signature({n}))) group.insert(h.entries());
            o.note << " n=" << n << ":" << group.size();
            o.require(group == naive, "set equality at n=" + std::to_string(n));
            o.require(naive.size() == expected[n - 2], "naive count at n=" + std::to_string(n));
        }
    });

    criterion(2, "equal dimensions: |(2,2)| = 720, |(3,3)| = 51840, plain symplectic membership", 300.0, [](Outcome& o) {
        for (auto [n, want] : {std::pair<Int, std::uint64_t>{2, 720}, {3, 51840}}) {
            const Signature sig({n, n});
            std::uint64_t count = 0;
            bool literal = true;
            for_each_symmetry(sig, {}, [&](const BlockSymplecticMatrix& h) {
                ++count;
                literal = literal && literal_symplectic(h);
            });
            o.note << " " << sig << ":" << count;
            o.require(count == want, "count at " + sig.to_string());
            o.require(BigInt(std::to_string(count)) == sp2k_order(n, 2), "closed form at " + sig.to_string());
            o.require(literal, "members satisfy transpose.J.H = J at " + sig.to_string());
            // the converse: random monoid elements satisfying the literal condition are members
            std::mt19937_64 rng(7);
            std::uint64_t agree = 0;
            for (int t = 0; t < 20000; ++t) {
                auto h = random_monoid_element(sig, rng);
                agree += literal_symplectic(h) == is_symmetry(h) ? 1 : 0;
            }
            o.require(agree == 20000, "membership equivalence on random matrices at " + sig.to_string());
        }
    });

    criterion(3, "automorphism count equals group order with a verified witness bijection", 600.0, [](Outcome& o) {
        for (const auto& sig : {Signature({2}), Signature({3}), Signature({4}), Signature({2, 2}), Signature({2, 3}),
                                Signature({2, 4}), Signature({3, 3}), Signature({2, 2, 2})}) {
            auto r = cross_check(sig);
            o.note << " " << sig << ":" << r.oracle_count << "=" << r.group_count;
            o.require(r.passed(), "cross check at " + sig.to_string());
        }
    });

    criterion(4, "local generators and couplings generate the whole group", 600.0, [](Outcome& o) {
        for (const auto& sig : {Signature({2}), Signature({2, 2}), Signature({2, 3}), Signature({2, 4}), Signature({2, 2, 2})}) {
            auto r = verify_generation(sig);
            o.note << " " << sig << ":" << r.generated_order << "/" << r.group_order;
            o.require(r.full && r.generated_order == r.group_order, "generation at " + sig.to_string());
        }
    });

    criterion(5, "every coupling matrix conjugates the standard generators into the Heisenberg group", 0.0, [](Outcome& o) {
        std::size_t conjugations = 0;
        for (const auto& sig : {Signature({2, 2}), Signature({2, 3}), Signature({2, 4}), Signature({3, 3}), Signature({2, 2, 2}),
                                Signature({2, 6}), Signature({4, 6}), Signature({2, 3, 4})}) {
            for (std::size_t i = 1; i <= sig.k(); ++i)
                for (std::size_t j = i + 1; j <= sig.k(); ++j) {
                    const auto u = r_matrix(sig, i, j).matrix();
                    const auto u_dag = u.adjoint();
                    for (std::size_t t = 1; t <= 2 * sig.k(); ++t) {
                        const auto a = to_matrix(standard_generator(sig, t));
                        const auto conj = u * a * u_dag;
                        bool recognized = true;
                        try {
                            auto m = match_projective(sig, conj);
                            // exact: U·A = λ·W·U with W the recognized element
                            const auto lhs = u * a;
                            const auto rhs = to_matrix(m.element) * u;
                            std::size_t c0 = 0;
                            while (rhs.entry(0, c0).is_zero()) ++c0;
                            auto e = lhs.entry(0, c0).root_ratio(rhs.entry(0, c0));
                            recognized = e.has_value() && matrix_equal(lhs, rhs.scaled(root_of_unity(sig.M(), *e)));
                        } catch (const Error&) {
                            recognized = false;
                        }
                        ++conjugations;
                        o.require(recognized, "R(" + std::to_string(i) + "," + std::to_string(j) + ") at " + sig.to_string());
                    }
                }
        }
        o.note << " conjugations=" << conjugations;
    });

    criterion(6, "lifted words induce their target for all of SL(2, Z_n), n = 2..5", 60.0, [](Outcome& o) {
        for (Int n = 2; n <= 5; ++n) {
            const Signature sig({n});
            std::size_t count = 0, good = 0;
            for (const auto& h : enumerate_group(sig)) {
                ++count;
                good += induced_matrix(realize(sig, lift_sl2(n, h))) == h ? 1 : 0;
            }
            o.note << " n=" << n << ":" << good << "/" << count;
            o.require(good == count, "section at n=" + std::to_string(n));
        }
    });

    criterion(7, "P Q = omega Q P for N = 2..8 and compose matches matrix products", 0.0, [](Outcome& o) {
        for (Int n = 2; n <= 8; ++n) {
            const Signature s({n});
            const auto p = to_matrix(standard_generator(s, 1));
            const auto q = to_matrix(standard_generator(s, 2));
            o.require(matrix_equal(p * q, (q * p).scaled(root_of_unity(s.M(), 2))), "commutation at N=" + std::to_string(n));
        }
        std::mt19937_64 rng(2024);
        const std::vector<Signature> sigs{Signature({2, 3}), Signature({2, 2, 2}), Signature({4, 6}), Signature({3, 5}),
                                          Signature({2, 4, 3})};
        std::size_t good = 0;
        const std::size_t total = 10000;
        for (std::size_t t = 0; t < total; ++t) {
            const auto& sig = sigs[t % sigs.size()];
            auto random_element = [&] {
                std::vector<std::pair<Int, Int>> qp;
                for (Int n : sig.dims()) {
                    std::uniform_int_distribution<Int> d(0, n - 1);
                    qp.emplace_back(d(rng), d(rng));
                }
                std::uniform_int_distribution<Int> ph(0, sig.L() - 1);
                return HeisenbergElement::from_ints(sig, ph(rng), qp);
            };
            auto a = random_element();
            auto b = random_element();
            good += matrix_equal(to_matrix(compose(a, b)), to_matrix(a) * to_matrix(b)) ? 1 : 0;
        }
        o.note << " samples=" << good << "/" << total;
        o.require(good == total, "compose vs matrix product");
    });

    criterion(8, "every group element preserves the pairing", 0.0, [](Outcome& o) {
        for (const auto& sig : {Signature({2}), Signature({3}), Signature({4}), Signature({5}), Signature({6}), Signature({2, 2}),
                                Signature({2, 3}), Signature({2, 4}), Signature({3, 3}), Signature({2, 2, 2})}) {
            auto r = check_pairing_invariance(sig, {}, 11, 10000, 36);
            o.note << " " << sig << ":" << r.details["mode"].get<std::string>().substr(0, 4);
            o.require(r.status == "pass", "pairing at " + sig.to_string());
        }
    });

    criterion(9, "coprime splitting: |(2,3)| = 144 with vanishing off-diagonal blocks", 0.0, [](Outcome& o) {
        const auto group = enumerate_group(Signature({2, 3}));
        o.note << " order=" << group.size();
        o.require(BigInt(std::to_string(group.size())) == sl2_order(6), "order equals sl2_order(6)");
        o.require(group.size() == 144, "order 144");
        bool zero = true;
        for (const auto& h : group)
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c)
                    if (r / 2 != c / 2) zero = zero && h.entry(r, c) == 0;
        o.require(zero, "off-diagonal blocks vanish");
    });

    criterion(10, "random monoid products keep the divisibility structure", 0.0, [](Outcome& o) {
        for (const auto& sig : {Signature({2, 4}), Signature({2, 6}), Signature({4, 6})}) {
            std::mt19937_64 rng(99);
            std::size_t good = 0;
            for (int t = 0; t < 10000; ++t) {
                auto a = random_monoid_element(sig, rng);
                auto b = random_monoid_element(sig, rng);
                good += is_structure_valid(sig, multiply(a, b).entries()) ? 1 : 0;
            }
            o.note << " " << sig << ":" << good;
            o.require(good == 10000, "closure at " + sig.to_string());
        }
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
