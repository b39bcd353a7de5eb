#include "heisensym/verify.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <set>

namespace heisensym {

namespace {

CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult out{name, "pass", Json::object(), 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        out.status = "budget exceeded";
        out.details["message"] = e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

void verdict(CheckResult& r, bool ok) { r.status = ok ? "pass" : "fail"; }

}  // namespace

CheckResult check_determinant_condition(const Signature& sig, const Budget& budget) {
    return timed("determinant_condition", [&](CheckResult& r) {
        if (sig.k() != 1) {
            r.status = "n/a (multipartite)";
            return;
        }
        const Int n = sig.dim(0);
        std::set<std::vector<Int>> naive;
        for (Int a = 0; a < n; ++a)
            for (Int b = 0; b < n; ++b)
                for (Int c = 0; c < n; ++c)
                    for (Int d = 0; d < n; ++d)
                        if (mod_floor(a * d - b * c, n) == 1 % n) naive.insert({a, b, c, d});
        std::set<std::vector<Int>> group;
        for_each_symmetry(sig, budget, [&](const BlockSymplecticMatrix& h) { group.insert(h.entries()); });
        r.details = {{"group_count", group.size()}, {"determinant_one_count", naive.size()}};
        verdict(r, group == naive);
    });
}

CheckResult check_lift_section(const Signature& sig, const Budget& budget) {
    return timed("lift_section", [&](CheckResult& r) {
        if (sig.k() != 1) {
            r.status = "n/a (multipartite)";
            return;
        }
        const Int n = sig.dim(0);
        std::uint64_t total = 0, good = 0;
        for_each_symmetry(sig, budget, [&](const BlockSymplecticMatrix& h) {
            ++total;
            if (induced_matrix(realize(sig, lift_sl2(n, h))) == h) ++good;
        });
        r.details = {{"elements", total}, {"round_trips", good}};
        verdict(r, total == good);
    });
}

CheckResult check_automorphism_count(const Signature& sig, const Budget& budget) {
    return timed("automorphism_count", [&](CheckResult& r) {
        auto report = cross_check(sig, budget);
        r.details = cross_check_to_json(report);
        r.details.erase("signature");
        verdict(r, report.passed());
    });
}

CheckResult check_generation(const Signature& sig, const Budget& budget) {
    return timed("generation", [&](CheckResult& r) {
        auto report = verify_generation(sig, budget);
        r.details = {{"group_order", report.group_order}, {"generated_order", report.generated_order}};
        Json trivial = Json::array();
        for (const auto& l : report.letters)
            if (l.trivial) trivial.push_back(l.ref.text(sig.k() > 1));
        r.details["trivial_letters"] = trivial;
        verdict(r, report.full);
    });
}

CheckResult check_symplectic_formula(const Signature& sig, const Budget& budget) {
    return timed("symplectic_formula", [&](CheckResult& r) {
        if (!sig.equal_dims()) {
            r.status = "n/a (unequal dims)";
            return;
        }
        std::uint64_t count = 0;
        bool plain = true;
        for_each_symmetry(sig, budget, [&](const BlockSymplecticMatrix& h) {
            ++count;
            plain = plain && is_plain_symplectic(h);
        });
        const BigInt formula = sp2k_order(sig.dim(0), static_cast<int>(sig.k()));
        r.details = {{"group_count", count}, {"formula", bigint_to_json(formula)}, {"plain_condition_holds", plain}};
        verdict(r, plain && formula == BigInt(std::to_string(count)));
    });
}

CheckResult check_pairing_invariance(const Signature& sig, const Budget& budget, std::uint64_t seed,
                                     std::uint64_t samples, std::uint64_t exhaustive_points) {
    return timed("pairing_invariance", [&](CheckResult& r) {
        std::uint64_t points = 1;
        for (Int n : sig.dims()) points = static_cast<std::uint64_t>(checked_mul(static_cast<Int>(points), checked_mul(n, n)));
        bool ok = true;
        std::uint64_t checked = 0;
        if (points <= exhaustive_points) {
            const auto all = enumerate_points(sig);
            for_each_symmetry(sig, budget, [&](const BlockSymplecticMatrix& h) {
                std::vector<PhasePoint> image;
                all.for_each([&](const PhasePoint& u) { image.push_back(apply(h, u)); });
                for (std::uint64_t a = 0; a < all.size(); ++a)
                    for (std::uint64_t b = 0; b < all.size(); ++b) {
                        ok = ok && pairing(image[a], image[b]) == pairing(all.at(a), all.at(b));
                        ++checked;
                    }
            });
            r.details["mode"] = "exhaustive";
        } else {
            // Reservoir-sample group elements in one streaming pass.
            std::mt19937_64 rng(seed);
            std::vector<BlockSymplecticMatrix> pool;
            std::uint64_t seen = 0;
            for_each_symmetry(sig, budget, [&](const BlockSymplecticMatrix& h) {
                ++seen;
                if (pool.size() < samples) {
                    pool.push_back(h);
                } else {
                    std::uniform_int_distribution<std::uint64_t> d(0, seen - 1);
                    if (auto slot = d(rng); slot < samples) pool[slot] = h;
                }
            });
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            std::uniform_int_distribution<std::uint64_t> point(0, points - 1);
            const auto all = PointEnumeration(sig, points);
            for (std::uint64_t t = 0; t < samples; ++t) {
                const auto& h = pool[pick(rng)];
                const auto u = all.at(point(rng));
                const auto v = all.at(point(rng));
                ok = ok && pairing(apply(h, u), apply(h, v)) == pairing(u, v);
                ++checked;
            }
            r.details["mode"] = "sampled";
            r.details["seed"] = seed;
        }
        r.details["checked"] = checked;
        verdict(r, ok);
    });
}

CheckResult check_coupling_normalization(const Signature& sig) {
    return timed("coupling_normalization", [&](CheckResult& r) {
        if (sig.k() < 2) {
            r.status = "n/a (single system)";
            return;
        }
        bool ok = true;
        Json pairs = Json::array();
        for (std::size_t i = 1; i <= sig.k(); ++i) {
            for (std::size_t j = i + 1; j <= sig.k(); ++j) {
                const auto u = r_matrix(sig, i, j).matrix();
                const auto u_dag = u.adjoint();
                bool this_ok = true;
                for (std::size_t t = 1; t <= 2 * sig.k(); ++t) {
                    try {
                        match_projective(sig, u * to_matrix(standard_generator(sig, t)) * u_dag);
                    } catch (const Error&) {
                        this_ok = false;
                    }
                }
                pairs.push_back(Json{{"i", i}, {"j", j}, {"normalizes", this_ok}});
                ok = ok && this_ok;
            }
        }
        r.details["pairs"] = pairs;
        verdict(r, ok);
    });
}

CheckResult check_commutation(const Signature& sig, std::uint64_t seed, std::uint64_t samples) {
    return timed("commutation", [&](CheckResult& r) {
        std::mt19937_64 rng(seed);
        auto random_element = [&] {
            std::vector<std::pair<Int, Int>> qp;
            for (Int n : sig.dims()) {
                std::uniform_int_distribution<Int> d(0, n - 1);
                qp.emplace_back(d(rng), d(rng));
            }
            std::uniform_int_distribution<Int> ph(0, sig.L() - 1);
            return HeisenbergElement::from_ints(sig, ph(rng), qp);
        };
        bool ok = true;
        for (std::size_t f = 0; f < sig.k(); ++f) {
            const Signature one({sig.dim(f)});
            const auto p = to_matrix(standard_generator(one, 1));
            const auto q = to_matrix(standard_generator(one, 2));
            ok = ok && matrix_equal(p * q, (q * p).scaled(root_of_unity(one.M(), 2)));
        }
        for (std::uint64_t t = 0; t < samples && ok; ++t) {
            const auto a = random_element();
            const auto b = random_element();
            ok = matrix_equal(to_matrix(compose(a, b)), to_matrix(a) * to_matrix(b));
        }
        r.details = {{"samples", samples}, {"seed", seed}};
        verdict(r, ok);
    });
}

bool VerifyReport::passed() const {
    for (const auto& c : checks)
        if (!c.ok()) return false;
    return true;
}

bool VerifyReport::budget_exceeded() const {
    for (const auto& c : checks)
        if (c.status == "budget exceeded") return true;
    return false;
}

VerifyReport run_verification(const Signature& sig, const Budget& budget, std::uint64_t seed, std::ostream* progress) {
    VerifyReport report{sig, {}};
    auto record = [&](CheckResult c) {
        if (progress) *progress << "[verify " << sig << "] " << c.name << ": " << c.status << " (" << c.seconds << " s)" << std::endl;
        report.checks.push_back(std::move(c));
    };
    record(check_determinant_condition(sig, budget));
    record(check_lift_section(sig, budget));
    record(check_automorphism_count(sig, budget));
    record(check_generation(sig, budget));
    record(check_symplectic_formula(sig, budget));
    record(check_pairing_invariance(sig, budget, seed));
    record(check_coupling_normalization(sig));
    record(check_commutation(sig, seed));
    return report;
}

Json check_to_json(const CheckResult& c) {
    Json out = c.details;
    out["status"] = c.status;
    return out;
}

Json verify_to_json(const VerifyReport& r) {
    Json checks = Json::object();
    for (const auto& c : r.checks) checks[c.name] = check_to_json(c);
    Json out{{"signature", signature_to_json(r.signature)}, {"checks", checks}, {"passed", r.passed()}};
    for (const auto& c : r.checks) {
        if (c.name == "automorphism_count" && c.details.contains("group_count")) out["order"] = c.details["group_count"];
    }
    return out;
}

}  // namespace heisensym
