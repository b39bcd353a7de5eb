#include "heisensym/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "heisensym/verify.hpp"

namespace heisensym {

namespace {

struct RunConfig {
    std::string sig_text;
    std::uint64_t budget_candidates = Budget{}.max_candidates;
    double budget_seconds = 0.0;
    std::string format = "json";
    std::string out_path;
    std::uint64_t seed = 1;
    std::string input_path;

    Budget budget() const { return Budget{budget_candidates, budget_seconds}; }
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BudgetExceeded: return kExitBudget;
        case ErrorKind::NotASymmetry:
        case ErrorKind::NotInNormalizer:
        case ErrorKind::LiftNotFound:
        case ErrorKind::NotSL2:
        case ErrorKind::NotHeisenberg: return kExitVerification;
        default: return kExitInput;
    }
}

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

void emit(const Json& doc, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == "table") {
        flatten(doc, "", out);
    } else {
        out << doc.dump(2) << '\n';
    }
}

void write_file(const std::string& path, const Json& doc) {
    std::ofstream f(path);
    if (!f) fail(ErrorKind::InvalidArgument, "cannot write " + path);
    f << doc.dump(2) << '\n';
}

Signature require_sig(const RunConfig& cfg) {
    if (cfg.sig_text.empty()) fail(ErrorKind::InvalidArgument, "--sig is required");
    return Signature::parse(cfg.sig_text);
}

// A matrix file must agree with --sig when both are given.
BlockSymplecticMatrix load_matrix(const RunConfig& cfg) {
    auto h = matrix_from_json(read_json_file(cfg.input_path));
    if (!cfg.sig_text.empty()) require_same(Signature::parse(cfg.sig_text), h.signature());
    return h;
}

int cmd_order(const RunConfig& cfg, std::ostream& out) {
    const Signature sig = require_sig(cfg);
    Json doc{{"signature", signature_to_json(sig)}};
    if (sig.equal_dims()) {
        doc["order"] = bigint_to_json(sp2k_order(sig.dim(0), static_cast<int>(sig.k())));
        doc["method"] = "formula";
    } else if (sig.pairwise_coprime()) {
        BigInt order = 1;
        for (Int n : sig.dims()) order *= sl2_order(n);
        doc["order"] = bigint_to_json(order);
        doc["method"] = "formula";
    } else {
        doc["order"] = group_order_by_enumeration(sig, cfg.budget());
        doc["method"] = "enumeration";
    }
    emit(doc, cfg, out);
    return kExitOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    const auto h = load_matrix(cfg);
    Json doc{{"signature", signature_to_json(h.signature())}, {"structure_valid", true}, {"member", is_symmetry(h)}};
    emit(doc, cfg, out);
    return kExitOk;
}

int cmd_lift(const RunConfig& cfg, std::ostream& out) {
    const auto h = load_matrix(cfg);
    const Signature& sig = h.signature();
    const auto word = lift(sig, h, cfg.budget());
    const auto unitary = realize(sig, word);
    const bool verified = induced_matrix(unitary) == h;
    const bool multi = sig.k() > 1;
    Json doc{{"signature", signature_to_json(sig)},
             {"word", word_to_json(word, multi)},
             {"word_text", word_text(word, multi)},
             {"verified", verified}};
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, unitary_to_json(unitary));
        doc["unitary_file"] = cfg.out_path;
    }
    emit(doc, cfg, out);
    return verified ? kExitOk : kExitVerification;
}

int cmd_induce(const RunConfig& cfg, std::ostream& out) {
    const auto u = unitary_from_json(read_json_file(cfg.input_path));
    if (!cfg.sig_text.empty()) require_same(Signature::parse(cfg.sig_text), u.signature());
    const auto h = induced_matrix(u);
    Json doc{{"signature", signature_to_json(u.signature())}, {"matrix", matrix_to_json(h)}, {"member", is_symmetry(h)}};
    emit(doc, cfg, out);
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Signature sig = require_sig(cfg);
    const auto report = run_verification(sig, cfg.budget(), cfg.seed, &err);
    const Json doc = verify_to_json(report);
    if (!cfg.out_path.empty()) write_file(cfg.out_path, doc);
    emit(doc, cfg, out);
    if (!report.passed()) return report.budget_exceeded() ? kExitBudget : kExitVerification;
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Symmetries of finite multipartite Heisenberg groups"};
    app.require_subcommand(1);
    app.add_option("--sig", cfg.sig_text, "Comma-separated dimensions, e.g. 2,4");
    app.add_option("--budget-candidates", cfg.budget_candidates, "Abort searches past this many candidates")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-seconds", cfg.budget_seconds, "Wall-clock limit per search (0 disables)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", cfg.out_path, "Output file (lift: unitary; verify: report copy)");
    app.add_option("--seed", cfg.seed, "Seed for sampled checks");

    auto* order = app.add_subcommand("order", "Order of the symmetry group");
    auto* check = app.add_subcommand("check", "Membership of a matrix file");
    check->add_option("matrix", cfg.input_path, "Matrix JSON file")->required();
    auto* lift_cmd = app.add_subcommand("lift", "Generator word realizing a group element");
    lift_cmd->add_option("matrix", cfg.input_path, "Matrix JSON file")->required();
    auto* induce = app.add_subcommand("induce", "Induced matrix of a unitary file");
    induce->add_option("unitary", cfg.input_path, "Unitary JSON file")->required();
    auto* verify = app.add_subcommand("verify", "Run every verification check");
    for (auto* sub : {order, check, lift_cmd, induce, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << Json{{"error", "ParseError"}, {"message", e.what()}}.dump() << '\n';
        return kExitInput;
    }

    try {
        if (*order) return cmd_order(cfg, out);
        if (*check) return cmd_check(cfg, out);
        if (*lift_cmd) return cmd_lift(cfg, out);
        if (*induce) return cmd_induce(cfg, out);
        return cmd_verify(cfg, out, err);
    } catch (const Error& e) {
        err << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
        return exit_code_for(e.kind());
    }
}

}  // namespace heisensym
