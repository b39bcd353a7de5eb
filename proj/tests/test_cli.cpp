#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "heisensym/cli.hpp"
#include "heisensym/serialize.hpp"

using namespace heisensym;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "heisensym");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / ("heisensym_test_" + name);
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST_CASE("order") {
    auto r = run({"order", "--sig", "2"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["order"] == 6);
    CHECK(j["method"] == "formula");
    CHECK(Json::parse(run({"order", "--sig", "2,2"}).out)["order"] == 720);
    auto c = Json::parse(run({"--sig", "2,3", "order"}).out);
    CHECK(c["order"] == 144);
    CHECK(c["method"] == "formula");
    auto e = Json::parse(run({"order", "--sig", "2,4"}).out);
    CHECK(e["method"] == "enumeration");
    CHECK(e["order"] == 4608);
}

TEST_CASE("order output is byte-stable") {
    CHECK(run({"order", "--sig", "2,4"}).out == run({"order", "--sig", "2,4"}).out);
    CHECK(run({"verify", "--sig", "2,2", "--seed", "7"}).out == run({"verify", "--sig", "2,2", "--seed", "7"}).out);
}

TEST_CASE("exit codes") {
    CHECK(run({"order", "--sig", "1"}).code == kExitInput);
    CHECK(run({"order", "--sig", "2,x"}).code == kExitInput);
    CHECK(run({"order"}).code == kExitInput);
    CHECK(run({"bogus"}).code == kExitInput);
    CHECK(run({"order", "--sig", "4,6", "--budget-candidates", "10"}).code == kExitBudget);
    CHECK(run({"check", "/nonexistent/file.json"}).code == kExitInput);
}

TEST_CASE("check") {
    auto id = temp_file("id22.json", matrix_to_json(BlockSymplecticMatrix::identity(Signature({2, 2}))).dump());
    auto r = run({"check", id});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["member"] == true);
    auto j = temp_file("j3.json", matrix_to_json(standard_J(Signature({3, 3}))).dump());
    CHECK(Json::parse(run({"check", j}).out)["member"] == true);
    auto nonmember = temp_file("nm.json", R"({"signature":[2],"blocks":[[[[1,1],[1,1]]]]})");
    CHECK(Json::parse(run({"check", nonmember}).out)["member"] == false);
    auto odd = temp_file("odd.json", R"({"signature":[2,4],"blocks":[[[[1,0],[0,1]],[[0,0],[0,0]]],[[[1,0],[0,0]],[[1,0],[0,1]]]]})");
    auto bad = run({"check", odd});
    CHECK(bad.code == kExitInput);
    CHECK(Json::parse(bad.err)["error"] == "StructureViolation");
    auto broken = temp_file("broken.json", "{\"signature\": [2], ");
    auto pr = run({"check", broken});
    CHECK(pr.code == kExitInput);
    CHECK(Json::parse(pr.err)["error"] == "ParseError");
    CHECK(run({"check", id, "--sig", "2,3"}).code == kExitInput);
}

TEST_CASE("lift") {
    auto id = temp_file("id2.json", matrix_to_json(BlockSymplecticMatrix::identity(Signature({2}))).dump());
    auto r = Json::parse(run({"lift", id}).out);
    CHECK(r["word"].empty());
    CHECK(r["verified"] == true);

    auto j2 = temp_file("jj2.json", matrix_to_json(standard_J(Signature({2}))).dump());
    auto unitary_path = (std::filesystem::temp_directory_path() / "heisensym_test_unitary.json").string();
    auto lr = run({"lift", j2, "--out", unitary_path});
    CHECK(lr.code == 0);
    auto l = Json::parse(lr.out);
    CHECK(l["word_text"] == "F(2)");
    CHECK(l["word"] == Json::parse(R"([{"gen":"F","n":2}])"));
    auto induced = Json::parse(run({"induce", unitary_path}).out);
    CHECK(induced["matrix"] == matrix_to_json(standard_J(Signature({2}))));

    auto r12 = temp_file("r12.json", matrix_to_json(induced_matrix(r_matrix(Signature({2, 2}), 1, 2))).dump());
    CHECK(Json::parse(run({"lift", r12}).out)["word_text"] == "R(1,2)");

    auto nonmember = temp_file("nm2.json", R"({"signature":[2],"blocks":[[[[1,1],[1,1]]]]})");
    CHECK(run({"lift", nonmember}).code == kExitVerification);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--sig", "2,2"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["order"] == 720);
    CHECK(j["checks"]["symplectic_formula"]["status"] == "pass");
    CHECK(j["checks"]["generation"]["status"] == "pass");
    CHECK(j["checks"]["automorphism_count"]["status"] == "pass");
    CHECK_FALSE(r.err.empty());

    auto u = Json::parse(run({"verify", "--sig", "2,3"}).out);
    CHECK(u["order"] == 144);
    CHECK(u["checks"]["symplectic_formula"]["status"] == "n/a (unequal dims)");
    CHECK(u["checks"]["automorphism_count"]["status"] == "pass");
    CHECK(u["checks"]["generation"]["status"] == "pass");

    auto s = Json::parse(run({"verify", "--sig", "2"}).out);
    CHECK(s["order"] == 6);
    CHECK(s["checks"]["determinant_condition"]["status"] == "pass");
    CHECK(s["checks"]["lift_section"]["status"] == "pass");

    auto tight = run({"verify", "--sig", "3,3", "--budget-candidates", "50"});
    CHECK(tight.code == kExitBudget);
    CHECK(Json::parse(tight.out)["checks"]["automorphism_count"]["status"] == "budget exceeded");
}

TEST_CASE("table format") {
    auto r = run({"order", "--sig", "2", "--format", "table"});
    CHECK(r.out.find("order: 6") != std::string::npos);
    CHECK(run({"order", "--sig", "2", "--format", "xml"}).code == kExitInput);
}
