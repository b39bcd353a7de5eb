#include "heisensym/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace heisensym {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { fail(ErrorKind::ParseError, msg); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
    return j.get<Int>();
}

BigInt as_bigint(const Json& j) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<Int>()));
    if (j.is_string()) {
        BigInt v;
        if (v.set_str(j.get<std::string>(), 10) != 0) parse_fail("bad integer string \"" + j.get<std::string>() + "\"");
        return v;
    }
    parse_fail("coefficient must be an integer or decimal string");
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Json signature_to_json(const Signature& sig) { return Json(sig.dims()); }

Signature signature_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) parse_fail("signature must be a non-empty array");
    std::vector<Int> dims;
    for (const auto& d : j) dims.push_back(as_int(d, "dimension"));
    try {
        return Signature(dims);
    } catch (const Error& e) {
        parse_fail(e.what());
    }
}

Json matrix_to_json(const BlockSymplecticMatrix& h) {
    const auto& sig = h.signature();
    Json blocks = Json::array();
    for (std::size_t i = 0; i < sig.k(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < sig.k(); ++j) {
            auto b = h.block(i, j);
            row.push_back(Json::array({Json::array({b[0][0], b[0][1]}), Json::array({b[1][0], b[1][1]})}));
        }
        blocks.push_back(row);
    }
    return Json{{"signature", signature_to_json(sig)}, {"blocks", blocks}};
}

BlockSymplecticMatrix matrix_from_json(const Json& j) {
    const Signature sig = signature_from_json(field(j, "signature"));
    const Json& blocks = field(j, "blocks");
    const std::size_t k = sig.k(), d = 2 * k;
    if (!blocks.is_array() || blocks.size() != k) parse_fail("blocks must be a " + std::to_string(k) + "x" + std::to_string(k) + " grid");
    std::vector<Int> m(d * d);
    for (std::size_t i = 0; i < k; ++i) {
        if (!blocks[i].is_array() || blocks[i].size() != k) parse_fail("block row " + std::to_string(i) + " has wrong length");
        for (std::size_t jj = 0; jj < k; ++jj) {
            const Json& b = blocks[i][jj];
            if (!b.is_array() || b.size() != 2) parse_fail("block must be 2x2");
            for (std::size_t r = 0; r < 2; ++r) {
                if (!b[r].is_array() || b[r].size() != 2) parse_fail("block must be 2x2");
                for (std::size_t c = 0; c < 2; ++c) m[(2 * i + r) * d + 2 * jj + c] = as_int(b[r][c], "entry");
            }
        }
    }
    return BlockSymplecticMatrix::from_entries(sig, std::move(m));
}

Json unitary_to_json(const NormalizerUnitary& u) {
    const auto& x = u.matrix();
    Json rows = Json::array();
    for (std::size_t r = 0; r < x.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < x.dim(); ++c) {
            Json coeffs = Json::array();
            const CycloElement e = x.entry(r, c);
            for (const auto& v : e.coeffs()) coeffs.push_back(bigint_to_json(v));
            row.push_back(coeffs);
        }
        rows.push_back(row);
    }
    return Json{{"signature", signature_to_json(u.signature())}, {"order_M", x.order()}, {"rows", rows}};
}

NormalizerUnitary unitary_from_json(const Json& j) {
    const Signature sig = signature_from_json(field(j, "signature"));
    const Int order = as_int(field(j, "order_M"), "order_M");
    if (order < 1) parse_fail("order_M must be positive");
    if (sig.M() % order != 0) {
        fail(ErrorKind::OrderMismatch, "order_M " + std::to_string(order) + " does not divide " + std::to_string(sig.M()));
    }
    const Json& rows = field(j, "rows");
    const auto n = static_cast<std::size_t>(sig.N());
    if (!rows.is_array() || rows.size() != n) fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(n) + " rows");
    std::vector<CycloElement> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) fail(ErrorKind::DimensionMismatch, "row length must be " + std::to_string(n));
        for (const auto& cell : row) {
            if (!cell.is_array()) parse_fail("entry must be a coefficient array");
            std::vector<BigInt> coeffs;
            for (const auto& c : cell) coeffs.push_back(as_bigint(c));
            entries.push_back(CycloElement::from_coeffs(order, std::move(coeffs)));
        }
    }
    auto m = CycloMatrix::dense(n, order, std::move(entries)).normalized().lift_to(sig.M());
    return NormalizerUnitary(sig, std::move(m), std::nullopt);
}

Json word_to_json(const GeneratorWord& w, bool with_factor) {
    Json out = Json::array();
    for (const auto& g : w) {
        Json letter;
        switch (g.kind) {
            case GeneratorKind::Fourier: letter = {{"gen", "F"}, {"n", g.n}}; break;
            case GeneratorKind::Gauss: letter = {{"gen", "G"}, {"n", g.n}}; break;
            case GeneratorKind::Multiplier: letter = {{"gen", "M"}, {"n", g.n}, {"a", g.a}}; break;
            case GeneratorKind::Coupling: letter = {{"gen", "R"}, {"i", g.i}, {"j", g.j}}; break;
        }
        if (with_factor && g.kind != GeneratorKind::Coupling) letter["factor"] = g.factor;
        out.push_back(letter);
    }
    return out;
}

GeneratorWord word_from_json(const Json& j) {
    if (!j.is_array()) parse_fail("word must be an array");
    GeneratorWord w;
    for (const auto& letter : j) {
        const Json& gen = field(letter, "gen");
        if (!gen.is_string()) parse_fail("gen must be a string");
        const std::string name = gen.get<std::string>();
        auto factor = [&]() -> std::size_t {
            if (!letter.contains("factor")) return 1;
            Int f = as_int(letter.at("factor"), "factor");
            if (f < 1) parse_fail("factor must be positive");
            return static_cast<std::size_t>(f);
        };
        if (name == "F") {
            w.push_back(GeneratorRef::fourier(as_int(field(letter, "n"), "n"), factor()));
        } else if (name == "G") {
            w.push_back(GeneratorRef::gauss(as_int(field(letter, "n"), "n"), factor()));
        } else if (name == "M") {
            w.push_back(GeneratorRef::multiplier(as_int(field(letter, "n"), "n"), as_int(field(letter, "a"), "a"), factor()));
        } else if (name == "R") {
            Int i = as_int(field(letter, "i"), "i"), jj = as_int(field(letter, "j"), "j");
            if (i < 1 || jj < 1) parse_fail("coupling indices must be positive");
            w.push_back(GeneratorRef::coupling(static_cast<std::size_t>(i), static_cast<std::size_t>(jj)));
        } else {
            parse_fail("unknown generator \"" + name + "\"");
        }
    }
    return w;
}

std::string word_text(const GeneratorWord& w, bool with_factor) {
    std::string out;
    for (const auto& g : w) {
        if (!out.empty()) out += ' ';
        out += g.text(with_factor);
    }
    return out;
}

Json cross_check_to_json(const CrossCheckReport& r) {
    Json out{{"signature", signature_to_json(r.signature)},
             {"oracle_count", r.oracle_count},
             {"group_count", r.group_count},
             {"counts_agree", r.counts_agree},
             {"bijection_verified", r.bijection_verified},
             {"passed", r.passed()}};
    if (r.formula_count) {
        out["formula_count"] = bigint_to_json(*r.formula_count);
        out["formula_agrees"] = r.formula_agrees;
    }
    return out;
}

Json generation_to_json(const GenerationReport& r) {
    const bool multi = r.signature.k() > 1;
    Json letters = Json::array();
    for (const auto& l : r.letters) {
        letters.push_back(Json{{"letter", l.ref.text(multi)}, {"induced", matrix_to_json(l.induced)["blocks"]}, {"trivial", l.trivial}});
    }
    return Json{{"signature", signature_to_json(r.signature)},
                {"group_order", r.group_order},
                {"generated_order", r.generated_order},
                {"full", r.full},
                {"letters", letters}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
        parse_fail(path + ": " + e.what());
    }
}

}  // namespace heisensym
