#pragma once

#include <string>

#include "json.hpp"

#include "heisensym/clifford.hpp"
#include "heisensym/oracle.hpp"

namespace heisensym {

// std::map-backed objects keep keys sorted, so dumps are byte-stable.
using Json = nlohmann::json;

/// Integer if it fits in 64 bits, decimal string otherwise.
Json bigint_to_json(const BigInt& v);

Json signature_to_json(const Signature& sig);
// Throws ParseError.
Signature signature_from_json(const Json& j);

/// {"signature": [...], "blocks": k×k grid of 2×2 scaled entries}.
Json matrix_to_json(const BlockSymplecticMatrix& h);
// Throws ParseError on malformed input, StructureViolation on out-of-range
// or non-divisible entries.
BlockSymplecticMatrix matrix_from_json(const Json& j);

/// {"signature": [...], "order_M": M, "rows": N×N coefficient vectors}.
Json unitary_to_json(const NormalizerUnitary& u);
// Matrices stored at an order dividing 2L are lifted. Throws ParseError,
// OrderMismatch, DimensionMismatch.
NormalizerUnitary unitary_from_json(const Json& j);

/// [{"gen": "F", "n": 2}, {"gen": "M", "n": 5, "a": 2}, {"gen": "R", "i": 1, "j": 2}];
/// local letters of multipartite words also carry "factor".
Json word_to_json(const GeneratorWord& w, bool with_factor);
GeneratorWord word_from_json(const Json& j);
std::string word_text(const GeneratorWord& w, bool with_factor);

Json cross_check_to_json(const CrossCheckReport& r);
Json generation_to_json(const GenerationReport& r);

// Reads a whole file and parses it. Throws ParseError.
Json read_json_file(const std::string& path);

}  // namespace heisensym
