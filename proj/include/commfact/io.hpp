#pragma once

#include <string>

#include "json.hpp"

#include "commfact/certificate.hpp"
#include "commfact/matrix.hpp"

namespace commfact {

// Wire formats (all scalars are exact strings):
//   ring:        {"kind": "rational"} | {"kind": "prime_field", "p": 7}
//                | {"kind": "quaternion_rational"}
//                | {"kind": "counterexample", "base": <ring>}
//   matrix:      {"ring": <ring>, "n": 3, "entries": [["5", "-1/3", ...], ...]}
//   certificate: {"theorem", "ring", "n", "target", "similarity"?, "pairs"}
// Entries may be written as JSON integers on input; output is always strings.

nlohmann::json ring_to_json(const ring_desc& r);
ring_desc ring_from_json(const nlohmann::json& j);

// Compact command-line ring names: "rational", "gf(7)", "quaternion",
// "counterexample:rational", "counterexample:gf(2)".
ring_desc parse_ring_string(const std::string& s);

nlohmann::json entries_to_json(const matrix& m);
matrix entries_from_json(const ring_desc& r, std::size_t n,
                         const nlohmann::json& j);

nlohmann::json matrix_to_json(const matrix& m);
matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const commutator_certificate& cert);
commutator_certificate certificate_from_json(const nlohmann::json& j);

// Canonical dump: sorted keys, two-space indent, trailing newline, so equal
// inputs produce byte-identical files.
std::string dump_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace commfact
