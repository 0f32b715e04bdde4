#include "commfact/io.hpp"

#include <fstream>
#include <sstream>

#include "commfact/errors.hpp"

namespace commfact {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(errc::parse, what); }

std::string entry_text(const nlohmann::json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number_integer()) return std::to_string(e.get<long long>());
  bad("matrix entries must be strings or integers");
}

}  // namespace

nlohmann::json ring_to_json(const ring_desc& r) {
  nlohmann::json j;
  switch (r.kind()) {
    case ring_kind::rational:
      j["kind"] = "rational";
      break;
    case ring_kind::prime_field:
      j["kind"] = "prime_field";
      j["p"] = r.base().p;
      break;
    case ring_kind::quaternion:
      j["kind"] = "quaternion_rational";
      break;
    case ring_kind::counterexample: {
      j["kind"] = "counterexample";
      nlohmann::json base;
      if (r.base().is_rational()) {
        base["kind"] = "rational";
      } else {
        base["kind"] = "prime_field";
        base["p"] = r.base().p;
      }
      j["base"] = base;
      break;
    }
  }
  return j;
}

ring_desc ring_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    bad("ring descriptor must be an object with a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "rational") return ring_desc::rational();
  if (kind == "prime_field") {
    if (!j.contains("p") || !j["p"].is_number_integer() ||
        j["p"].get<std::int64_t>() <= 0)
      bad("prime_field ring needs a positive integer 'p'");
    return ring_desc::prime_field(j["p"].get<std::uint64_t>());
  }
  if (kind == "quaternion_rational") return ring_desc::quaternion();
  if (kind == "counterexample") {
    if (!j.contains("base")) bad("counterexample ring needs a 'base' field");
    ring_desc base = ring_from_json(j["base"]);
    if (!base.is_field()) bad("counterexample base must be a field");
    return ring_desc::counterexample(base.base());
  }
  bad("unknown ring kind '" + kind + "'");
}

ring_desc parse_ring_string(const std::string& s) {
  auto field_of = [](const std::string& t) -> ring_desc {
    if (t == "rational" || t == "q") return ring_desc::rational();
    if (t.size() > 4 && t.substr(0, 3) == "gf(" && t.back() == ')') {
      const std::string num = t.substr(3, t.size() - 4);
      try {
        return ring_desc::prime_field(std::stoull(num));
      } catch (const std::exception&) {
        bad("cannot parse field size in '" + t + "'");
      }
    }
    bad("unknown field name '" + t + "' (expected rational or gf(p))");
  };

  if (s == "quaternion" || s == "quaternion_rational")
    return ring_desc::quaternion();
  if (s.rfind("counterexample:", 0) == 0)
    return ring_desc::counterexample(field_of(s.substr(15)).base());
  return field_of(s);
}

nlohmann::json entries_to_json(const matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

matrix entries_from_json(const ring_desc& r, std::size_t n,
                         const nlohmann::json& j) {
  if (!j.is_array() || j.size() != n)
    bad("entries must be an array of " + std::to_string(n) + " rows");
  matrix m(r, n);
  for (std::size_t i = 0; i < n; ++i) {
    const nlohmann::json& row = j[i];
    if (!row.is_array() || row.size() != n)
      bad("row " + std::to_string(i) + " must hold " + std::to_string(n) +
          " entries");
    for (std::size_t k = 0; k < n; ++k)
      m.set(i, k, ring_value::parse(r, entry_text(row[k])));
  }
  return m;
}

nlohmann::json matrix_to_json(const matrix& m) {
  nlohmann::json j;
  j["ring"] = ring_to_json(m.ring());
  j["n"] = m.size();
  j["entries"] = entries_to_json(m);
  return j;
}

matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("n") ||
      !j.contains("entries"))
    bad("matrix object needs 'ring', 'n' and 'entries'");
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() <= 0)
    bad("'n' must be a positive integer");
  const ring_desc r = ring_from_json(j["ring"]);
  return entries_from_json(r, j["n"].get<std::size_t>(), j["entries"]);
}

nlohmann::json certificate_to_json(const commutator_certificate& cert) {
  nlohmann::json j;
  j["theorem"] = cert.theorem;
  j["ring"] = ring_to_json(cert.target.ring());
  j["n"] = cert.target.size();
  j["target"] = entries_to_json(cert.target);
  if (cert.similarity) {
    j["similarity"] = {{"v", entries_to_json(cert.similarity->v)},
                       {"v_inv", entries_to_json(cert.similarity->v_inv)}};
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (const commutator_pair& p : cert.pairs) {
    pairs.push_back({{"x", entries_to_json(p.x)},
                     {"y", entries_to_json(p.y)},
                     {"commutator_invertible", p.commutator_invertible},
                     {"x_invertible", p.x_invertible}});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

commutator_certificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("n") ||
      !j.contains("target") || !j.contains("pairs"))
    bad("certificate needs 'ring', 'n', 'target' and 'pairs'");
  const ring_desc r = ring_from_json(j["ring"]);
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() <= 0)
    bad("'n' must be a positive integer");
  const std::size_t n = j["n"].get<std::size_t>();

  commutator_certificate cert{entries_from_json(r, n, j["target"]),
                              std::nullopt,
                              {},
                              j.value("theorem", std::string{})};
  if (j.contains("similarity")) {
    const nlohmann::json& s = j["similarity"];
    if (!s.is_object() || !s.contains("v") || !s.contains("v_inv"))
      bad("similarity needs 'v' and 'v_inv'");
    cert.similarity = similarity_witness{entries_from_json(r, n, s["v"]),
                                         entries_from_json(r, n, s["v_inv"])};
  }
  if (!j["pairs"].is_array()) bad("'pairs' must be an array");
  for (const nlohmann::json& p : j["pairs"]) {
    if (!p.is_object() || !p.contains("x") || !p.contains("y"))
      bad("each pair needs 'x' and 'y'");
    cert.pairs.push_back({entries_from_json(r, n, p["x"]),
                          entries_from_json(r, n, p["y"]),
                          p.value("commutator_invertible", false),
                          p.value("x_invertible", false)});
  }
  return cert;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) bad("cannot open '" + path + "' for writing");
  out << text;
  if (!out) bad("failed writing '" + path + "'");
}

}  // namespace commfact
