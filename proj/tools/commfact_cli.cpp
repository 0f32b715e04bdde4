// commfact: batch front-end for exact commutator factorization.
//
// Subcommands
//   factor            matrix file (or directory) -> certificate JSON
//   verify            certificate JSON -> exit 0 (pass) / 1 (refuted)
//   counterexample    exhaustive trace-zero product oracle over gf(2)
//   span              dimension of span{[a,E_ij][a,E_kl]}
//   decompose-fixed   x = sum of [a,p][a,q] with fixed a
//   sample            deterministic random matrix generator
//
// Exit codes: 0 success, 1 refuted claim, 2 usage or hypothesis error.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "commfact/certificate.hpp"
#include "commfact/counterexample.hpp"
#include "commfact/derivation.hpp"
#include "commfact/division_two.hpp"
#include "commfact/elimination.hpp"
#include "commfact/errors.hpp"
#include "commfact/io.hpp"
#include "commfact/matrix.hpp"
#include "commfact/ring.hpp"
#include "commfact/sampling.hpp"
#include "commfact/stable_rank.hpp"
#include "commfact/triangular.hpp"

namespace {

using commfact::commutator_certificate;
using commfact::matrix;

commfact::triangle detect_orientation(const matrix& a) {
  if (a.is_upper_triangular()) return commfact::triangle::upper;
  if (a.is_lower_triangular()) return commfact::triangle::lower;
  commfact::fail(commfact::errc::not_triangular,
                 "input matrix is not triangular");
}

// Dispatch table realizing the factorization hypotheses.  "auto" prefers the
// quaternion route, then the 2x2 division-ring route, then the triangular
// fast path, and splits the remaining division-ring inputs by invertibility.
commutator_certificate route_factor(const matrix& a,
                                    const std::string& strategy) {
  const commfact::ring_desc ring = a.ring();
  const std::size_t n = a.size();
  if (strategy == "two") {
    if (ring.kind() == commfact::ring_kind::quaternion)
      return commfact::two_commutators(a);
    if (n == 2 && ring.is_division_ring())
      return commfact::two_commutators_2x2(a);
    commfact::fail(commfact::errc::unsupported_ring,
                   "two-commutator factorization needs rational quaternion "
                   "entries (or n = 2 over a division ring)");
  }
  if (strategy == "three") return commfact::invertible_three_commutators(a);
  if (strategy == "triangular")
    return commfact::triangular_two_commutators(a, detect_orientation(a));
  if (strategy == "singular") return commfact::singular_two_commutators(a);
  if (strategy != "auto")
    commfact::fail(commfact::errc::precondition,
                   "unknown strategy '" + strategy + "'");
  if (ring.kind() == commfact::ring_kind::quaternion)
    return commfact::two_commutators(a);
  if (n == 2 && ring.is_division_ring())
    return commfact::two_commutators_2x2(a);
  if (n >= 3 && (a.is_upper_triangular() || a.is_lower_triangular()))
    return commfact::triangular_two_commutators(a, detect_orientation(a));
  if (ring.is_division_ring()) {
    if (commfact::is_invertible(a))
      return commfact::invertible_three_commutators(a);
    return commfact::singular_two_commutators(a);
  }
  commfact::fail(commfact::errc::unsupported_ring,
                 "entries are not from a division ring; over " + ring.str() +
                     " only triangular inputs are supported");
}

struct factor_outcome {
  int code = 0;
  std::string line;
};

factor_outcome factor_one(const std::string& in_path,
                          const std::string& strategy,
                          const std::string& out_path, bool to_stdout) {
  factor_outcome r;
  try {
    matrix a = commfact::matrix_from_json(commfact::load_json_file(in_path));
    commutator_certificate cert = route_factor(a, strategy);
    commfact::verify_report rep = commfact::verify_certificate(cert);
    std::string text = commfact::dump_json(commfact::certificate_to_json(cert));
    if (!out_path.empty()) commfact::write_text_file(out_path, text);
    if (to_stdout) std::cout << text;
    if (!rep.ok) {
      r.code = 1;
      r.line = in_path + ": REFUTED: " + rep.reason;
      return r;
    }
    r.line = in_path + ": " + cert.theorem + ", " +
             std::to_string(cert.pairs.size()) + " pair" +
             (cert.pairs.size() == 1 ? "" : "s") + ", verified" +
             (out_path.empty() ? "" : " -> " + out_path);
  } catch (const commfact::error& e) {
    r.code = 2;
    r.line = in_path + ": error: " + e.what();
  }
  return r;
}

int cmd_factor(const std::string& input, const std::string& strategy,
               const std::string& out, unsigned jobs) {
  namespace fs = std::filesystem;
  if (!fs::exists(input))
    commfact::fail(commfact::errc::parse, "no such file: " + input);
  if (!fs::is_directory(input)) {
    bool to_stdout = out.empty();
    factor_outcome r = factor_one(input, strategy, out, to_stdout);
    (to_stdout ? std::cerr : std::cout) << r.line << "\n";
    return r.code;
  }

  // Batch mode: factor every *.json in the directory (certificates from a
  // previous run are skipped), one output file per input.
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(input)) {
    if (!entry.is_regular_file()) continue;
    fs::path p = entry.path();
    if (p.extension() != ".json") continue;
    if (p.filename().string().size() > 10 &&
        p.filename().string().rfind(".cert.json") ==
            p.filename().string().size() - 10)
      continue;
    inputs.push_back(p);
  }
  std::sort(inputs.begin(), inputs.end());
  fs::path out_dir = out.empty() ? fs::path(input) : fs::path(out);
  fs::create_directories(out_dir);

  std::vector<factor_outcome> results(inputs.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = jobs == 0 ? 1u : jobs;
  workers = std::min<unsigned>(workers, std::max<std::size_t>(inputs.size(), 1));
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= inputs.size()) return;
      fs::path dst = out_dir / (inputs[i].stem().string() + ".cert.json");
      results[i] = factor_one(inputs[i].string(), strategy, dst.string(), false);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int code = 0;
  for (const factor_outcome& r : results) {
    std::cout << r.line << "\n";
    code = std::max(code, r.code);
  }
  std::cout << inputs.size() << " input" << (inputs.size() == 1 ? "" : "s")
            << ", exit " << code << "\n";
  return code;
}

int cmd_verify(const std::string& input) {
  commutator_certificate cert =
      commfact::certificate_from_json(commfact::load_json_file(input));
  commfact::verify_report rep = commfact::verify_certificate(cert);
  if (rep.ok) {
    std::cout << "verified: " << cert.theorem << " over "
              << cert.target.ring().str() << ", n=" << cert.target.size()
              << ", " << cert.pairs.size() << " pair"
              << (cert.pairs.size() == 1 ? "" : "s") << "\n";
    return 0;
  }
  std::cout << "REFUTED: " << rep.reason;
  if (rep.first_mismatch)
    std::cout << " (first mismatch at row " << rep.first_mismatch->first
              << ", column " << rep.first_mismatch->second << ")";
  std::cout << "\n";
  return 1;
}

int cmd_counterexample(std::size_t n_max, const std::string& out) {
  commfact::oracle_report rep = commfact::unreachability_oracle(n_max);
  for (const commfact::oracle_row& row : rep.rows)
    std::cout << "n=" << row.n
              << " zero-product tuples=" << row.zero_product_tuples
              << " max dim W=" << row.max_span_dim << "\n";
  if (!out.empty()) {
    nlohmann::json j;
    j["n_max"] = n_max;
    j["bound_holds"] = rep.bound_holds;
    j["rows"] = nlohmann::json::array();
    for (const commfact::oracle_row& row : rep.rows)
      j["rows"].push_back({{"n", row.n},
                           {"zero_product_tuples", row.zero_product_tuples},
                           {"max_span_dim", row.max_span_dim}});
    commfact::write_text_file(out, commfact::dump_json(j));
  }
  if (rep.bound_holds) {
    std::cout << "dim W <= 3 for all tuples; the unit-trace square-zero "
                 "target is not a product of <= "
              << n_max << " trace-zero matrices over gf(2)\n";
    return 0;
  }
  std::cout << "BOUND VIOLATED: some tuple spans dimension 4\n";
  return 1;
}

int cmd_span(const std::string& input, const std::string& out) {
  matrix a = commfact::matrix_from_json(commfact::load_json_file(input));
  commfact::span_report rep = commfact::product_span_dim(a);
  std::size_t n = a.size();
  std::cout << "dimension " << rep.dimension << "/" << n * n
            << ", minimal-polynomial degree " << rep.minpoly_degree << ", "
            << (rep.full ? "full" : "not full") << "\n";
  if (!out.empty()) {
    nlohmann::json j;
    j["dimension"] = rep.dimension;
    j["full"] = rep.full;
    j["minpoly_degree"] = rep.minpoly_degree;
    j["basis"] = nlohmann::json::array();
    for (const matrix& b : rep.basis) j["basis"].push_back(commfact::matrix_to_json(b));
    commfact::write_text_file(out, commfact::dump_json(j));
  }
  return 0;
}

int cmd_decompose_fixed(const std::string& a_path, const std::string& x_path,
                        const std::string& out) {
  matrix a = commfact::matrix_from_json(commfact::load_json_file(a_path));
  matrix x = commfact::matrix_from_json(commfact::load_json_file(x_path));
  std::vector<std::pair<matrix, matrix>> pairs = commfact::tder_decompose(a, x);
  matrix sum(a.ring(), a.size());
  for (const auto& pq : pairs)
    sum = sum + commfact::commutator(a, pq.first) *
                    commfact::commutator(a, pq.second);
  if (!(sum == x)) {
    std::cout << "REFUTED: summed products differ from the target\n";
    return 1;
  }
  nlohmann::json j;
  j["a"] = commfact::matrix_to_json(a);
  j["x"] = commfact::matrix_to_json(x);
  j["pairs"] = nlohmann::json::array();
  for (const auto& pq : pairs)
    j["pairs"].push_back({{"p", commfact::matrix_to_json(pq.first)},
                          {"q", commfact::matrix_to_json(pq.second)}});
  std::string text = commfact::dump_json(j);
  if (out.empty())
    std::cout << text;
  else
    commfact::write_text_file(out, text);
  std::cerr << "decomposed into " << pairs.size() << " pair"
            << (pairs.size() == 1 ? "" : "s") << "; verified\n";
  return 0;
}

int cmd_sample(const std::string& ring_str, std::size_t n, std::uint64_t seed,
               const std::string& kind, const std::string& out) {
  commfact::ring_desc ring = commfact::parse_ring_string(ring_str);
  commfact::rng g(seed);
  matrix m(ring, std::max<std::size_t>(n, 1));
  if (kind == "random")
    m = commfact::random_matrix(g, ring, n);
  else if (kind == "invertible")
    m = commfact::random_invertible_matrix(g, ring, n);
  else if (kind == "singular")
    m = commfact::random_singular_matrix(g, ring, n);
  else if (kind == "triangular")
    m = commfact::random_triangular_matrix(g, ring, n,
                                           commfact::triangle::upper);
  else if (kind == "zero-diag")
    m = commfact::random_zero_diag_matrix(g, ring, n);
  else if (kind == "trace-zero-triangular")
    m = commfact::random_trace_zero_triangular(g, ring, n,
                                               commfact::triangle::upper);
  else
    commfact::fail(commfact::errc::precondition,
                   "unknown sample kind '" + kind + "'");
  std::string text = commfact::dump_json(commfact::matrix_to_json(m));
  if (out.empty())
    std::cout << text;
  else
    commfact::write_text_file(out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact commutator factorization over q, gf(p), rational "
               "quaternions, and a nonunital-square-zero unitization"};
  app.require_subcommand(1);

  std::string in_path, out_path, strategy = "auto";
  unsigned jobs = 1;
  auto* factor = app.add_subcommand("factor",
                                    "factor a matrix into commutator products");
  factor->add_option("input", in_path, "matrix JSON file, or a directory of them")
      ->required();
  factor->add_option("--strategy", strategy,
                     "auto|two|three|triangular|singular")
      ->check(CLI::IsMember({"auto", "two", "three", "triangular", "singular"}));
  factor->add_option("--out", out_path,
                     "certificate output file (directory in batch mode)");
  factor->add_option("--jobs", jobs, "worker threads for directory inputs");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "check a certificate by exact "
                                              "multiplication only");
  verify->add_option("input", verify_path, "certificate JSON file")->required();

  std::size_t n_max = 5;
  std::string ce_out;
  auto* ce = app.add_subcommand("counterexample",
                                "exhaustive trace-zero-product oracle, gf(2)");
  ce->add_option("--n-max", n_max, "maximum product length (1..6)");
  ce->add_option("--out", ce_out, "JSON report output file");

  std::string span_in, span_out;
  auto* span = app.add_subcommand("span",
                                  "dimension of span{[a,E_ij][a,E_kl]}");
  span->add_option("input", span_in, "matrix JSON file")->required();
  span->add_option("--out", span_out, "JSON report output file");

  std::string dfa, dfx, df_out;
  auto* df = app.add_subcommand("decompose-fixed",
                                "write x as a sum of [a,p][a,q] with fixed a");
  df->add_option("--a", dfa, "fixed matrix JSON file")->required();
  df->add_option("--x", dfx, "target matrix JSON file")->required();
  df->add_option("--out", df_out, "decomposition output file");

  std::string s_ring = "rational", s_kind = "random", s_out;
  std::size_t s_n = 3;
  std::uint64_t s_seed = 0;
  auto* sample = app.add_subcommand("sample",
                                    "deterministic random matrix generator");
  sample->add_option("--ring", s_ring,
                     "rational | gf(p) | quaternion | counterexample:<base>");
  sample->add_option("--n", s_n, "matrix size")->check(CLI::PositiveNumber);
  sample->add_option("--seed", s_seed, "RNG seed");
  sample->add_option("--kind", s_kind,
                     "random|invertible|singular|triangular|zero-diag|"
                     "trace-zero-triangular");
  sample->add_option("--out", s_out, "matrix output file");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(factor))
      return cmd_factor(in_path, strategy, out_path, jobs);
    if (app.got_subcommand(verify)) return cmd_verify(verify_path);
    if (app.got_subcommand(ce)) return cmd_counterexample(n_max, ce_out);
    if (app.got_subcommand(span)) return cmd_span(span_in, span_out);
    if (app.got_subcommand(df)) return cmd_decompose_fixed(dfa, dfx, df_out);
    if (app.got_subcommand(sample))
      return cmd_sample(s_ring, s_n, s_seed, s_kind, s_out);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const commfact::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
