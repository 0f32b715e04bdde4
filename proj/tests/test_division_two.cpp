#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "commfact/certificate.hpp"
#include "commfact/division_two.hpp"
#include "commfact/elimination.hpp"
#include "commfact/errors.hpp"
#include "commfact/matrix.hpp"
#include "commfact/sampling.hpp"
#include "test_support.hpp"

using namespace commfact;

namespace {

void check_two_pair_flags(const commutator_certificate& cert) {
  REQUIRE(cert.pairs.size() == 2);
  REQUIRE(cert.pairs[0].commutator_invertible);
  REQUIRE(cert.pairs[0].x_invertible);
  REQUIRE(!cert.pairs[1].commutator_invertible);
  REQUIRE(cert.pairs[1].x_invertible);
}

}  // namespace

TEST_CASE("2x2 route: pinned rational example") {
  ring_desc q = ring_desc::rational();
  matrix a = testsupport::from_rows(q, {{"1", "2"}, {"3", "4"}});
  commutator_certificate cert = two_commutators_2x2(a);
  REQUIRE(cert.theorem == "Prop 4.2");
  check_two_pair_flags(cert);
  REQUIRE(verify_certificate(cert).ok);
  matrix m1 = commutator(cert.pairs[0].x, cert.pairs[0].y);
  matrix m2 = commutator(cert.pairs[1].x, cert.pairs[1].y);
  CHECK(m1 == testsupport::from_rows(q, {{"0", "-2/3"}, {"1", "0"}}));
  CHECK(m2 == testsupport::from_rows(q, {{"3", "4"}, {"-3/2", "-3"}}));
  CHECK(m1 * m2 == a);
}

TEST_CASE("2x2 route: every case over small fields and the quaternions") {
  // gf(2) and gf(3) exhaustively, larger rings at random; no field-size
  // hypothesis applies at n = 2
  for (std::uint64_t p : {2ull, 3ull}) {
    ring_desc f = ring_desc::prime_field(p);
    std::vector<ring_value> elems;
    for (std::uint64_t v = 0; v < p; ++v)
      elems.push_back(ring_value::from_int(f, static_cast<long>(v)));
    for (const ring_value& a00 : elems)
      for (const ring_value& a01 : elems)
        for (const ring_value& a10 : elems)
          for (const ring_value& a11 : elems) {
            matrix a(f, 2);
            a.set(0, 0, a00);
            a.set(0, 1, a01);
            a.set(1, 0, a10);
            a.set(1, 1, a11);
            commutator_certificate cert = two_commutators_2x2(a);
            check_two_pair_flags(cert);
            REQUIRE(verify_certificate(cert).ok);
          }
  }
  for (const ring_desc& r : testsupport::division_rings()) {
    rng g(0x501);
    for (int t = 0; t < 500; ++t) {
      matrix a = random_matrix(g, r, 2);
      commutator_certificate cert = two_commutators_2x2(a);
      check_two_pair_flags(cert);
      REQUIRE(verify_certificate(cert).ok);
    }
  }
}

TEST_CASE("sl2 realization cases") {
  ring_desc h = ring_desc::quaternion();
  ring_value qi = ring_value::quaternion_value(0, 1, 0, 0);
  ring_value qj = ring_value::quaternion_value(0, 0, 1, 0);
  ring_value zero = ring_value::zero(h);
  ring_value one = ring_value::one(h);
  // (r, s, t) parameterizes the trace-zero target [[r, s], [t, -r]]
  std::vector<std::array<ring_value, 3>> cases = {
      {zero, zero, zero}, {qi, zero, zero},    {qi, qj, zero},
      {zero, qj, zero},   {zero, zero, qj},    {qi, qj, qj * qi},
      {one, one, one},    {zero, qi + qj, one}};
  for (const auto& c : cases) {
    auto [x, y] = sl2_commutator(c[0], c[1], c[2]);
    matrix m(h, 2);
    m.set(0, 0, c[0]);
    m.set(0, 1, c[1]);
    m.set(1, 0, c[2]);
    m.set(1, 1, -c[0]);
    REQUIRE(commutator(x, y) == m);
  }
}

TEST_CASE("identity factorization across sizes") {
  for (const ring_desc& r : {ring_desc::rational(), ring_desc::prime_field(7),
                             ring_desc::quaternion()}) {
    for (std::size_t n = 2; n <= 7; ++n) {
      commutator_certificate cert = identity_two_commutators(r, n);
      REQUIRE(cert.theorem == "Lemma 4.3");
      check_two_pair_flags(cert);
      REQUIRE(verify_certificate(cert).ok);
      REQUIRE(cert.target.is_identity());
    }
  }
  CHECK_THROWS_AS((void)identity_two_commutators(ring_desc::prime_field(2), 3),
                  error);
}

TEST_CASE("corner-zero similarity on random noncentral matrices") {
  ring_desc h = ring_desc::quaternion();
  rng g(0x502);
  for (int t = 0; t < 1000; ++t) {
    std::size_t n = 2 + g.below(4);
    matrix a = random_matrix(g, h, n);
    if (a.central_scalar().has_value()) continue;
    similarity_witness w = corner_zero_similarity(a);
    REQUIRE(w.v * w.v_inv == matrix::identity(h, n));
    matrix conj = w.v * a * w.v_inv;
    REQUIRE(conj.at(0, 0).is_zero());
  }
}

TEST_CASE("corner-zero similarity: scalar and central special cases") {
  ring_desc h = ring_desc::quaternion();
  ring_value qi = ring_value::quaternion_value(0, 1, 0, 0);
  // noncentral scalar: bump then search
  matrix itimes = matrix::identity(h, 3).scaled_left(qi);
  similarity_witness w = corner_zero_similarity(itimes);
  REQUIRE((w.v * itimes * w.v_inv).at(0, 0).is_zero());
  // central scalar: impossible
  matrix five = matrix::identity(h, 3).scaled_left(ring_value::from_int(h, 5));
  bool threw = false;
  try {
    (void)corner_zero_similarity(five);
  } catch (const error& e) {
    threw = true;
    CHECK(e.code() == errc::central);
  }
  CHECK(threw);
  // already zero corner: identity witness works
  matrix z(h, 2);
  z.set(0, 1, qi);
  similarity_witness wz = corner_zero_similarity(z);
  REQUIRE((wz.v * z * wz.v_inv).at(0, 0).is_zero());
}

TEST_CASE("central scalar avoidance stays within its bound") {
  ring_desc h = ring_desc::quaternion();
  // pinned: diag(1,2) forces 3, the identity forces 2
  matrix d(h, 2);
  d.set(0, 0, ring_value::from_int(h, 1));
  d.set(1, 1, ring_value::from_int(h, 2));
  CHECK(central_singular_avoid(d) == ring_value::from_int(h, 3));
  CHECK(central_singular_avoid(matrix::identity(h, 2)) ==
        ring_value::from_int(h, 2));

  rng g(0x503);
  for (int t = 0; t < 1000; ++t) {
    std::size_t n = 1 + g.below(5);
    matrix v = random_invertible_matrix(g, h, n);
    ring_value lam = central_singular_avoid(v);
    REQUIRE(lam.is_central());
    REQUIRE(is_invertible(v - matrix::identity(h, n).scaled_left(lam)));
  }

  // small fields run out of central candidates
  bool threw = false;
  try {
    (void)central_singular_avoid(matrix::identity(ring_desc::prime_field(2), 1));
  } catch (const error& e) {
    threw = true;
    CHECK(e.code() == errc::field_too_small);
  }
  CHECK(threw);
}

TEST_CASE("quaternion two-commutator factorization") {
  ring_desc h = ring_desc::quaternion();
  rng g(0x504);
  for (int t = 0; t < 120; ++t) {
    std::size_t n = 2 + (t % 4);
    matrix a = (t % 3 == 0)   ? random_invertible_matrix(g, h, n)
               : (t % 3 == 1) ? random_singular_matrix(g, h, n)
                              : random_matrix(g, h, n);
    two_comm_stats stats{};
    commutator_certificate cert = two_commutators(a, &stats);
    REQUIRE(cert.theorem == "Thm 4.5");
    REQUIRE(!cert.similarity.has_value());
    check_two_pair_flags(cert);
    REQUIRE(verify_certificate(cert).ok);
    if (n >= 2 && !a.central_scalar().has_value())
      REQUIRE(stats.levels == n - 1);
  }
}

TEST_CASE("quaternion two-commutator factorization: special targets") {
  ring_desc h = ring_desc::quaternion();
  ring_value qi = ring_value::quaternion_value(0, 1, 0, 0);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const matrix& a :
         {matrix(h, n), matrix::identity(h, n),
          matrix::identity(h, n).scaled_left(ring_value::from_int(h, 5)),
          matrix::identity(h, n).scaled_left(qi)}) {
      commutator_certificate cert = two_commutators(a);
      check_two_pair_flags(cert);
      REQUIRE(verify_certificate(cert).ok);
    }
  }
}

TEST_CASE("two-commutator hypothesis errors") {
  CHECK_THROWS_AS((void)two_commutators(matrix(ring_desc::rational(), 3)),
                  error);
  CHECK_THROWS_AS((void)two_commutators(matrix(ring_desc::quaternion(), 1)),
                  error);
}
