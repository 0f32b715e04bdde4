#include "commfact/counterexample.hpp"

#include <cstdint>
#include <stdexcept>

#include "commfact/elimination.hpp"
#include "commfact/errors.hpp"

namespace commfact {

namespace {

ring_desc base_ring_of(const field_desc& base) {
  return base.p == 0 ? ring_desc::rational() : ring_desc::prime_field(base.p);
}

void check_tuple(const sl_tuple& t, bool need_companions) {
  const ring_desc base = t.base;
  if (!base.is_field())
    fail(errc::unsupported_ring, "tuple entries must live over a field");
  if (t.units.empty()) fail(errc::shape, "tuple must contain at least one unit");
  for (const matrix& s : t.units) {
    if (s.size() != 2 || s.ring() != base)
      fail(errc::shape, "unit parts must be 2x2 over the tuple's base field");
    if (!s.trace().is_zero())
      fail(errc::precondition, "unit parts must have trace zero");
  }
  if (!need_companions) return;
  if (!t.companions)
    fail(errc::shape, "tuple carries no companion lists");
  if (t.companions->size() != t.units.size())
    fail(errc::shape, "companion lists must match the tuple length");
  for (const auto& quad : *t.companions) {
    for (const matrix& c : quad) {
      if (c.size() != 2 || c.ring() != base)
        fail(errc::shape, "companions must be 2x2 over the tuple's base field");
      if (!c.trace().is_zero())
        fail(errc::precondition, "companions must have trace zero");
    }
  }
}

std::vector<ring_value> flatten(const matrix& m) {
  std::vector<ring_value> v;
  v.reserve(m.size() * m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) v.push_back(m.at(i, j));
  return v;
}

}  // namespace

matrix the_matrix_a(field_desc base) {
  const ring_desc ring = ring_desc::counterexample(base);
  const field_scalar z = field_scalar::zero(base);
  const field_scalar o = field_scalar::one(base);

  matrix a(ring, 2);
  for (int i = 0; i < 4; ++i) {
    std::array<field_scalar, 5> t{z, z, z, z, z};
    t[static_cast<std::size_t>(i) + 1] = o;
    a.set(static_cast<std::size_t>(i) / 2, static_cast<std::size_t>(i) % 2,
          ring_value::counterexample_value(t));
  }
  return a;
}

std::array<matrix, 4> r_system(const sl_tuple& t) {
  check_tuple(t, true);
  const ring_desc base = t.base;
  const std::size_t n = t.units.size();

  // prefix[k] = s_0 ... s_{k-1}, suffix[k] = s_k ... s_{n-1}.
  std::vector<matrix> prefix(n + 1, matrix::identity(base, 2));
  std::vector<matrix> suffix(n + 1, matrix::identity(base, 2));
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] * t.units[k];
  for (std::size_t k = n; k-- > 0;) suffix[k] = t.units[k] * suffix[k + 1];

  std::array<matrix, 4> r{matrix(base, 2), matrix(base, 2), matrix(base, 2),
                          matrix(base, 2)};
  for (int i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      r[static_cast<std::size_t>(i)] =
          r[static_cast<std::size_t>(i)] +
          prefix[k] * (*t.companions)[k][static_cast<std::size_t>(i)] *
              suffix[k + 1];
    }
  }
  return r;
}

lemma21_report lemma21_check(const sl_tuple& t) {
  check_tuple(t, true);
  matrix prod = matrix::identity(t.base, 2);
  for (const matrix& s : t.units) prod = prod * s;
  if (!prod.is_zero())
    fail(errc::precondition, "unit parts must multiply to zero");

  std::array<matrix, 4> r = r_system(t);

  span_builder span(t.base, 4);
  lemma21_report rep{0, std::nullopt};
  for (std::size_t i = 0; i < 4; ++i) {
    if (span.insert(flatten(r[i]))) continue;
    if (!rep.dependence) {
      const std::vector<ring_value>& combo = span.last_combo();
      std::array<field_scalar, 4> d{
          field_scalar::zero(t.base.base()), field_scalar::zero(t.base.base()),
          field_scalar::zero(t.base.base()), field_scalar::zero(t.base.base())};
      for (std::size_t j = 0; j < combo.size(); ++j) d[j] = combo[j].field();
      d[i] = -field_scalar::one(t.base.base());
      rep.dependence = d;
    }
  }
  rep.rank = span.rank();
  return rep;
}

product_residue_report product_residue(const sl_tuple& t) {
  check_tuple(t, true);
  const ring_desc base = t.base;
  const std::size_t n = t.units.size();

  matrix unit_prod = matrix::identity(base, 2);
  for (const matrix& s : t.units) unit_prod = unit_prod * s;
  std::array<matrix, 4> r = r_system(t);

  // Direct product of the lifted factors over F·1 ⊕ C0.
  const ring_desc cx = ring_desc::counterexample(base.base());
  matrix direct = matrix::identity(cx, 2);
  for (std::size_t k = 0; k < n; ++k) {
    matrix factor(cx, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        std::array<field_scalar, 5> comp{
            t.units[k].at(i, j).field(), (*t.companions)[k][0].at(i, j).field(),
            (*t.companions)[k][1].at(i, j).field(),
            (*t.companions)[k][2].at(i, j).field(),
            (*t.companions)[k][3].at(i, j).field()};
        factor.set(i, j, ring_value::counterexample_value(comp));
      }
    }
    direct = direct * factor;
  }

  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const ring_value& d = direct.at(i, j);
      bool ok = d.cx(0) == unit_prod.at(i, j).field();
      for (int g = 0; g < 4 && ok; ++g)
        ok = d.cx(g + 1) ==
             r[static_cast<std::size_t>(g)].at(i, j).field();
      if (!ok)
        throw std::logic_error(
            "residue expansion disagrees with the direct product");
    }
  }
  return {unit_prod, r};
}

namespace {

// M_2(GF(2)) as 4-bit codes: bit0 = (0,0), bit1 = (0,1), bit2 = (1,0),
// bit3 = (1,1).
struct gf2_tables {
  std::uint8_t mul[16][16];
  gf2_tables() {
    for (unsigned x = 0; x < 16; ++x) {
      const unsigned a = x & 1, b = (x >> 1) & 1, c = (x >> 2) & 1,
                     d = (x >> 3) & 1;
      for (unsigned y = 0; y < 16; ++y) {
        const unsigned e = y & 1, f = (y >> 1) & 1, g = (y >> 2) & 1,
                       h = (y >> 3) & 1;
        const unsigned p00 = (a & e) ^ (b & g);
        const unsigned p01 = (a & f) ^ (b & h);
        const unsigned p10 = (c & e) ^ (d & g);
        const unsigned p11 = (c & f) ^ (d & h);
        mul[x][y] =
            static_cast<std::uint8_t>(p00 | (p01 << 1) | (p10 << 2) | (p11 << 3));
      }
    }
  }
};

// Rank of a growing set of 4-bit vectors over GF(2).
struct bit_span {
  std::uint8_t basis[4] = {0, 0, 0, 0};
  std::size_t dim = 0;
  void insert(std::uint8_t v) {
    for (std::size_t i = 0; i < dim; ++i)
      if (v & (std::uint8_t{1} << top_bit(basis[i]))) v ^= basis[i];
    if (v) basis[dim++] = v;
  }
  static int top_bit(std::uint8_t v) {
    int b = 3;
    while (b > 0 && !(v & (1u << b))) --b;
    return b;
  }
};

}  // namespace

oracle_report unreachability_oracle(std::size_t n_max) {
  if (n_max < 1) fail(errc::size, "need n_max >= 1");
  if (n_max > 6)
    fail(errc::scale, "exhaustive enumeration is capped at tuples of length 6");

  static const gf2_tables tables;
  static const std::uint8_t idm = 0b1001;  // identity
  static const std::uint8_t sl2[8] = {0, 2, 4, 6, 9, 11, 13, 15};
  static const std::uint8_t sl2_basis[3] = {idm, 2, 4};  // 1, e01, e10

  oracle_report rep;
  rep.bound_holds = true;

  for (std::size_t n = 1; n <= n_max; ++n) {
    oracle_row row{n, 0, 0};
    std::vector<std::size_t> idx(n, 0);
    std::vector<std::uint8_t> prefix(n + 1, idm), suffix(n + 1, idm);

    for (;;) {
      prefix[0] = idm;
      for (std::size_t k = 0; k < n; ++k)
        prefix[k + 1] = tables.mul[prefix[k]][sl2[idx[k]]];
      if (prefix[n] == 0) {
        ++row.zero_product_tuples;
        suffix[n] = idm;
        for (std::size_t k = n; k-- > 0;)
          suffix[k] = tables.mul[sl2[idx[k]]][suffix[k + 1]];
        bit_span span;
        for (std::size_t k = 0; k < n && span.dim < 4; ++k)
          for (std::uint8_t b : sl2_basis)
            span.insert(tables.mul[tables.mul[prefix[k]][b]][suffix[k + 1]]);
        if (span.dim > row.max_span_dim) row.max_span_dim = span.dim;
      }

      std::size_t pos = 0;
      while (pos < n && ++idx[pos] == 8) idx[pos++] = 0;
      if (pos == n) break;
    }

    if (row.max_span_dim > 3) rep.bound_holds = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace commfact
