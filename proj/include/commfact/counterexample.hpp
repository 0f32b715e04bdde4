#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "commfact/matrix.hpp"

namespace commfact {

// A tuple (s_1, ..., s_n) of trace-zero 2x2 matrices over a base field (the
// unit parts), optionally together with companion lists t_{ik} in sl2: one
// 2x2 companion per pure generator i = 0..3 and position k.
struct sl_tuple {
  ring_desc base;                 // field ring the 2x2 blocks live over
  std::vector<matrix> units;
  std::optional<std::vector<std::array<matrix, 4>>> companions;
};

// The 2x2 matrix over F·1 ⊕ C0 whose entries are the four pure generators.
// Its trace is not a commutator of the scalar ring, although every entry is
// as degenerate as possible (all products of pure elements vanish).
matrix the_matrix_a(field_desc base);

// r_i = Σ_k (s_1 ... s_{k-1}) t_{ik} (s_{k+1} ... s_n), one per generator.
std::array<matrix, 4> r_system(const sl_tuple& t);

struct lemma21_report {
  std::size_t rank;  // of {r_0, r_1, r_2, r_3} inside M_2(F)
  // d with Σ d_i r_i = 0, d != 0, present whenever rank < 4.
  std::optional<std::array<field_scalar, 4>> dependence;
};

// For a tuple whose unit parts multiply to zero: the four residue matrices
// are linearly dependent no matter which companions were chosen.
lemma21_report lemma21_check(const sl_tuple& t);

struct product_residue_report {
  matrix unit_product;      // over the base field
  std::array<matrix, 4> r;  // pure-part residues, over the base field
};

// Expands Π_k (s_k + Σ_i c_i t_{ik}) over the counterexample ring: the unit
// part is Π s_k and the c_i coefficient is r_i.  Cross-checked against the
// direct product in M_2(F·1 ⊕ C0).
product_residue_report product_residue(const sl_tuple& t);

struct oracle_row {
  std::size_t n;
  std::size_t zero_product_tuples;
  std::size_t max_span_dim;  // max over tuples of dim Σ_k P_{k-1}·sl2·S_{k+1}
};

struct oracle_report {
  std::vector<oracle_row> rows;
  bool bound_holds;  // every max_span_dim <= 3
};

// Exhaustive check over GF(2): for every tuple of sl2 elements with zero
// product, the reachable-residue space has dimension at most 3, so some
// nonzero functional kills all four residues simultaneously.  8^n tuples;
// n_max is capped at 6 (E_SCALE beyond).
oracle_report unreachability_oracle(std::size_t n_max);

}  // namespace commfact
