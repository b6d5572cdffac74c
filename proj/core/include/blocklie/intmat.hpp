#pragma once

#include <optional>
#include <vector>

#include "blocklie/polynomial.hpp"

namespace blocklie {

using IntVec = std::vector<Integer>;
/// Dense integer matrix stored as a list of rows.
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rational>;

/// Row echelon form with positive pivots, entries above pivots left as is.
/// Zero rows are dropped; row operations are unimodular.
IntMat echelon_form(IntMat rows);

/// Hermite normal form: echelon form with entries above each pivot reduced
/// into [0, pivot).
IntMat hermite_normal_form(IntMat rows);

std::size_t integer_rank(const IntMat& rows);

/// Basis (in Hermite normal form) of {c in Z^n : c * A = 0} for the n x m
/// matrix A.
IntMat left_kernel(const IntMat& a, std::size_t n_rows);

/// Unique rational c with c * B = t for B with independent rows, or nullopt
/// when t is outside the rational row space.
std::optional<RatVec> solve_left(const IntMat& b, const IntVec& t);

struct SmithForm {
  IntMat u;  // n x n unimodular
  IntMat v;  // m x m unimodular
  IntVec diagonal;  // min(n, m) entries, d_0 | d_1 | ...
};

/// U * A * V = diag(d) for an n x m matrix A.
SmithForm smith_normal_form(const IntMat& a, std::size_t n_rows, std::size_t n_cols);

IntMat identity_matrix(std::size_t n);
IntMat multiply(const IntMat& a, const IntMat& b, std::size_t inner, std::size_t cols);

}  // namespace blocklie
