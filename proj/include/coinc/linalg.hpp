#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coinc/matrix.hpp"

namespace coinc {

/// A linear subspace of Q^n held as a list of linearly independent,
/// unnormalized basis vectors. The zero subspace has an empty basis.
class Subspace {
 public:
  /// Throws InvalidInput if the vectors are dependent or of the wrong length.
  Subspace(std::size_t ambient_dim, std::vector<Vector> basis);

  /// Span of arbitrary (possibly dependent) vectors.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const& { return basis_; }
  std::vector<Vector> basis() && { return std::move(basis_); }

  /// Basis vectors as the columns of an ambient_dim x dim matrix.
  RationalMatrix basis_matrix() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  bool same_span(const Subspace& other) const { return dim() == other.dim() && contains(other); }

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
};

/// Reduced row echelon form together with the pivot column of each
/// nonzero row.
struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

EchelonForm row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

Subspace kernel_basis(const RationalMatrix& m);
Subspace orthogonal_complement(const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Orthogonal projection of p onto s.
Vector project_onto(const Vector& p, const Subspace& s);

/// Matrix of the orthogonal projector onto s.
RationalMatrix projector(const Subspace& s);

/// Solves a x = b for square invertible a. Throws InvalidInput when a is
/// singular or shapes disagree.
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);

struct SmithForm {
  /// Positive invariant factors d1 | d2 | ... | d_rank.
  std::vector<BigInt> factors;
  std::size_t rank = 0;
  /// Unimodular transforms with left * input * right == diagonal(factors),
  /// filled only when requested.
  IntegerMatrix left;
  IntegerMatrix right;
};

SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms = false);

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  BigInt value;
};

/// Rank and invariant factors (no transforms) of a sparse integer matrix.
/// Unit entries are eliminated first; the remaining block goes through
/// smith_normal_form.
SmithForm sparse_smith_normal_form(std::size_t rows, std::size_t cols, const std::vector<SparseEntry>& entries);

/// Determinant by fraction-free elimination.
BigInt determinant(const IntegerMatrix& m);

}  // namespace coinc
