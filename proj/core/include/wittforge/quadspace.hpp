#ifndef WITTFORGE_QUADSPACE_HPP
#define WITTFORGE_QUADSPACE_HPP

#include <cstdint>
#include <vector>

#include "wittforge/gf2k.hpp"
#include "wittforge/linalg.hpp"

namespace wittforge {

/// A finite-dimensional quadratic space (V, q) over GF(2^k), stored as the
/// Gram matrix of the associated bilinear form beta on a distinguished basis
/// plus the diagonal q-values q(e_i).
///
/// In characteristic 2 beta is alternating, so the Gram matrix is symmetric
/// with zero diagonal; the constructor rejects anything else. Degenerate
/// spaces are representable (restrictions to totally singular subspaces need
/// them); operations that require non-degeneracy check it and throw
/// Degenerate. Values are immutable after construction.
class QuadraticSpace {
 public:
  QuadraticSpace(FieldPtr field, Matrix gram, Vector qdiag);

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return qdiag_.size(); }
  const Matrix& gram() const { return gram_; }
  const Vector& qdiag() const { return qdiag_; }
  bool is_nondegenerate() const { return nondegenerate_; }

  // q(sum a_i e_i) = sum a_i^2 q(e_i) + sum_{i<j} a_i a_j beta(e_i, e_j)
  FieldElem eval_q(const Vector& v) const;
  // beta(v, w) = q(v+w) - q(v) - q(w), evaluated bilinearly off the Gram matrix
  FieldElem eval_beta(const Vector& v, const Vector& w) const;

  Vector basis_vector(std::size_t i) const;
  Vector zero() const { return zero_vector(field_, dim()); }

 private:
  FieldPtr field_;
  Matrix gram_;
  Vector qdiag_;
  bool nondegenerate_;
};

// theta_n: true iff the vectors are linearly independent over the field.
bool theta(const QuadraticSpace& s, const std::vector<Vector>& vs);

// pi_{n,i} with 1-based i, matching the language's coordinate functions:
// the i-th coordinate of w in the basis vs when vs is independent and w lies
// in its span, and zero in every other case.
FieldElem pi(const QuadraticSpace& s, const std::vector<Vector>& vs, const Vector& w,
             std::size_t i);

// Basis of U^perp = {v : beta(v,u) = 0 for all u in U}. Requires a
// non-degenerate ambient space, so dim U^perp = dim - rank U.
std::vector<Vector> perp(const QuadraticSpace& s, const std::vector<Vector>& u);

// Subspace with the induced form on the given independent list.
QuadraticSpace restrict_space(const QuadraticSpace& s, const std::vector<Vector>& basis);

QuadraticSpace direct_sum(const QuadraticSpace& a, const QuadraticSpace& b);

// n_planes hyperbolic planes, optionally followed by the definite norm plane
// q(x)=1, q(y)=b with b the lex-least trace-1 element. Witt defect is 1 iff
// the norm plane is present.
QuadraticSpace standard_space(const FieldPtr& field, std::size_t n_planes, bool with_norm_plane);

// Same dimension over the larger field; Gram and q-values carried through the
// canonical embedding. eval_q commutes with the embedding on embedded vectors.
QuadraticSpace extend_scalars_space(const QuadraticSpace& s, const FieldPtr& target);

// Change of basis: the space whose i-th basis vector is the i-th given vector
// of s. With an invertible square basis this is conjugation; used heavily by
// tests to scramble standard spaces.
inline QuadraticSpace change_basis(const QuadraticSpace& s, const std::vector<Vector>& basis) {
  return restrict_space(s, basis);
}

// Deterministic enumeration of K^n: index runs over all order^n values,
// coordinate j taking the bits (index >> (k*j)) & (order-1).
Vector nth_vector(const FieldPtr& field, std::size_t n, std::uint64_t index);
std::uint64_t vector_count(const FieldPtr& field, std::size_t n);  // BudgetExceeded past 2^40

}  // namespace wittforge

#endif
