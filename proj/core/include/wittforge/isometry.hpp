#ifndef WITTFORGE_ISOMETRY_HPP
#define WITTFORGE_ISOMETRY_HPP

#include <functional>
#include <optional>
#include <utility>

#include "wittforge/wittdecomp.hpp"

namespace wittforge {

/// An isometry between quadratic spaces: an invertible matrix (column j is
/// the image of e_j) with eval_q(target, Mv) = eval_q(source, v) everywhere.
/// The constructor audits invertibility plus q on the basis and beta on all
/// basis pairs, which suffices by the q/beta expansion identities.
class Isometry {
 public:
  Isometry(QuadraticSpace source, QuadraticSpace target, Matrix matrix);

  const QuadraticSpace& source() const { return source_; }
  const QuadraticSpace& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Vector apply(const Vector& v) const { return mat_vec(matrix_, v); }
  Isometry inverse() const;

  // then o first: source of `first`, target of `then`.
  static Isometry compose(const Isometry& first, const Isometry& then);

 private:
  std::optional<Matrix> inverse_matrix() const;

  QuadraticSpace source_;
  QuadraticSpace target_;
  Matrix matrix_;
};

// Isometry from s onto standard_space(field, n_planes, defect), derived from
// witt_decompose; a definite residual is aligned to the canonical norm-plane
// coefficient through the c^2 + c + b relation.
std::pair<Isometry, QuadraticSpace> canonical_form(const QuadraticSpace& s);

// Composite of canonical forms when dimensions and defects agree; nullopt
// otherwise.
std::optional<Isometry> is_isometric(const QuadraticSpace& a, const QuadraticSpace& b);

// Witt's lemma, constructively: extend the partial isometry domain[i] ->
// image[i] (independent lists, q and beta preserved) to an isometry of all
// of s. Singular radical directions of the domain are completed to hyperbolic
// pairs on both sides first; the rest is a greedy basis sweep where each step
// finds an image by exact search over the affine solution set of its
// beta-constraints.
Isometry witt_extend(const QuadraticSpace& s, const std::vector<Vector>& domain,
                     const std::vector<Vector>& image);

// Deterministic search for v with beta(v, against[i]) = values[i], optionally
// q(v) = qvalue and predicate(v); candidates swept in coefficient order over
// the solution set. nullopt when the sweep exhausts.
std::optional<Vector> find_constrained_vector(const QuadraticSpace& s,
                                              const std::vector<Vector>& against,
                                              const Vector& values,
                                              const std::optional<FieldElem>& qvalue,
                                              const std::function<bool(const Vector&)>& predicate);

// Roots of a x^2 + b x + c in the coefficients' field, lex-sorted, possibly
// empty. When the equation is trivially 0 = 0, returns just {0}.
std::vector<FieldElem> solve_quadratic(const FieldElem& a, const FieldElem& b,
                                       const FieldElem& c);

}  // namespace wittforge

#endif
