#ifndef WITTFORGE_WITTDECOMP_HPP
#define WITTFORGE_WITTDECOMP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "wittforge/quadspace.hpp"

namespace wittforge {

/// Constructive Witt decomposition of a non-degenerate space: hyperbolic
/// pairs plus, when the space is not hyperbolic, one definite residual plane
/// normalized to q(x)=1, beta(x,y)=1, q(y)=b with trace(b)=1.
///
/// All vectors are in ambient coordinates and jointly form a basis; distinct
/// blocks are beta-orthogonal. defect == 1 iff the residual is present.
struct WittDecomposition {
  struct DefiniteResidual {
    Vector x;
    Vector y;
    FieldElem b;
  };

  std::vector<std::pair<Vector, Vector>> hyperbolic_pairs;
  std::optional<DefiniteResidual> definite_residual;
  int defect = 0;
};

// Nonzero singular vector, or nullopt exactly when dim == 2 and the plane is
// definite. Deterministic: sweeps basis vectors, then basis pairs, then runs
// the normalize-and-stack construction (scale to q(x)=1; at dim >= 4 pick an
// orthogonal y with q(y)=1 and return x+y; at dim 2 solve t^2+t+q(y)=0).
std::optional<Vector> find_singular(const QuadraticSpace& s);

// Given nonzero singular x, returns (x, v) with q(v)=0 and beta(x,v)=1:
// pick y outside x^perp, scale to beta(x,y)=1, and take v = y + q(y)x.
std::pair<Vector, Vector> complete_hyperbolic_pair(const QuadraticSpace& s, const Vector& x);

WittDecomposition witt_decompose(const QuadraticSpace& s);

// Witt defect bit of the decomposition, cross-checked internally against the
// classical Arf expression trace(sum q(u_i) q(v_i)) over an independently
// computed symplectic basis; disagreement is a LogicError.
int arf_defect(const QuadraticSpace& s);

// Independent oracle: exhaustive backtracking for a full hyperbolic basis.
// The search enumerates the totally singular halves (singular projective
// points, recursing on the quotient u^perp/<u>, where q descends since
// q(v + au) = q(v) for v orthogonal to singular u); a found half is completed
// to an explicit hyperbolic basis and audited against the exact basis
// conditions before 0 is returned. Budget: |field|^dim <= 2^20.
int defect_oracle(const QuadraticSpace& s);

// Symplectic basis of the bilinear form (q ignored); pairs (u_i, v_i) with
// beta(u_i,v_i)=1 and distinct pairs orthogonal.
std::vector<std::pair<Vector, Vector>> symplectic_basis(const QuadraticSpace& s);

}  // namespace wittforge

#endif
