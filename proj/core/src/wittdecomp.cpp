#include "wittforge/wittdecomp.hpp"

namespace wittforge {

namespace {

Vector lift(const Vector& coords, const std::vector<Vector>& basis, const QuadraticSpace& ambient) {
  Vector out = ambient.zero();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) out = add(out, scale(coords[i], basis[i]));
  }
  return out;
}

void require_nondegenerate(const QuadraticSpace& s) {
  if (!s.is_nondegenerate()) fail("Degenerate", "operation needs a non-degenerate space");
}

}  // namespace

std::optional<Vector> find_singular(const QuadraticSpace& s) {
  require_nondegenerate(s);
  const std::size_t n = s.dim();
  if (n < 2) fail("DimensionTooSmall", "find_singular needs dim >= 2");

  for (std::size_t i = 0; i < n; ++i) {
    if (s.qdiag()[i].is_zero()) return s.basis_vector(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = add(s.basis_vector(i), s.basis_vector(j));
      if (s.eval_q(v).is_zero()) return v;
    }
  }

  // Every basis vector is non-singular now; normalize e_0 to q(x) = 1.
  Vector x = scale(sqrt_elem(s.qdiag()[0]).inverse(), s.basis_vector(0));

  if (n == 2) {
    FieldElem d = s.eval_beta(x, s.basis_vector(1));
    if (d.is_zero()) throw LogicError("degenerate pairing in a non-degenerate plane");
    Vector y = scale(d.inverse(), s.basis_vector(1));
    std::optional<FieldElem> root = solve_artin_schreier(s.eval_q(y));
    if (!root) return std::nullopt;  // definite plane
    Vector v = add(scale(*root, x), y);
    if (!s.eval_q(v).is_zero()) throw LogicError("Artin-Schreier root failed to produce a singular vector");
    return v;
  }

  // dim >= 4: pick y in x^perp independent of x, normalize to q(y) = 1,
  // then q(x+y) = q(x) + q(y) = 0.
  std::vector<Vector> p = perp(s, {x});
  for (const Vector& cand : p) {
    if (!theta(s, {x, cand})) continue;
    if (s.eval_q(cand).is_zero()) return cand;
    Vector y = scale(sqrt_elem(s.eval_q(cand)).inverse(), cand);
    return add(x, y);
  }
  throw LogicError("x^perp collapsed onto span(x) in dim >= 4");
}

std::pair<Vector, Vector> complete_hyperbolic_pair(const QuadraticSpace& s, const Vector& x) {
  require_nondegenerate(s);
  if (is_zero(x) || !s.eval_q(x).is_zero())
    fail("NotSingular", "hyperbolic pair completion needs a nonzero singular vector");
  for (std::size_t j = 0; j < s.dim(); ++j) {
    FieldElem d = s.eval_beta(x, s.basis_vector(j));
    if (d.is_zero()) continue;
    Vector y = scale(d.inverse(), s.basis_vector(j));
    Vector v = add(y, scale(s.eval_q(y), x));
    if (!s.eval_q(v).is_zero() || !s.eval_beta(x, v).is_one())
      throw LogicError("hyperbolic pair completion broke its own identities");
    return {x, v};
  }
  throw LogicError("no basis vector pairs with x in a non-degenerate space");
}

WittDecomposition witt_decompose(const QuadraticSpace& s) {
  require_nondegenerate(s);
  WittDecomposition out;
  std::vector<Vector> cur;
  for (std::size_t i = 0; i < s.dim(); ++i) cur.push_back(s.basis_vector(i));

  while (!cur.empty()) {
    QuadraticSpace sub = restrict_space(s, cur);
    if (!sub.is_nondegenerate())
      throw LogicError("orthogonal complement became degenerate during decomposition");
    std::optional<Vector> sing = find_singular(sub);
    if (!sing) {
      // dim-2 definite residual: scale to q(x)=1 and beta(x,y)=1.
      FieldElem cx = sqrt_elem(sub.qdiag()[0]).inverse();
      Vector xs = scale(cx, sub.basis_vector(0));
      FieldElem d = sub.eval_beta(xs, sub.basis_vector(1));
      Vector ys = scale(d.inverse(), sub.basis_vector(1));
      FieldElem b = sub.eval_q(ys);
      if (trace(b) != 1) throw LogicError("definite residual has a trace-0 coefficient");
      out.definite_residual = WittDecomposition::DefiniteResidual{
          lift(xs, cur, s), lift(ys, cur, s), b};
      break;
    }
    auto [xs, vs] = complete_hyperbolic_pair(sub, *sing);
    out.hyperbolic_pairs.emplace_back(lift(xs, cur, s), lift(vs, cur, s));
    std::vector<Vector> pb = perp(sub, {xs, vs});
    std::vector<Vector> next;
    next.reserve(pb.size());
    for (const Vector& w : pb) next.push_back(lift(w, cur, s));
    cur = std::move(next);
  }
  out.defect = out.definite_residual ? 1 : 0;
  return out;
}

std::vector<std::pair<Vector, Vector>> symplectic_basis(const QuadraticSpace& s) {
  require_nondegenerate(s);
  std::vector<std::pair<Vector, Vector>> pairs;
  std::vector<Vector> cur;
  for (std::size_t i = 0; i < s.dim(); ++i) cur.push_back(s.basis_vector(i));
  while (!cur.empty()) {
    QuadraticSpace sub = restrict_space(s, cur);
    Vector u = sub.basis_vector(0);
    std::optional<Vector> partner;
    for (std::size_t j = 1; j < sub.dim(); ++j) {
      FieldElem d = sub.eval_beta(u, sub.basis_vector(j));
      if (!d.is_zero()) {
        partner = scale(d.inverse(), sub.basis_vector(j));
        break;
      }
    }
    if (!partner) throw LogicError("symplectic pairing failed in a non-degenerate space");
    pairs.emplace_back(lift(u, cur, s), lift(*partner, cur, s));
    std::vector<Vector> pb = perp(sub, {u, *partner});
    std::vector<Vector> next;
    next.reserve(pb.size());
    for (const Vector& w : pb) next.push_back(lift(w, cur, s));
    cur = std::move(next);
  }
  return pairs;
}

int arf_defect(const QuadraticSpace& s) {
  require_nondegenerate(s);
  const int from_decomposition = witt_decompose(s).defect;
  // Classical Arf expression over a symplectic basis, computed without
  // touching the decomposition path; the two answers must coincide.
  FieldElem acc = s.field()->zero();
  for (const auto& [u, v] : symplectic_basis(s)) acc += s.eval_q(u) * s.eval_q(v);
  const int classical = trace(acc);
  if (from_decomposition != classical)
    throw LogicError("Witt decomposition and classical Arf expression disagree");
  return from_decomposition;
}

namespace {

// Exhaustive search for a totally singular subspace of dimension `need`
// inside `sub` (whose vectors lift into the original space through `basis`).
// Enumerates singular points in canonical projective position and recurses
// on the quotient u^perp/<u>; returns ambient lifts.
std::optional<std::vector<Vector>> totally_singular_search(const QuadraticSpace& ambient,
                                                           const QuadraticSpace& sub,
                                                           const std::vector<Vector>& basis,
                                                           std::size_t need) {
  if (need == 0) return std::vector<Vector>{};
  const std::uint64_t total = vector_count(sub.field(), sub.dim());
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Vector w = nth_vector(sub.field(), sub.dim(), idx);
    std::size_t lead = 0;
    while (lead < w.size() && w[lead].is_zero()) ++lead;
    if (!w[lead].is_one()) continue;  // one representative per projective point
    if (!sub.eval_q(w).is_zero()) continue;

    std::vector<Vector> pb = perp(sub, {w});
    std::vector<Vector> comp;  // complement of <w> inside w^perp
    std::vector<Vector> probe = {w};
    for (const Vector& c : pb) {
      probe.push_back(c);
      if (theta(sub, probe)) {
        comp.push_back(c);
      } else {
        probe.pop_back();
      }
    }
    if (comp.size() != sub.dim() - 2)
      throw LogicError("quotient of a non-degenerate space has the wrong dimension");

    QuadraticSpace quotient = restrict_space(sub, comp);
    if (!quotient.is_nondegenerate())
      throw LogicError("quotient by a singular point is degenerate");

    std::vector<Vector> comp_lifted;
    comp_lifted.reserve(comp.size());
    for (const Vector& c : comp) comp_lifted.push_back(lift(c, basis, ambient));
    std::optional<std::vector<Vector>> rest =
        totally_singular_search(ambient, quotient, comp_lifted, need - 1);
    if (rest) {
      std::vector<Vector> found = {lift(w, basis, ambient)};
      found.insert(found.end(), rest->begin(), rest->end());
      return found;
    }
  }
  return std::nullopt;
}

// Complete a totally singular half-basis to hyperbolic pairs, one pair at a
// time: solve for a partner z of u_i orthogonal to all fixed pair vectors,
// make it singular via z + q(z) u_i, then push the remaining u_j into the
// pair's perp with u_j + beta(u_j, z) u_i.
std::vector<std::pair<Vector, Vector>> complete_half_basis(const QuadraticSpace& s,
                                                           std::vector<Vector> us) {
  std::vector<std::pair<Vector, Vector>> pairs;
  std::vector<Vector> fixed;
  while (!us.empty()) {
    Vector u = us.front();
    us.erase(us.begin());
    Matrix rows;
    Vector rhs;
    auto add_constraint = [&](const Vector& against, const FieldElem& value) {
      Vector row;
      row.reserve(s.dim());
      for (std::size_t c = 0; c < s.dim(); ++c) row.push_back(s.eval_beta(against, s.basis_vector(c)));
      rows.push_back(std::move(row));
      rhs.push_back(value);
    };
    add_constraint(u, s.field()->one());
    for (const Vector& p : fixed) add_constraint(p, s.field()->zero());
    std::optional<Vector> z = solve(rows, rhs, s.field(), s.dim());
    if (!z) throw LogicError("no hyperbolic partner despite non-degeneracy");
    Vector zp = add(*z, scale(s.eval_q(*z), u));
    for (Vector& rest : us) rest = add(rest, scale(s.eval_beta(rest, zp), u));
    fixed.push_back(u);
    fixed.push_back(zp);
    pairs.emplace_back(u, zp);
  }
  return pairs;
}

// The exact conditions of the hyperbolic-basis sentence: independence, all
// basis vectors singular, beta = 1 inside pairs and 0 across them.
bool hyperbolic_basis_audit(const QuadraticSpace& s,
                            const std::vector<std::pair<Vector, Vector>>& pairs) {
  std::vector<Vector> flat;
  for (const auto& [u, v] : pairs) {
    flat.push_back(u);
    flat.push_back(v);
  }
  if (flat.size() != s.dim() || !theta(s, flat)) return false;
  for (const Vector& v : flat) {
    if (!s.eval_q(v).is_zero()) return false;
  }
  for (std::size_t i = 0; i < flat.size(); ++i) {
    for (std::size_t j = i + 1; j < flat.size(); ++j) {
      FieldElem expect = (j == i + 1 && i % 2 == 0) ? s.field()->one() : s.field()->zero();
      if (s.eval_beta(flat[i], flat[j]) != expect) return false;
    }
  }
  return true;
}

}  // namespace

int defect_oracle(const QuadraticSpace& s) {
  require_nondegenerate(s);
  const std::uint64_t bits = static_cast<std::uint64_t>(s.field()->degree()) * s.dim();
  if (bits > 20) fail("BudgetExceeded", "defect_oracle budget is |field|^dim <= 2^20");
  if (s.dim() == 0) return 0;

  std::vector<Vector> basis;
  for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(s.basis_vector(i));
  std::optional<std::vector<Vector>> half =
      totally_singular_search(s, s, basis, s.dim() / 2);
  if (!half) return 1;  // any hyperbolic basis would supply such a half
  std::vector<std::pair<Vector, Vector>> pairs = complete_half_basis(s, *half);
  if (!hyperbolic_basis_audit(s, pairs))
    throw LogicError("completed hyperbolic basis failed its audit");
  return 0;
}

}  // namespace wittforge
