#include "wittforge/isometry.hpp"

#include <algorithm>

namespace wittforge {

Isometry::Isometry(QuadraticSpace source, QuadraticSpace target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  const std::size_t n = source_.dim();
  if (target_.dim() != n) fail("DimensionMismatch", "isometry between different dimensions");
  if (!source_.field()->same_field(*target_.field()))
    fail("MixedFields", "isometry between spaces over different fields");
  if (matrix_.size() != n) fail("DimensionMismatch", "isometry matrix has the wrong shape");
  for (const Vector& row : matrix_) {
    if (row.size() != n) fail("DimensionMismatch", "isometry matrix has the wrong shape");
  }
  if (n > 0 && !inverse_matrix())
    fail("NotPartialIsometry", "isometry matrix is singular");
  std::vector<Vector> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) images.push_back(apply(source_.basis_vector(j)));
  for (std::size_t i = 0; i < n; ++i) {
    if (target_.eval_q(images[i]) != source_.qdiag()[i])
      fail("NotPartialIsometry", "matrix does not preserve q on the basis");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (target_.eval_beta(images[i], images[j]) != source_.gram()[i][j])
        fail("NotPartialIsometry", "matrix does not preserve beta on basis pairs");
    }
  }
}

std::optional<Matrix> Isometry::inverse_matrix() const {
  return wittforge::inverse(matrix_, source_.field());
}

Isometry Isometry::inverse() const {
  std::optional<Matrix> inv = inverse_matrix();
  if (!inv) throw LogicError("audited isometry lost its inverse");
  return Isometry(target_, source_, *inv);
}

Isometry Isometry::compose(const Isometry& first, const Isometry& then) {
  if (first.target().dim() != then.source().dim() ||
      !first.target().field()->same_field(*then.source().field()))
    fail("DimensionMismatch", "composition through mismatched middle spaces");
  return Isometry(first.source(), then.target(), mat_mul(then.matrix(), first.matrix()));
}

namespace {

Matrix columns_to_matrix(const std::vector<Vector>& cols, const FieldPtr& field, std::size_t n) {
  Matrix m(n, zero_vector(field, cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
  }
  return m;
}

}  // namespace

std::pair<Isometry, QuadraticSpace> canonical_form(const QuadraticSpace& s) {
  if (!s.is_nondegenerate()) fail("Degenerate", "canonical form needs a non-degenerate space");
  WittDecomposition wd = witt_decompose(s);
  QuadraticSpace std_space =
      standard_space(s.field(), wd.hyperbolic_pairs.size(), wd.defect == 1);

  std::vector<Vector> cols;
  for (const auto& [u, v] : wd.hyperbolic_pairs) {
    cols.push_back(u);
    cols.push_back(v);
  }
  if (wd.definite_residual) {
    // Align the residual coefficient b with the canonical norm-plane
    // coefficient via b_std = c^2 + c + b (solvable: trace(b_std + b) = 0).
    const FieldElem b_std = least_trace_one(s.field());
    std::optional<FieldElem> c = solve_artin_schreier(b_std + wd.definite_residual->b);
    if (!c) throw LogicError("trace-1 coefficients landed in different wp-cosets");
    cols.push_back(wd.definite_residual->x);
    cols.push_back(add(scale(*c, wd.definite_residual->x), wd.definite_residual->y));
  }

  Matrix basis = columns_to_matrix(cols, s.field(), s.dim());
  std::optional<Matrix> to_std = inverse(basis, s.field());
  if (!to_std) throw LogicError("decomposition basis is singular");
  return {Isometry(s, std_space, *to_std), std_space};
}

std::optional<Isometry> is_isometric(const QuadraticSpace& a, const QuadraticSpace& b) {
  if (!a.field()->same_field(*b.field()))
    fail("MixedFields", "isometry test across different fields");
  if (!a.is_nondegenerate() || !b.is_nondegenerate())
    fail("Degenerate", "isometry test needs non-degenerate spaces");
  if (a.dim() != b.dim()) return std::nullopt;
  if (arf_defect(a) != arf_defect(b)) return std::nullopt;
  auto [to_std_a, std_a] = canonical_form(a);
  auto [to_std_b, std_b] = canonical_form(b);
  return Isometry::compose(to_std_a, to_std_b.inverse());
}

std::vector<FieldElem> solve_quadratic(const FieldElem& a, const FieldElem& b,
                                       const FieldElem& c) {
  std::vector<FieldElem> roots;
  const FieldPtr& f = a.field();
  if (a.is_zero()) {
    if (b.is_zero()) {
      if (c.is_zero()) roots.push_back(f->zero());
      return roots;
    }
    roots.push_back(c * b.inverse());
    return roots;
  }
  if (b.is_zero()) {
    roots.push_back(sqrt_elem(c * a.inverse()));
    return roots;
  }
  // substitute x = (b/a) y: y^2 + y = a c / b^2
  const FieldElem shift = b * a.inverse();
  std::optional<FieldElem> mu = solve_artin_schreier(a * c * (b * b).inverse());
  if (!mu) return roots;
  roots.push_back(shift * *mu);
  roots.push_back(shift * (*mu + f->one()));
  std::sort(roots.begin(), roots.end(), lex_less);
  return roots;
}

std::optional<Vector> find_constrained_vector(const QuadraticSpace& s,
                                              const std::vector<Vector>& against,
                                              const Vector& values,
                                              const std::optional<FieldElem>& qvalue,
                                              const std::function<bool(const Vector&)>& predicate) {
  if (against.size() != values.size())
    fail("DimensionMismatch", "constraint lists have different lengths");
  Matrix rows;
  for (const Vector& a : against) {
    Vector row;
    row.reserve(s.dim());
    for (std::size_t c = 0; c < s.dim(); ++c) row.push_back(s.eval_beta(a, s.basis_vector(c)));
    rows.push_back(std::move(row));
  }
  std::optional<Vector> p = solve(rows, values, s.field(), s.dim());
  if (!p) return std::nullopt;
  std::vector<Vector> kernel = kernel_basis(rows, s.field(), s.dim());

  const std::uint64_t bits = static_cast<std::uint64_t>(s.field()->degree()) * kernel.size();
  if (bits > 20) fail("BudgetExceeded", "constrained search over more than 2^20 candidates");
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vector coeffs = nth_vector(s.field(), kernel.size(), idx);
    Vector cand = *p;
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      if (!coeffs[i].is_zero()) cand = add(cand, scale(coeffs[i], kernel[i]));
    }
    if (qvalue && s.eval_q(cand) != *qvalue) continue;
    if (predicate && !predicate(cand)) continue;
    return cand;
  }
  return std::nullopt;
}

Isometry witt_extend(const QuadraticSpace& s, const std::vector<Vector>& domain,
                     const std::vector<Vector>& image) {
  if (!s.is_nondegenerate()) fail("Degenerate", "witt_extend needs a non-degenerate space");
  if (domain.size() != image.size())
    fail("NotPartialIsometry", "domain and image lists have different lengths");
  if (!theta(s, domain) || !theta(s, image))
    fail("NotPartialIsometry", "domain and image must be independent lists");
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (s.eval_q(domain[i]) != s.eval_q(image[i]))
      fail("NotPartialIsometry", "q mismatch between domain and image");
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      if (s.eval_beta(domain[i], domain[j]) != s.eval_beta(image[i], image[j]))
        fail("NotPartialIsometry", "beta mismatch between domain and image");
    }
  }

  std::vector<Vector> dom = domain;
  std::vector<Vector> img = image;

  auto in_span = [&](const std::vector<Vector>& list, const Vector& v) {
    return static_cast<bool>(coordinates_in(list, v, s.field(), s.dim()));
  };
  auto independent_from = [&s](const std::vector<Vector>* list) {
    return [&s, list](const Vector& v) {
      std::vector<Vector> probe = *list;
      probe.push_back(v);
      return theta(s, probe);
    };
  };

  // Radical completion: pair every singular radical direction of the domain
  // with a hyperbolic partner on both sides before sweeping.
  if (!domain.empty()) {
    Matrix gram_u(domain.size(), zero_vector(s.field(), domain.size()));
    for (std::size_t i = 0; i < domain.size(); ++i) {
      for (std::size_t j = 0; j < domain.size(); ++j) {
        gram_u[i][j] = s.eval_beta(domain[i], domain[j]);
      }
    }
    for (const Vector& rc : kernel_basis(gram_u, s.field(), domain.size())) {
      Vector r_src = s.zero();
      Vector r_img = s.zero();
      for (std::size_t i = 0; i < domain.size(); ++i) {
        r_src = add(r_src, scale(rc[i], domain[i]));
        r_img = add(r_img, scale(rc[i], image[i]));
      }
      if (!s.eval_q(r_src).is_zero()) continue;  // non-singular radical: greedy phase copes

      // Pair values against the current dom list plus the radical vector.
      std::vector<Vector> against_src = dom;
      against_src.push_back(r_src);
      Vector vals = zero_vector(s.field(), dom.size());
      vals.push_back(s.field()->one());
      std::optional<Vector> z_src = find_constrained_vector(
          s, against_src, vals, s.field()->zero(), independent_from(&dom));
      std::vector<Vector> against_img = img;
      against_img.push_back(r_img);
      std::optional<Vector> z_img = find_constrained_vector(
          s, against_img, vals, s.field()->zero(), independent_from(&img));
      if (!z_src || !z_img)
        throw LogicError("radical completion failed in a non-degenerate space");
      dom.push_back(*z_src);
      img.push_back(*z_img);
    }
  }

  // Greedy sweep: complete dom to a basis, mirroring every step exactly.
  for (std::size_t i = 0; i < s.dim() && dom.size() < s.dim(); ++i) {
    Vector e = s.basis_vector(i);
    if (in_span(dom, e)) continue;
    Vector vals;
    vals.reserve(dom.size());
    for (const Vector& d : dom) vals.push_back(s.eval_beta(e, d));
    std::optional<Vector> c = find_constrained_vector(
        s, img, vals, s.eval_q(e), independent_from(&img));
    if (!c) throw LogicError("greedy step found no image despite Witt's lemma");
    dom.push_back(e);
    img.push_back(*c);
  }
  if (dom.size() != s.dim()) throw LogicError("greedy sweep failed to reach a basis");

  Matrix dom_cols = columns_to_matrix(dom, s.field(), s.dim());
  Matrix img_cols = columns_to_matrix(img, s.field(), s.dim());
  std::optional<Matrix> dom_inv = inverse(dom_cols, s.field());
  if (!dom_inv) throw LogicError("greedy sweep produced a dependent basis");
  Isometry iso(s, s, mat_mul(img_cols, *dom_inv));
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (!equal(iso.apply(domain[i]), image[i]))
      throw LogicError("extension does not restrict to the given partial isometry");
  }
  return iso;
}

}  // namespace wittforge
