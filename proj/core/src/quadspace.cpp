#include "wittforge/quadspace.hpp"

namespace wittforge {

QuadraticSpace::QuadraticSpace(FieldPtr field, Matrix gram, Vector qdiag)
    : field_(std::move(field)), gram_(std::move(gram)), qdiag_(std::move(qdiag)) {
  const std::size_t n = qdiag_.size();
  if (gram_.size() != n) fail("InvalidSpace", "gram and qdiag dimensions differ");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) fail("InvalidSpace", "gram is not square");
    if (!qdiag_[i].field()->same_field(*field_))
      fail("MixedFields", "qdiag entry from a different field");
    for (std::size_t j = 0; j < n; ++j) {
      if (!gram_[i][j].field()->same_field(*field_))
        fail("MixedFields", "gram entry from a different field");
      if (gram_[i][j] != gram_[j][i]) fail("InvalidSpace", "gram is not symmetric");
    }
    if (!gram_[i][i].is_zero())
      fail("InvalidSpace", "gram diagonal must vanish: beta is alternating in characteristic 2");
  }
  nondegenerate_ = (rank(gram_) == n);
  if (nondegenerate_ && n % 2 != 0)
    throw LogicError("non-degenerate alternating form on odd dimension");
}

FieldElem QuadraticSpace::eval_q(const Vector& v) const {
  if (v.size() != dim()) fail("DimensionMismatch", "vector length differs from dim");
  FieldElem acc = field_->zero();
  for (std::size_t i = 0; i < v.size(); ++i) {
    acc += v[i] * v[i] * qdiag_[i];
    for (std::size_t j = i + 1; j < v.size(); ++j) acc += v[i] * v[j] * gram_[i][j];
  }
  return acc;
}

FieldElem QuadraticSpace::eval_beta(const Vector& v, const Vector& w) const {
  if (v.size() != dim() || w.size() != dim())
    fail("DimensionMismatch", "vector length differs from dim");
  FieldElem acc = field_->zero();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < w.size(); ++j) acc += v[i] * gram_[i][j] * w[j];
  }
  return acc;
}

Vector QuadraticSpace::basis_vector(std::size_t i) const {
  Vector e = zero();
  e.at(i) = field_->one();
  return e;
}

bool theta(const QuadraticSpace& s, const std::vector<Vector>& vs) {
  for (const Vector& v : vs) {
    if (v.size() != s.dim()) fail("DimensionMismatch", "vector length differs from dim");
  }
  Matrix m(vs.begin(), vs.end());
  return rank(m) == vs.size();
}

FieldElem pi(const QuadraticSpace& s, const std::vector<Vector>& vs, const Vector& w,
             std::size_t i) {
  if (i < 1 || i > vs.size()) return s.field()->zero();
  if (!theta(s, vs)) return s.field()->zero();
  std::optional<Vector> coords = coordinates_in(vs, w, s.field(), s.dim());
  if (!coords) return s.field()->zero();
  return (*coords)[i - 1];
}

std::vector<Vector> perp(const QuadraticSpace& s, const std::vector<Vector>& u) {
  if (!s.is_nondegenerate()) fail("Degenerate", "perp needs a non-degenerate space");
  // beta(v, u_j) = 0 for each j: rows are (G u_j)^T.
  Matrix rows;
  for (const Vector& uj : u) {
    if (uj.size() != s.dim()) fail("DimensionMismatch", "vector length differs from dim");
    Vector row;
    row.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      FieldElem acc = s.field()->zero();
      for (std::size_t j = 0; j < s.dim(); ++j) acc += s.gram()[i][j] * uj[j];
      row.push_back(acc);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    std::vector<Vector> full;
    for (std::size_t i = 0; i < s.dim(); ++i) full.push_back(s.basis_vector(i));
    return full;
  }
  return kernel_basis(rows, s.field(), s.dim());
}

QuadraticSpace restrict_space(const QuadraticSpace& s, const std::vector<Vector>& basis) {
  if (!theta(s, basis)) fail("DependentBasis", "restriction basis is dependent");
  const std::size_t m = basis.size();
  Matrix gram(m, zero_vector(s.field(), m));
  Vector qdiag;
  qdiag.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    qdiag.push_back(s.eval_q(basis[i]));
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = s.eval_beta(basis[i], basis[j]);
  }
  return QuadraticSpace(s.field(), std::move(gram), std::move(qdiag));
}

QuadraticSpace direct_sum(const QuadraticSpace& a, const QuadraticSpace& b) {
  if (!a.field()->same_field(*b.field()))
    fail("MixedFields", "direct sum of spaces over different fields");
  const std::size_t n = a.dim() + b.dim();
  Matrix gram(n, zero_vector(a.field(), n));
  Vector qdiag;
  qdiag.reserve(n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    qdiag.push_back(a.qdiag()[i]);
    for (std::size_t j = 0; j < a.dim(); ++j) gram[i][j] = a.gram()[i][j];
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    qdiag.push_back(b.qdiag()[i]);
    for (std::size_t j = 0; j < b.dim(); ++j) gram[a.dim() + i][a.dim() + j] = b.gram()[i][j];
  }
  return QuadraticSpace(a.field(), std::move(gram), std::move(qdiag));
}

QuadraticSpace standard_space(const FieldPtr& field, std::size_t n_planes, bool with_norm_plane) {
  const std::size_t n = 2 * n_planes + (with_norm_plane ? 2 : 0);
  Matrix gram(n, zero_vector(field, n));
  Vector qdiag = zero_vector(field, n);
  for (std::size_t p = 0; p + 1 < n; p += 2) {
    gram[p][p + 1] = field->one();
    gram[p + 1][p] = field->one();
  }
  if (with_norm_plane) {
    qdiag[n - 2] = field->one();
    qdiag[n - 1] = least_trace_one(field);
  }
  return QuadraticSpace(field, std::move(gram), std::move(qdiag));
}

QuadraticSpace extend_scalars_space(const QuadraticSpace& s, const FieldPtr& target) {
  Embedding emb(s.field(), target);
  Matrix gram(s.dim(), zero_vector(target, s.dim()));
  Vector qdiag;
  qdiag.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    qdiag.push_back(emb.apply(s.qdiag()[i]));
    for (std::size_t j = 0; j < s.dim(); ++j) gram[i][j] = emb.apply(s.gram()[i][j]);
  }
  return QuadraticSpace(target, std::move(gram), std::move(qdiag));
}

Vector nth_vector(const FieldPtr& field, std::size_t n, std::uint64_t index) {
  Vector v;
  v.reserve(n);
  const std::uint64_t mask = field->order() - 1;
  for (std::size_t j = 0; j < n; ++j) {
    v.push_back(field->from_bits(static_cast<std::uint32_t>(index & mask)));
    index >>= field->degree();
  }
  return v;
}

std::uint64_t vector_count(const FieldPtr& field, std::size_t n) {
  const std::uint64_t bits = static_cast<std::uint64_t>(field->degree()) * n;
  if (bits > 40) fail("BudgetExceeded", "vector enumeration over 2^40 entries");
  return std::uint64_t{1} << bits;
}

}  // namespace wittforge
