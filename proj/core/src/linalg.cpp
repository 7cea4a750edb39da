#include "wittforge/linalg.hpp"

namespace wittforge {

Vector zero_vector(const FieldPtr& field, std::size_t n) {
  return Vector(n, field->zero());
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail("DimensionMismatch", "vector lengths differ");
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

Vector scale(const FieldElem& c, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const FieldElem& x : v) out.push_back(c * x);
  return out;
}

bool equal(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool is_zero(const Vector& v) {
  for (const FieldElem& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix identity_matrix(const FieldPtr& field, std::size_t n) {
  Matrix m(n, zero_vector(field, n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = field->one();
  return m;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
  Vector out;
  out.reserve(m.size());
  for (const Vector& row : m) {
    if (row.size() != v.size()) fail("DimensionMismatch", "matrix/vector shapes differ");
    if (v.empty()) throw LogicError("mat_vec with zero-width rows has no field to work in");
    FieldElem acc = v[0].field()->zero();
    for (std::size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
    out.push_back(acc);
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t m = inner == 0 ? 0 : b[0].size();
  Matrix out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != inner) fail("DimensionMismatch", "matrix shapes differ");
    Vector row;
    row.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      FieldElem acc = a[i].empty() ? b[0][j].field()->zero() : a[i][0].field()->zero();
      for (std::size_t t = 0; t < inner; ++t) acc += a[i][t] * b[t][j];
      row.push_back(acc);
    }
    out.push_back(std::move(row));
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix out(m[0].size(), Vector());
  for (std::size_t j = 0; j < m[0].size(); ++j) {
    out[j].reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[j].push_back(m[i][j]);
  }
  return out;
}

namespace {

// Row echelon with full pivoting bookkeeping over an augmented matrix.
// Returns pivot column list; `rows` becomes reduced row echelon form.
std::vector<std::size_t> rref(Matrix& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const FieldElem inv = rows[r][col].inverse();
    rows[r] = scale(inv, rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && !rows[i][col].is_zero()) {
        rows[i] = add(rows[i], scale(rows[i][col], rows[r]));
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

std::optional<Vector> solve(const Matrix& a, const Vector& b, const FieldPtr& field,
                            std::size_t cols) {
  Matrix aug = a;
  if (aug.size() != b.size()) fail("DimensionMismatch", "system shapes differ");
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  std::vector<std::size_t> pivots = rref(aug, cols);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i) {
    if (!aug[i][cols].is_zero()) return std::nullopt;
  }
  Vector x = zero_vector(field, cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

std::vector<Vector> kernel_basis(const Matrix& a, const FieldPtr& field, std::size_t cols) {
  Matrix m = a;
  std::vector<std::size_t> pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(field, cols);
    v[free] = field->one();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      // row i reads x[pivot_i] + sum over free columns = 0
      v[pivots[i]] = m[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m, const FieldPtr& field) {
  const std::size_t n = m.size();
  Matrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) fail("DimensionMismatch", "inverse needs a square matrix");
    Vector id = zero_vector(field, n);
    id[i] = field->one();
    aug[i].insert(aug[i].end(), id.begin(), id.end());
  }
  std::vector<std::size_t> pivots = rref(aug, n);
  if (pivots.size() != n) return std::nullopt;
  Matrix out(n, Vector());
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = Vector(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
  }
  return out;
}

std::vector<std::size_t> independent_subset(const std::vector<Vector>& vs, const FieldPtr& field,
                                            std::size_t n) {
  std::vector<std::size_t> kept;
  Matrix rows;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    rows.push_back(vs[i]);
    if (rank(rows) == rows.size()) {
      kept.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  (void)field;
  (void)n;
  return kept;
}

std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& w,
                                     const FieldPtr& field, std::size_t n) {
  // Columns of the system are the basis vectors.
  Matrix a(n, Vector());
  for (std::size_t r = 0; r < n; ++r) {
    a[r].reserve(basis.size());
    for (const Vector& b : basis) a[r].push_back(b[r]);
  }
  return solve(a, w, field, basis.size());
}

}  // namespace wittforge
