#ifndef WITTFORGE_LINALG_HPP
#define WITTFORGE_LINALG_HPP

#include <optional>
#include <vector>

#include "wittforge/gf2k.hpp"

namespace wittforge {

// Dense row-major matrices of field elements. Everything here is plain
// Gaussian elimination; the dimensions in this project are single digits.
using Vector = std::vector<FieldElem>;
using Matrix = std::vector<Vector>;

Vector zero_vector(const FieldPtr& field, std::size_t n);
Vector add(const Vector& a, const Vector& b);
Vector scale(const FieldElem& c, const Vector& v);
bool equal(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

Matrix identity_matrix(const FieldPtr& field, std::size_t n);
Vector mat_vec(const Matrix& m, const Vector& v);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

std::size_t rank(Matrix m);

// Solve a x = b; nullopt when inconsistent. With several solutions returns
// the one with all free variables zero.
std::optional<Vector> solve(const Matrix& a, const Vector& b, const FieldPtr& field,
                            std::size_t cols);

// Basis of the right kernel {x : a x = 0}, one vector per free column,
// ordered by free-column index.
std::vector<Vector> kernel_basis(const Matrix& a, const FieldPtr& field, std::size_t cols);

std::optional<Matrix> inverse(const Matrix& m, const FieldPtr& field);

// Greedy maximal independent sublist, preserving input order; second member
// of the result maps each kept vector to its index in the input.
std::vector<std::size_t> independent_subset(const std::vector<Vector>& vs, const FieldPtr& field,
                                            std::size_t n);

// Coordinates of w in the given independent basis, if w lies in its span.
std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& w,
                                     const FieldPtr& field, std::size_t n);

}  // namespace wittforge

#endif
