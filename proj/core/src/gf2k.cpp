#include "wittforge/gf2k.hpp"

#include <algorithm>
#include <bit>

namespace wittforge {

namespace {

unsigned poly_degree(std::uint64_t p) {
  // degree of a nonzero GF(2)[x] polynomial in bit encoding
  return 63u - static_cast<unsigned>(std::countl_zero(p));
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const unsigned dm = poly_degree(m);
  while (a != 0 && poly_degree(a) >= dm) {
    a ^= m << (poly_degree(a) - dm);
  }
  return a;
}

bool poly_irreducible(std::uint32_t p, unsigned k) {
  if (k == 0) return false;
  if ((p & 1u) == 0) return k == 1;  // divisible by x
  for (std::uint64_t d = 2; poly_degree(d) <= k / 2; ++d) {
    if (poly_mod(p, d) == 0) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(unsigned k, std::uint32_t modulus) : k_(k), modulus_(modulus) {
  if (k == 0 || k > 24) fail("InvalidField", "extension degree must be in [1, 24]");
  if ((modulus >> k) != 1u)
    fail("InvalidField", "modulus must have degree k with leading coefficient 1");
  if (!poly_irreducible(modulus, k))
    fail("InvalidField", "modulus is reducible over GF(2)");
  if (k <= 16) build_tables();
}

FieldPtr FiniteField::make(unsigned k, std::uint32_t modulus_bits) {
  return std::shared_ptr<const FiniteField>(new FiniteField(k, modulus_bits));
}

FieldPtr FiniteField::with_default_modulus(unsigned k) {
  if (k == 0 || k > 24) fail("InvalidField", "extension degree must be in [1, 24]");
  for (std::uint32_t p = std::uint32_t{1} << k;; ++p) {
    if (poly_irreducible(p, k)) return make(k, p);
  }
}

std::uint32_t FiniteField::mul_slow(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t acc = 0;
  for (unsigned j = 0; j < k_; ++j) {
    if ((b >> j) & 1u) acc ^= static_cast<std::uint64_t>(a) << j;
  }
  if (acc == 0) return 0;
  return static_cast<std::uint32_t>(poly_mod(acc, modulus_));
}

void FiniteField::build_tables() {
  const std::uint32_t n = static_cast<std::uint32_t>(order()) - 1;
  log_.assign(order(), 0);
  if (n == 1) {  // GF(2)
    exp_ = {1};
    return;
  }
  for (std::uint32_t cand = 2; cand < order(); ++cand) {
    exp_.assign(n, 0);
    std::uint32_t cur = 1;
    bool generator = true;
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = cur;
      cur = mul_slow(cur, cand);
      if (cur == 1 && i + 1 < n) {
        generator = false;
        break;
      }
    }
    if (generator && cur == 1) {
      for (std::uint32_t i = 0; i < n; ++i) log_[exp_[i]] = i;
      return;
    }
  }
  throw LogicError("no multiplicative generator found; field construction is broken");
}

std::uint32_t FiniteField::mul_bits(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    std::uint32_t s = log_[a] + log_[b];
    const std::uint32_t n = static_cast<std::uint32_t>(order()) - 1;
    if (s >= n) s -= n;
    return exp_[s];
  }
  return mul_slow(a, b);
}

std::uint32_t FiniteField::inv_bits(std::uint32_t a) const {
  if (a == 0) fail("DivisionByZero", "inverse of zero");
  if (!exp_.empty()) {
    const std::uint32_t n = static_cast<std::uint32_t>(order()) - 1;
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : n - l];
  }
  // a^(2^k - 2) by square and multiply
  std::uint32_t result = 1, base = a;
  std::uint64_t e = order() - 2;
  while (e > 0) {
    if (e & 1) result = mul_bits(result, base);
    base = mul_bits(base, base);
    e >>= 1;
  }
  return result;
}

FieldElem FiniteField::zero() const { return FieldElem(shared_from_this(), 0); }
FieldElem FiniteField::one() const { return FieldElem(shared_from_this(), 1); }

FieldElem FiniteField::from_bits(std::uint32_t bits) const {
  if (bits >= order()) fail("InvalidField", "element bits out of range for this field");
  return FieldElem(shared_from_this(), bits);
}

namespace {

void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (!a.field()->same_field(*b.field()))
    fail("MixedFields", "operands belong to different fields");
}

}  // namespace

FieldElem FieldElem::operator+(const FieldElem& other) const {
  require_same_field(*this, other);
  return FieldElem(field_, field_->add_bits(bits_, other.bits_));
}

FieldElem FieldElem::operator*(const FieldElem& other) const {
  require_same_field(*this, other);
  return FieldElem(field_, field_->mul_bits(bits_, other.bits_));
}

bool FieldElem::operator==(const FieldElem& other) const {
  require_same_field(*this, other);
  return bits_ == other.bits_;
}

FieldElem FieldElem::inverse() const { return FieldElem(field_, field_->inv_bits(bits_)); }

bool lex_less(const FieldElem& a, const FieldElem& b) {
  const std::uint32_t d = a.bits() ^ b.bits();
  if (d == 0) return false;
  const unsigned i = static_cast<unsigned>(std::countr_zero(d));
  return ((a.bits() >> i) & 1u) == 0;
}

FieldElem pow(const FieldElem& a, std::uint64_t e) {
  FieldElem result = a.field()->one();
  FieldElem base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    base = base.square();
    e >>= 1;
  }
  return result;
}

FieldElem sqrt_elem(const FieldElem& a) {
  FieldElem r = a;
  for (unsigned i = 1; i < a.field()->degree(); ++i) r = r.square();
  return r;
}

int trace(const FieldElem& a) {
  FieldElem acc = a;
  FieldElem cur = a;
  for (unsigned i = 1; i < a.field()->degree(); ++i) {
    cur = cur.square();
    acc += cur;
  }
  if (acc.bits() > 1) throw LogicError("trace escaped the prime field");
  return static_cast<int>(acc.bits());
}

bool in_wp_image(const FieldElem& a) { return trace(a) == 0; }

std::optional<FieldElem> solve_artin_schreier(const FieldElem& b) {
  if (trace(b) != 0) return std::nullopt;
  const FieldPtr& f = b.field();
  const unsigned k = f->degree();
  // x -> x^2 + x is F2-linear; set up its matrix column by column and solve.
  // Rows are stored as bit masks over the k columns, with column k holding b.
  std::vector<std::uint64_t> rows(k, 0);
  for (unsigned col = 0; col < k; ++col) {
    const std::uint32_t e = std::uint32_t{1} << col;
    const std::uint32_t image = f->mul_bits(e, e) ^ e;
    for (unsigned row = 0; row < k; ++row) {
      if ((image >> row) & 1u) rows[row] |= std::uint64_t{1} << col;
    }
  }
  for (unsigned row = 0; row < k; ++row) {
    if ((b.bits() >> row) & 1u) rows[row] |= std::uint64_t{1} << k;
  }
  std::vector<int> pivot_of_col(k, -1);
  unsigned r = 0;
  for (unsigned col = 0; col < k && r < k; ++col) {
    unsigned p = r;
    while (p < k && ((rows[p] >> col) & 1u) == 0) ++p;
    if (p == k) continue;
    std::swap(rows[r], rows[p]);
    for (unsigned i = 0; i < k; ++i) {
      if (i != r && ((rows[i] >> col) & 1u)) rows[i] ^= rows[r];
    }
    pivot_of_col[col] = static_cast<int>(r);
    ++r;
  }
  std::uint32_t x = 0;
  for (unsigned row = r; row < k; ++row) {
    if ((rows[row] >> k) & 1u) throw LogicError("trace-0 Artin-Schreier equation unsolvable");
  }
  for (unsigned col = 0; col < k; ++col) {
    if (pivot_of_col[col] >= 0 && ((rows[pivot_of_col[col]] >> k) & 1u)) x |= std::uint32_t{1} << col;
  }
  // The other root is x+1; pick the lex-least (constant coefficient 0).
  if (x & 1u) x ^= 1u;
  FieldElem root = f->from_bits(x);
  if (root.square() + root != b) throw LogicError("Artin-Schreier solver produced a non-root");
  return root;
}

FieldElem least_trace_one(const FieldPtr& field) {
  std::optional<FieldElem> best;
  for (std::uint64_t i = 0; i < field->order(); ++i) {
    FieldElem e = field->from_bits(static_cast<std::uint32_t>(i));
    if (trace(e) == 1 && (!best || lex_less(e, *best))) best = e;
  }
  if (!best) throw LogicError("no trace-1 element; trace map is broken");
  return *best;
}

std::pair<FieldElem, FieldElem> norm_form_coefficient(const FieldElem& b) {
  if (trace(b) != 1)
    fail("Reducible", "t^2 + t + b splits: trace(b) = 0 gives no definite plane");
  return {b.field()->one(), b};
}

unsigned element_degree(const FieldElem& a) {
  const unsigned k = a.field()->degree();
  for (unsigned d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    FieldElem x = a;
    for (unsigned i = 0; i < d; ++i) x = x.square();
    if (x == a) return d;
  }
  return k;
}

Embedding::Embedding(FieldPtr source, FieldPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  const unsigned k = source_->degree();
  const unsigned km = target_->degree();
  if (km % k != 0)
    fail("NotASubfield", "source degree does not divide target degree");
  if (source_->same_field(*target_)) {
    identity_ = true;
    return;
  }
  // Root of the source modulus in the target, lex-least coordinate vector.
  std::optional<FieldElem> root;
  const std::uint32_t m = source_->modulus_bits();
  for (std::uint64_t i = 0; i < target_->order(); ++i) {
    FieldElem x = target_->from_bits(static_cast<std::uint32_t>(i));
    FieldElem acc = target_->zero();
    for (int j = static_cast<int>(k); j >= 0; --j) {
      acc = acc * x;
      if ((m >> j) & 1u) acc += target_->one();
    }
    if (acc.is_zero() && (!root || lex_less(x, *root))) root = x;
  }
  if (!root) throw LogicError("source modulus has no root in the target field");
  root_powers_.reserve(k);
  FieldElem p = target_->one();
  for (unsigned i = 0; i < k; ++i) {
    root_powers_.push_back(p);
    p = p * *root;
  }
}

FieldElem Embedding::apply(const FieldElem& a) const {
  if (!a.field()->same_field(*source_))
    fail("MixedFields", "element does not belong to the embedding's source field");
  if (identity_) return target_->from_bits(a.bits());
  FieldElem acc = target_->zero();
  for (unsigned i = 0; i < source_->degree(); ++i) {
    if ((a.bits() >> i) & 1u) acc += root_powers_[i];
  }
  return acc;
}

FieldElem embed(const FieldElem& a, const FieldPtr& target) {
  return Embedding(a.field(), target).apply(a);
}

}  // namespace wittforge
