#ifndef WITTFORGE_GF2K_HPP
#define WITTFORGE_GF2K_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "wittforge/errors.hpp"

namespace wittforge {

class FiniteField;
class FieldElem;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// GF(2^k) in polynomial basis with an explicit irreducible modulus.
///
/// The modulus is stored little-endian as bits of a uint32 (bit i = coefficient
/// of x^i, bit k set). Irreducibility is checked at construction by trial
/// division against every polynomial of degree <= k/2. Instances are immutable
/// and shared through FieldPtr; two handles denote the same field iff degree
/// and modulus agree bit for bit.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
 public:
  static FieldPtr make(unsigned k, std::uint32_t modulus_bits);
  // Smallest irreducible polynomial of degree k in the little-endian integer
  // encoding; deterministic, no table needed.
  static FieldPtr with_default_modulus(unsigned k);

  unsigned degree() const { return k_; }
  std::uint32_t modulus_bits() const { return modulus_; }
  std::uint64_t order() const { return std::uint64_t{1} << k_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_bits(std::uint32_t bits) const;

  bool same_field(const FiniteField& other) const {
    return k_ == other.k_ && modulus_ == other.modulus_;
  }

  // Raw arithmetic on bit patterns; FieldElem wraps these.
  std::uint32_t add_bits(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_bits(std::uint32_t a) const;

 private:
  FiniteField(unsigned k, std::uint32_t modulus);
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  void build_tables();

  unsigned k_;
  std::uint32_t modulus_;
  // log/exp tables for fields small enough to afford them (k <= 16); the hot
  // enumeration loops in the oracles live on these.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// One element of a FiniteField: a length-k bit vector of polynomial-basis
/// coordinates plus a handle to its field.
class FieldElem {
 public:
  FieldElem(FieldPtr field, std::uint32_t bits) : field_(std::move(field)), bits_(bits) {}

  const FieldPtr& field() const { return field_; }
  std::uint32_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }

  FieldElem operator+(const FieldElem& other) const;
  FieldElem operator*(const FieldElem& other) const;
  FieldElem& operator+=(const FieldElem& other) { return *this = *this + other; }
  FieldElem& operator*=(const FieldElem& other) { return *this = *this * other; }
  bool operator==(const FieldElem& other) const;
  bool operator!=(const FieldElem& other) const { return !(*this == other); }

  FieldElem inverse() const;  // DivisionByZero on 0
  FieldElem square() const { return *this * *this; }

 private:
  FieldPtr field_;
  std::uint32_t bits_;
};

// Strict ordering by coordinate vector (c0, c1, ...), c0 compared first.
// This is the tie-breaking order used everywhere a "least element" is chosen.
bool lex_less(const FieldElem& a, const FieldElem& b);

FieldElem pow(const FieldElem& a, std::uint64_t e);

// a^(2^(k-1)); total because the field is perfect. sqrt(a)^2 == a.
FieldElem sqrt_elem(const FieldElem& a);

// Absolute trace sum_{i<k} a^(2^i), always 0 or 1.
int trace(const FieldElem& a);

// Membership in the image of the Artin-Schreier map x -> x^2 - x;
// equivalent to trace(a) == 0.
bool in_wp_image(const FieldElem& a);

// Root of x^2 + x = b when trace(b) == 0 (the lex-least of the two roots),
// nullopt otherwise. Solved as an F2-linear system in the polynomial basis.
std::optional<FieldElem> solve_artin_schreier(const FieldElem& b);

// Lex-least element of trace 1 (the canonical norm-plane coefficient).
FieldElem least_trace_one(const FieldPtr& field);

// Coefficient pair (1, b) for the definite plane q(x)=1, q(y)=b, beta(x,y)=1
// modeling the norm form of the Artin-Schreier extension by t^2+t+b.
// Requires trace(b) == 1; throws Reducible otherwise.
std::pair<FieldElem, FieldElem> norm_form_coefficient(const FieldElem& b);

// Least d with a^(2^d) == a; divides the field degree.
unsigned element_degree(const FieldElem& a);

/// Field embedding GF(2^k) -> GF(2^km), fixed once per (source, target) pair.
/// The image of the source generator is the root of the source modulus in the
/// target with lexicographically least coordinate vector.
class Embedding {
 public:
  Embedding(FieldPtr source, FieldPtr target);  // NotASubfield if k does not divide km

  FieldElem apply(const FieldElem& a) const;
  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }

 private:
  FieldPtr source_;
  FieldPtr target_;
  std::vector<FieldElem> root_powers_;  // root^i for i < source degree
  bool identity_ = false;
};

// One-shot convenience wrapper around Embedding.
FieldElem embed(const FieldElem& a, const FieldPtr& target);

}  // namespace wittforge

#endif
