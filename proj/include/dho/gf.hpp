#pragma once

// Finite fields GF(p^k) with runtime-chosen modulus.
//
// Elements are packed integer indices in [0, p^k): the polynomial
// c_0 + c_1 x + ... + c_{k-1} x^{k-1} is stored as sum c_i p^i.  In
// characteristic 2 this is exactly the bit representation of the
// coefficient vector, and addition is XOR.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dho/error.hpp"

namespace dho {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

// Returns (p, m) with q = p^m, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

class Field {
 public:
  // GF(2).
  Field();

  // Throws NonPrimeCharacteristic, ReducibleModulus, FieldTooLarge or
  // InvalidArgument (modulus not monic of degree k).  The modulus is a
  // coefficient vector from the constant term up, including the leading 1.
  static Field make(std::uint32_t p, std::uint32_t k,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  // GF(q) for a prime power q with the default modulus.
  static Field of_order(std::uint64_t q);

  std::uint32_t characteristic() const { return impl_->p; }
  std::uint32_t degree() const { return impl_->k; }
  std::uint32_t order() const { return impl_->order; }
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }
  bool is_binary() const { return impl_->p == 2; }

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }

  // The residue class of x, a root of the modulus.
  Elem x() const;

  Elem add(Elem a, Elem b) const {
    if (impl_->p == 2) return a ^ b;
    if (!impl_->add_table.empty()) return impl_->add_table[a * impl_->order + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return impl_->exp[impl_->log[a] + impl_->log[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  // x -> x^(p^e) with e reduced mod k; negative e gives inverse powers.
  Elem frobenius(Elem a, std::int64_t e) const;

  // Relative trace to GF(p^sub_degree); throws NonDivisorDegree.
  Elem trace(Elem a, std::uint32_t sub_degree = 1) const;

  // Image of an integer under Z -> GF(p).
  Elem from_int(std::int64_t n) const;

  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(const std::vector<std::uint32_t>& c) const;

  // Elements of the subfield GF(p^sub_degree), ascending.
  std::vector<Elem> subfield(std::uint32_t sub_degree) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
  }

 private:
  struct Impl {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t order = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<Elem> exp;           // length 2(order-1)
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<Elem> add_table;     // odd characteristic, small order only
    std::vector<Elem> neg_table;
    std::vector<std::uint32_t> pow_p;  // p^i for i < k
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  Elem add_slow(Elem a, Elem b) const;

  std::shared_ptr<const Impl> impl_;
};

// Smallest monic irreducible of degree k over GF(p), ordered by the packed
// index of its lower coefficients.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k);

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

// Element value bound to its field, for arithmetic written with operators.
class FieldElement {
 public:
  FieldElement(Field field, Elem rep) : field_(std::move(field)), rep_(rep) {
    if (rep_ >= field_.order()) fail(ErrorKind::InvalidArgument, "element index out of range");
  }

  const Field& field() const { return field_; }
  Elem rep() const { return rep_; }

  FieldElement inv() const { return {field_, field_.inv(rep_)}; }
  FieldElement pow(std::int64_t e) const { return {field_, field_.pow(rep_, e)}; }
  FieldElement frobenius(std::int64_t e) const { return {field_, field_.frobenius(rep_, e)}; }
  FieldElement trace(std::uint32_t sub_degree = 1) const {
    return {field_, field_.trace(rep_, sub_degree)};
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.add(a.rep_, b.rep_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.sub(a.rep_, b.rep_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.mul(a.rep_, b.rep_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.div(a.rep_, b.rep_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.rep_ == b.rep_;
  }

 private:
  static void check_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_)) fail(ErrorKind::MixedFields, "operands belong to different fields");
  }

  Field field_;
  Elem rep_;
};

}  // namespace dho
