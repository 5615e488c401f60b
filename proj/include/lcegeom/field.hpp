#pragma once

#include <cstdint>
#include <memory>
#include <ostream>

#include "lcegeom/error.hpp"

namespace lcegeom {

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Prime field F_q with q < 2^31. Elements are canonical residues in [0, q)
/// held as plain 32-bit integers; products fit in 64 bits.
///
/// The multiplicative generator is the smallest primitive root. Discrete
/// logarithms use a full table for q < 2^16 and baby-step/giant-step above
/// that; the baby-step table is built on first use and shared by copies.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31);
  static constexpr value_type kJacobianPrime = 2147483647u;  // 2^31 - 1

  explicit PrimeField(std::uint64_t q);

  value_type modulus() const noexcept { return q_; }
  value_type generator() const noexcept { return g_; }

  value_type reduce(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(q_);
    return static_cast<value_type>(r < 0 ? r + q_ : r);
  }
  value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= q_ ? s - q_ : s);
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + q_ - b);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : q_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(std::uint64_t{a} * b % q_);
  }
  value_type pow(value_type a, std::uint64_t e) const noexcept;
  // Negative exponents invert first; throws DivisionByZero for 0^(e<0).
  value_type pow_signed(value_type a, std::int64_t e) const;
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  // Multiplicative order of a nonzero element.
  std::uint64_t order(value_type a) const;
  // Exponent e in [0, q-1) with generator()^e == a.
  std::uint64_t dlog(value_type a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.q_ == b.q_;
  }

 private:
  struct DlogCache;
  const DlogCache& dlog_cache() const;

  value_type q_;
  value_type g_;
  std::shared_ptr<DlogCache> cache_;
};

// Validating factory: CompositeModulus for non-primes, BadParams outside [2, 2^31).
PrimeField make_field(std::uint64_t q);

/// A field element bound to its field. Convenience wrapper for public APIs;
/// matrices and polynomials store raw residues. Holds a non-owning pointer,
/// so the field must outlive the element.
class Fq {
 public:
  Fq(const PrimeField& field, std::int64_t value) : field_(&field), value_(field.reduce(value)) {}

  const PrimeField& field() const noexcept { return *field_; }
  PrimeField::value_type value() const noexcept { return value_; }

  Fq operator+(Fq o) const { return {*field_, field_->add(value_, o.value_), tag{}}; }
  Fq operator-(Fq o) const { return {*field_, field_->sub(value_, o.value_), tag{}}; }
  Fq operator*(Fq o) const { return {*field_, field_->mul(value_, o.value_), tag{}}; }
  Fq operator/(Fq o) const { return {*field_, field_->div(value_, o.value_), tag{}}; }
  Fq operator-() const { return {*field_, field_->neg(value_), tag{}}; }

  friend bool operator==(Fq a, Fq b) noexcept { return a.value_ == b.value_; }
  friend std::ostream& operator<<(std::ostream& os, Fq a) { return os << a.value_; }

 private:
  struct tag {};
  Fq(const PrimeField& field, PrimeField::value_type v, tag) : field_(&field), value_(v) {}

  const PrimeField* field_;
  PrimeField::value_type value_;
};

Fq inv(Fq a);
std::uint64_t dlog(Fq a);

}  // namespace lcegeom
