// Copyright 2026 The isodet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file fields.hpp
 * @brief Exact scalar fields: F_p, F_{p^2} = F_p(w) with w^2 = d, and Q.
 *
 * Every field type models the ExactField concept below: it owns the
 * parameters (modulus, non-residue) and hands out self-contained Scalar
 * values. Scalars carry their modulus so the usual arithmetic operators
 * work on them directly; mixing scalars of different fields is a logic
 * error and is not checked on the hot path.
 *
 * Characteristic 2 is rejected everywhere.
 */

#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "isodet/error.hpp"
#include "isodet/random.hpp"

namespace isodet {

enum class FieldKind { prime, quadratic_extension, rationals };

std::string_view to_string(FieldKind kind) noexcept;

struct FieldDescriptor {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t p = 0;           ///< absent (0) for rationals
  std::uint32_t nonresidue = 0;  ///< extension only

  friend bool operator==(const FieldDescriptor&,
                         const FieldDescriptor&) = default;
};

bool is_prime(std::uint64_t n) noexcept;

/// Validates the parameters and returns a descriptor. For extensions an
/// absent non-residue is replaced by the smallest one.
FieldDescriptor field_create(FieldKind kind, std::uint64_t p = 0,
                             std::optional<std::uint64_t> nonresidue = {});

/// Short human name: "F_5", "F_7^2(w^2=3)", "Q".
std::string field_name(const FieldDescriptor& d);

// ---------------------------------------------------------------------------
// F_p

class Fp {
 public:
  Fp() = default;
  Fp(std::uint32_t value, std::uint32_t modulus) : v_(value), p_(modulus) {}

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return p_; }

  friend Fp operator+(Fp a, Fp b) {
    std::uint32_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return {s, a.p_};
  }
  friend Fp operator-(Fp a, Fp b) {
    return {a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_};
  }
  friend Fp operator-(Fp a) { return {a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_}; }
  friend Fp operator*(Fp a, Fp b) {
    return {static_cast<std::uint32_t>(std::uint64_t{a.v_} * b.v_ % a.p_),
            a.p_};
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  Fp pow(std::uint64_t n) const;
  /// Throws std::domain_error on zero.
  Fp inverse() const;

 private:
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

class PrimeField {
 public:
  using Scalar = Fp;
  static constexpr bool is_finite = true;

  explicit PrimeField(std::uint32_t p);
  explicit PrimeField(const FieldDescriptor& d);

  std::uint32_t p() const noexcept { return p_; }
  std::uint64_t size() const noexcept { return p_; }
  FieldDescriptor descriptor() const { return {FieldKind::prime, p_, 0}; }

  Fp zero() const { return {0, p_}; }
  Fp one() const { return {1, p_}; }
  Fp from_int(std::int64_t n) const;

  /// The i-th element in enumeration order (i < size()).
  Fp element(std::uint64_t i) const {
    return {static_cast<std::uint32_t>(i), p_};
  }
  std::uint64_t index(Fp x) const { return x.value(); }

  std::optional<Fp> sqrt(Fp x) const;
  bool is_square(Fp x) const;

  Fp random(Rng& rng) const {
    return {static_cast<std::uint32_t>(rng.below(p_)), p_};
  }
  Fp random_nonzero(Rng& rng) const {
    return {static_cast<std::uint32_t>(1 + rng.below(p_ - 1)), p_};
  }

  std::string render(Fp x) const { return std::to_string(x.value()); }
  Fp parse(std::string_view text) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// F_{p^2} = F_p(w), w^2 = d

class Fp2 {
 public:
  Fp2() = default;
  Fp2(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t d)
      : a_(a), b_(b), p_(p), d_(d) {}

  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }

  friend Fp2 operator+(const Fp2& x, const Fp2& y) {
    return {add(x.a_, y.a_, x.p_), add(x.b_, y.b_, x.p_), x.p_, x.d_};
  }
  friend Fp2 operator-(const Fp2& x, const Fp2& y) {
    return {sub(x.a_, y.a_, x.p_), sub(x.b_, y.b_, x.p_), x.p_, x.d_};
  }
  friend Fp2 operator-(const Fp2& x) {
    return {sub(0, x.a_, x.p_), sub(0, x.b_, x.p_), x.p_, x.d_};
  }
  friend Fp2 operator*(const Fp2& x, const Fp2& y) {
    const std::uint64_t p = x.p_;
    const std::uint64_t bb = std::uint64_t{x.b_} * y.b_ % p;
    const std::uint64_t re = (std::uint64_t{x.a_} * y.a_ + bb * x.d_) % p;
    const std::uint64_t im =
        (std::uint64_t{x.a_} * y.b_ + std::uint64_t{x.b_} * y.a_) % p;
    return {static_cast<std::uint32_t>(re), static_cast<std::uint32_t>(im),
            x.p_, x.d_};
  }
  friend Fp2 operator/(const Fp2& x, const Fp2& y) { return x * y.inverse(); }
  Fp2& operator+=(const Fp2& y) { return *this = *this + y; }
  Fp2& operator-=(const Fp2& y) { return *this = *this - y; }
  Fp2& operator*=(const Fp2& y) { return *this = *this * y; }
  Fp2& operator/=(const Fp2& y) { return *this = *this / y; }

  friend bool operator==(const Fp2& x, const Fp2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  Fp2 inverse() const;

 private:
  static std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  static std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
  }

  std::uint32_t a_ = 0, b_ = 0, p_ = 0, d_ = 0;
};

class QuadraticField {
 public:
  using Scalar = Fp2;
  static constexpr bool is_finite = true;

  explicit QuadraticField(std::uint32_t p,
                          std::optional<std::uint32_t> nonresidue = {});
  explicit QuadraticField(const FieldDescriptor& d);

  std::uint32_t p() const noexcept { return base_.p(); }
  std::uint32_t nonresidue() const noexcept { return d_; }
  std::uint64_t size() const noexcept {
    return std::uint64_t{base_.p()} * base_.p();
  }
  FieldDescriptor descriptor() const {
    return {FieldKind::quadratic_extension, base_.p(), d_};
  }

  Fp2 zero() const { return make(0, 0); }
  Fp2 one() const { return make(1, 0); }
  Fp2 w() const { return make(0, 1); }
  Fp2 from_int(std::int64_t n) const {
    return make(base_.from_int(n).value(), 0);
  }
  Fp2 make(std::uint32_t a, std::uint32_t b) const {
    return {a, b, base_.p(), d_};
  }

  Fp2 element(std::uint64_t i) const {
    return make(static_cast<std::uint32_t>(i % p()),
                static_cast<std::uint32_t>(i / p()));
  }
  std::uint64_t index(const Fp2& x) const {
    return x.a() + std::uint64_t{x.b()} * p();
  }

  std::optional<Fp2> sqrt(const Fp2& x) const;

  Fp2 random(Rng& rng) const { return element(rng.below(size())); }
  Fp2 random_nonzero(Rng& rng) const {
    return element(1 + rng.below(size() - 1));
  }

  std::string render(const Fp2& x) const;
  Fp2 parse(std::string_view text) const;

  friend bool operator==(const QuadraticField& a, const QuadraticField& b) {
    return a.p() == b.p() && a.d_ == b.d_;
  }

 private:
  PrimeField base_;
  std::uint32_t d_;
};

// ---------------------------------------------------------------------------
// Q

using Rational = mpq_class;

class RationalField {
 public:
  using Scalar = Rational;
  static constexpr bool is_finite = false;

  RationalField() = default;
  explicit RationalField(const FieldDescriptor&) {}

  FieldDescriptor descriptor() const { return {FieldKind::rationals, 0, 0}; }

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t n) const {
    return Rational(static_cast<long>(n));
  }

  /// Returns the non-negative root when x is the square of a rational.
  std::optional<Rational> sqrt(const Rational& x) const;

  /// Small numerators and denominators keep exact products readable.
  Rational random(Rng& rng) const;
  Rational random_nonzero(Rng& rng) const;

  std::string render(const Rational& x) const;
  Rational parse(std::string_view text) const;

  friend bool operator==(const RationalField&, const RationalField&) {
    return true;
  }
};

template <class F>
concept ExactField = requires(const F& field, const typename F::Scalar& x,
                              Rng& rng, std::string_view text) {
  { field.zero() } -> std::same_as<typename F::Scalar>;
  { field.one() } -> std::same_as<typename F::Scalar>;
  { field.from_int(std::int64_t{1}) } -> std::same_as<typename F::Scalar>;
  { field.sqrt(x) } -> std::same_as<std::optional<typename F::Scalar>>;
  { field.render(x) } -> std::same_as<std::string>;
  { field.parse(text) } -> std::same_as<typename F::Scalar>;
  { field.random(rng) } -> std::same_as<typename F::Scalar>;
  { field.descriptor() } -> std::same_as<FieldDescriptor>;
  { x + x } -> std::convertible_to<typename F::Scalar>;
  { x * x } -> std::convertible_to<typename F::Scalar>;
  { x / x } -> std::convertible_to<typename F::Scalar>;
  { x == x } -> std::convertible_to<bool>;
};

template <class F>
concept FiniteField = ExactField<F> && F::is_finite;

static_assert(ExactField<PrimeField>);
static_assert(ExactField<QuadraticField>);
static_assert(ExactField<RationalField>);

using AnyField = std::variant<PrimeField, QuadraticField, RationalField>;

AnyField make_field(const FieldDescriptor& d);

template <ExactField F>
bool is_zero(const F& field, const typename F::Scalar& x) {
  return x == field.zero();
}

}  // namespace isodet
