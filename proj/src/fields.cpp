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

#include "isodet/fields.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace isodet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CompositeModulus: return "CompositeModulus";
    case ErrorCode::CharTwoUnsupported: return "CharTwoUnsupported";
    case ErrorCode::ResidueIsSquare: return "ResidueIsSquare";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::InvalidForm: return "InvalidForm";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::SignUndefinedForForm: return "SignUndefinedForForm";
    case ErrorCode::InsufficientWittIndex: return "InsufficientWittIndex";
    case ErrorCode::ConfigMismatch: return "ConfigMismatch";
    case ErrorCode::SymmetryMismatch: return "SymmetryMismatch";
    case ErrorCode::ExceptionalNeedsSign: return "ExceptionalNeedsSign";
    case ErrorCode::EigenvalueNotInField: return "EigenvalueNotInField";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InfiniteField: return "InfiniteField";
  }
  return "Unknown";
}

std::string_view to_string(FieldKind kind) noexcept {
  switch (kind) {
    case FieldKind::prime: return "prime";
    case FieldKind::quadratic_extension: return "quadratic-extension";
    case FieldKind::rationals: return "rationals";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr std::uint64_t kMaxModulus = (1ULL << 31) - 1;

void check_modulus(std::uint64_t p) {
  if (p == 2) fail(ErrorCode::CharTwoUnsupported, "characteristic 2");
  if (!is_prime(p)) fail(ErrorCode::CompositeModulus, std::to_string(p));
  if (p > kMaxModulus)
    fail(ErrorCode::CompositeModulus,
         "modulus " + std::to_string(p) + " exceeds 2^31 - 1");
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

bool euler_square(std::uint64_t a, std::uint64_t p) {
  a %= p;
  return a == 0 || pow_mod(a, (p - 1) / 2, p) == 1;
}

std::uint32_t smallest_nonresidue(std::uint32_t p) {
  for (std::uint32_t d = 2; d < p; ++d)
    if (!euler_square(d, p)) return d;
  return 0;  // unreachable for odd primes
}

// Tonelli-Shanks; a must be a non-zero square mod p.
std::uint64_t tonelli_shanks(std::uint64_t a, std::uint64_t p) {
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  const std::uint64_t z = smallest_nonresidue(static_cast<std::uint32_t>(p));
  std::uint64_t m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p),
                r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    fail(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace

FieldDescriptor field_create(FieldKind kind, std::uint64_t p,
                             std::optional<std::uint64_t> nonresidue) {
  switch (kind) {
    case FieldKind::rationals:
      return {FieldKind::rationals, 0, 0};
    case FieldKind::prime:
      check_modulus(p);
      return {FieldKind::prime, static_cast<std::uint32_t>(p), 0};
    case FieldKind::quadratic_extension: {
      check_modulus(p);
      std::uint64_t d;
      if (nonresidue) {
        d = *nonresidue % p;
        if (euler_square(d, p))
          fail(ErrorCode::ResidueIsSquare,
               std::to_string(*nonresidue) + " is a square mod " +
                   std::to_string(p));
      } else {
        d = smallest_nonresidue(static_cast<std::uint32_t>(p));
      }
      return {FieldKind::quadratic_extension, static_cast<std::uint32_t>(p),
              static_cast<std::uint32_t>(d)};
    }
  }
  fail(ErrorCode::ParseError, "unknown field kind");
}

std::string field_name(const FieldDescriptor& d) {
  switch (d.kind) {
    case FieldKind::prime: return "F_" + std::to_string(d.p);
    case FieldKind::quadratic_extension:
      return "F_" + std::to_string(d.p) + "^2(w^2=" +
             std::to_string(d.nonresidue) + ")";
    case FieldKind::rationals: return "Q";
  }
  return "?";
}

AnyField make_field(const FieldDescriptor& d) {
  switch (d.kind) {
    case FieldKind::prime: return PrimeField(d);
    case FieldKind::quadratic_extension: return QuadraticField(d);
    case FieldKind::rationals: return RationalField(d);
  }
  fail(ErrorCode::ParseError, "unknown field kind");
}

// --- F_p -------------------------------------------------------------------

Fp Fp::pow(std::uint64_t n) const {
  return {static_cast<std::uint32_t>(pow_mod(v_, n, p_)), p_};
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero");
  return pow(p_ - 2);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) { check_modulus(p); }

PrimeField::PrimeField(const FieldDescriptor& d) : PrimeField(d.p) {}

Fp PrimeField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r), p_};
}

bool PrimeField::is_square(Fp x) const { return euler_square(x.value(), p_); }

std::optional<Fp> PrimeField::sqrt(Fp x) const {
  if (x.value() == 0) return zero();
  std::uint64_t root = 0;
  if (std::uint64_t{p_} * p_ < 1'000'000) {
    bool found = false;
    for (std::uint64_t r = 1; r <= p_ / 2; ++r) {
      if (r * r % p_ == x.value()) {
        root = r;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  } else {
    if (!euler_square(x.value(), p_)) return std::nullopt;
    root = tonelli_shanks(x.value(), p_);
  }
  root = std::min<std::uint64_t>(root, p_ - root);
  return Fp(static_cast<std::uint32_t>(root), p_);
}

Fp PrimeField::parse(std::string_view text) const {
  return from_int(parse_int(text));
}

// --- F_{p^2} ---------------------------------------------------------------

Fp2 Fp2::inverse() const {
  // (a + bw)^-1 = (a - bw) / (a^2 - d b^2)
  const Fp a(a_, p_), b(b_, p_), d(d_, p_);
  const Fp norm = a * a - d * b * b;
  if (norm == Fp(0, p_)) throw std::domain_error("inverse of zero");
  const Fp n = norm.inverse();
  return {(a * n).value(), (-(b * n)).value(), p_, d_};
}

QuadraticField::QuadraticField(std::uint32_t p,
                               std::optional<std::uint32_t> nonresidue)
    : base_(p), d_(0) {
  std::optional<std::uint64_t> nr;
  if (nonresidue) nr = *nonresidue;
  d_ = field_create(FieldKind::quadratic_extension, p, nr).nonresidue;
}

QuadraticField::QuadraticField(const FieldDescriptor& d)
    : QuadraticField(d.p, d.nonresidue ? std::optional<std::uint32_t>(
                                             d.nonresidue)
                                       : std::nullopt) {}

std::optional<Fp2> QuadraticField::sqrt(const Fp2& x) const {
  const Fp a(x.a(), p()), b(x.b(), p()), d(d_, p());
  const Fp two = base_.from_int(2);
  if (x == zero()) return zero();
  std::optional<Fp2> root;
  if (x.b() == 0) {
    if (auto r = base_.sqrt(a)) {
      root = make(r->value(), 0);
    } else {
      // a is a non-residue, so a/d is a residue: (c w)^2 = c^2 d = a.
      auto c = base_.sqrt(a / d);
      root = make(0, c->value());
    }
  } else {
    // (u + v w)^2 = a + b w  with  u^2 + d v^2 = a,  2uv = b.
    const auto n = base_.sqrt(a * a - d * b * b);
    if (!n) return std::nullopt;
    for (const Fp cand : {(a + *n) / two, (a - *n) / two}) {
      auto u = base_.sqrt(cand);
      if (!u || u->value() == 0) continue;
      const Fp v = b / (two * *u);
      Fp2 r = make(u->value(), v.value());
      if (r * r == x) {
        root = r;
        break;
      }
    }
    if (!root) return std::nullopt;
  }
  const Fp2 neg = -*root;
  if (std::pair(neg.a(), neg.b()) < std::pair(root->a(), root->b()))
    return neg;
  return root;
}

std::string QuadraticField::render(const Fp2& x) const {
  if (x.b() == 0) return std::to_string(x.a());
  return std::to_string(x.a()) + "+" + std::to_string(x.b()) + "*w";
}

Fp2 QuadraticField::parse(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorCode::ParseError, "empty scalar");
  Fp2 total = zero();
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term(s.data() + pos, end - pos);
    bool negative = false;
    if (term.front() == '+' || term.front() == '-') {
      negative = term.front() == '-';
      term.remove_prefix(1);
    }
    Fp2 value;
    if (term == "w") {
      value = w();
    } else if (term.size() > 2 && term.substr(term.size() - 2) == "*w") {
      value = from_int(parse_int(term.substr(0, term.size() - 2))) * w();
    } else {
      value = from_int(parse_int(term));
    }
    total += negative ? -value : value;
    pos = end;
  }
  return total;
}

// --- Q -----------------------------------------------------------------------

std::optional<Rational> RationalField::sqrt(const Rational& x) const {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Rational RationalField::random(Rng& rng) const {
  Rational r(static_cast<long>(rng.between(-9, 9)),
             static_cast<unsigned long>(rng.between(1, 4)));
  r.canonicalize();
  return r;
}

Rational RationalField::random_nonzero(Rng& rng) const {
  Rational r = random(rng);
  while (r == 0) r = random(rng);
  return r;
}

std::string RationalField::render(const Rational& x) const {
  return x.get_str(10);
}

Rational RationalField::parse(std::string_view text) const {
  std::string s(trim(text));
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  const auto check = [](std::string_view digits) {
    std::string_view d = digits;
    if (!d.empty() && d.front() == '-') d.remove_prefix(1);
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };
  const std::string num = s.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check(num) || !check(den) || den.front() == '-')
    fail(ErrorCode::ParseError, "not a rational: '" + s + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator: '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace isodet
