#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace omega {

/// Thrown when input data is malformed: shape or field mismatches, bad JSON
/// values, non-prime moduli.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation's precondition on otherwise well-formed input is
/// violated, e.g. asking for Kähler differentials of a noncommutative algebra.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when typed construction finds an axiom violation in its input.
class AxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Field elements are stored as GMP rationals. Over GF(p) only the canonical
/// representatives 0..p-1 (denominator 1) ever appear.
using Scalar = mpq_class;

/// The base field: either Q or GF(p) for a prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidInput unless p is prime.
  static Field prime(std::uint64_t p);

  [[nodiscard]] bool is_rational() const { return p_ == 0; }
  /// 0 for Q.
  [[nodiscard]] std::uint64_t characteristic() const { return p_; }

  [[nodiscard]] Scalar from_int(long v) const;
  [[nodiscard]] Scalar zero() const { return Scalar(0); }
  [[nodiscard]] Scalar one() const { return Scalar(1); }

  [[nodiscard]] Scalar add(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a + b;
    return reduce(a + b);
  }
  [[nodiscard]] Scalar sub(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a - b;
    return reduce(a - b);
  }
  [[nodiscard]] Scalar mul(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a * b;
    return reduce(a * b);
  }
  [[nodiscard]] Scalar neg(const Scalar& a) const {
    if (p_ == 0) return -a;
    return reduce(-a);
  }
  /// Throws std::domain_error on zero.
  [[nodiscard]] Scalar inv(const Scalar& a) const;
  [[nodiscard]] Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// acc -= f * x, in place.
  void sub_mul(Scalar& acc, const Scalar& f, const Scalar& x) const {
    acc -= f * x;
    if (p_ != 0) acc = reduce(acc);
  }
  /// acc += f * x, in place.
  void add_mul(Scalar& acc, const Scalar& f, const Scalar& x) const {
    acc += f * x;
    if (p_ != 0) acc = reduce(acc);
  }

  /// Maps an arbitrary rational into the field (fractions are inverted mod p).
  [[nodiscard]] Scalar embed(const Scalar& q) const;

  /// Accepts "a", "-a", "a/b". Over GF(p) the value is reduced mod p.
  [[nodiscard]] Scalar parse(std::string_view text) const;
  /// Canonical form: "a/b" with b > 0 and gcd 1, "a" for integers; GF(p)
  /// elements as decimals in [0, p).
  [[nodiscard]] std::string format(const Scalar& a) const;
  /// "Q" or "GF(p)".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  [[nodiscard]] Scalar reduce(const Scalar& v) const;

  std::uint64_t p_;
};

[[nodiscard]] bool is_prime(std::uint64_t n);

}  // namespace omega
