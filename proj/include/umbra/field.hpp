#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace umbra {

// Exact scalar. Over the rationals this is an arbitrary mpq_class;
// over a prime field the value is an integer residue in [0, p).
using Scalar = mpq_class;

// Ground field: the rationals (characteristic 0) or F_p for a prime p.
// All scalar arithmetic in the library goes through a Field so that a
// single dense-matrix code path serves both cases.
struct Field {
  long characteristic = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(long p);

  bool is_rational() const { return characteristic == 0; }
  bool operator==(const Field&) const = default;

  Scalar normalize(const Scalar& x) const;
  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  bool is_zero(const Scalar& a) const { return normalize(a) == 0; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long v) const { return normalize(Scalar(v)); }

  // "3/2", "-1", "2 mod 5" (the "mod p" suffix must match the field).
  std::optional<Scalar> parse(const std::string& text) const;
  std::string print(const Scalar& x) const;

  std::string name() const;                       // "q" or "fp:<p>"
  static std::optional<Field> from_name(const std::string& name);
};

bool is_prime(long p);

}  // namespace umbra
