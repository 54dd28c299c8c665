// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qhopf {

// Element of Q (modulus 0) or of F_p. Rational values coerce into F_p when
// combined with a residue.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  static Scalar residue(std::int64_t v, std::uint64_t p);
  static Scalar ratio(long num, long den);
  // "a", "-a/b" over Q, or an integer residue when p != 0.
  static Scalar parse(std::string_view text, std::uint64_t p = 0);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }
  const mpq_class& rational() const { return q_; }
  std::uint64_t value_mod() const { return r_; }
  Scalar to_field(std::uint64_t p) const;

  std::string str() const;

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void align(const Scalar& o);

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_prime(std::uint64_t p);

}  // namespace qhopf
