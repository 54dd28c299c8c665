// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/scalar.hpp"

#include <ostream>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % mpz_class(std::to_string(p));
  if (m < 0) m += mpz_class(std::to_string(p));
  return std::stoull(m.get_str());
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (p % d == 0) return p == d;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Scalar Scalar::residue(std::int64_t v, std::uint64_t p) {
  if (p == 0) return Scalar(static_cast<long>(v));
  Scalar s;
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += static_cast<std::int64_t>(p);
  s.r_ = static_cast<std::uint64_t>(m);
  s.p_ = p;
  return s;
}

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::parse(std::string_view text, std::uint64_t p) {
  std::string t(text);
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty scalar");
  auto valid = [](const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::ParseError, "bad scalar '" + t + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + t + "'");
  Scalar s(mpq_class(n, d));
  return p ? s.to_field(p) : s;
}

Scalar Scalar::to_field(std::uint64_t p) const {
  if (p == p_) return *this;
  if (p_ != 0) throw Error(ErrorKind::BadField, "cannot move F_" + std::to_string(p_) + " value to another field");
  Scalar s;
  s.p_ = p;
  std::uint64_t den = reduce(q_.get_den(), p);
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
  s.r_ = mulmod(reduce(q_.get_num(), p), powmod(den, p - 2, p), p);
  return s;
}

void Scalar::align(const Scalar& o) {
  if (p_ == o.p_ || o.p_ == 0) return;
  if (p_ != 0) throw Error(ErrorKind::BadField, "mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
  *this = to_field(o.p_);
}

std::string Scalar::str() const {
  if (p_) return std::to_string(r_);
  return q_.get_str();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (p_) {
    Scalar s;
    s.p_ = p_;
    s.r_ = powmod(r_, p_ - 2, p_);
    return s;
  }
  return Scalar(mpq_class(1) / q_);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_)
    s.r_ = r_ ? p_ - r_ : 0;
  else
    s.q_ = -q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  align(o);
  if (!p_) {
    q_ += o.q_;
  } else {
    std::uint64_t v = o.p_ ? o.r_ : o.to_field(p_).r_;
    r_ = (r_ + v) % p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  align(o);
  if (!p_) {
    q_ *= o.q_;
  } else {
    std::uint64_t v = o.p_ ? o.r_ : o.to_field(p_).r_;
    r_ = mulmod(r_, v, p_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
  if (a.p_ && b.p_) return false;
  if (a.p_) return a.r_ == b.to_field(a.p_).r_;
  return b.r_ == a.to_field(b.p_).r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qhopf
