// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

enum class ErrorKind {
  ParseError,
  HashMismatch,
  BadField,
  UsageError,
  ShapeMismatch,
  DivisionByZero,
  NotInvertible,
  GaugeNotNormalized,
  AntipodeNotInvertible,
  AntipodeRequired,
  WitnessNotNormalized,
  MixedBase,
  VariantMismatch,
  NotRational,
  Internal,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qhopf
