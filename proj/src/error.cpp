// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/error.hpp"

namespace qhopf {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::HashMismatch: return "HashMismatch";
    case ErrorKind::BadField: return "BadField";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::GaugeNotNormalized: return "GaugeNotNormalized";
    case ErrorKind::AntipodeNotInvertible: return "AntipodeNotInvertible";
    case ErrorKind::AntipodeRequired: return "AntipodeRequired";
    case ErrorKind::WitnessNotNormalized: return "WitnessNotNormalized";
    case ErrorKind::MixedBase: return "MixedBase";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace qhopf
