// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/tensor.hpp"

namespace qhopf {

struct CheckRecord {
  std::string id;
  bool pass = true;
  Index witness;
  std::optional<Tensor> lhs, rhs;
  bool fatal = true;
  std::string note;
};

// Ordered list of checked identities. Each identity is recorded once: as passed,
// or with the first failing basis multi-index in lexicographic order.
class CheckReport {
 public:
  using Sides = std::pair<Tensor, Tensor>;

  void add(CheckRecord r) { records_.push_back(std::move(r)); }
  void expect(const std::string& id, bool ok, const std::string& note = "", bool fatal = true);
  void compare(const std::string& id, const Tensor& lhs, const Tensor& rhs, Index witness = {});
  // compares both sides for every multi-index below `ranges`
  void for_all(const std::string& id, const Dims& ranges, const std::function<Sides(const Index&)>& sides);
  void merge(const CheckReport& o, const std::string& prefix = "");

  bool ok() const;
  const std::vector<CheckRecord>& records() const { return records_; }
  const CheckRecord* find(const std::string& id) const;
  const CheckRecord* first_failure() const;
  std::string summary() const;

 private:
  std::vector<CheckRecord> records_;
};

// worker threads used by CheckReport::for_all
void set_jobs(int n);
int jobs();

}  // namespace qhopf
