// Copyright 2026 The qhopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhopf/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

namespace qhopf {

namespace {

std::atomic<int> g_jobs{1};

}  // namespace

void set_jobs(int n) { g_jobs = std::max(1, n); }
int jobs() { return g_jobs; }

void CheckReport::expect(const std::string& id, bool ok, const std::string& note, bool fatal) {
  CheckRecord r;
  r.id = id;
  r.pass = ok;
  r.fatal = fatal;
  r.note = note;
  records_.push_back(std::move(r));
}

void CheckReport::compare(const std::string& id, const Tensor& lhs, const Tensor& rhs, Index witness) {
  CheckRecord r;
  r.id = id;
  r.pass = lhs == rhs;
  if (!r.pass) {
    r.witness = std::move(witness);
    r.lhs = lhs;
    r.rhs = rhs;
  }
  records_.push_back(std::move(r));
}

void CheckReport::for_all(const std::string& id, const Dims& ranges, const std::function<Sides(const Index&)>& sides) {
  Tensor probe(ranges);
  Tensor::Key n = probe.volume();
  int threads = static_cast<int>(std::min<Tensor::Key>(static_cast<Tensor::Key>(jobs()), n));
  struct Found {
    Tensor::Key key = ~Tensor::Key(0);
    Sides sides;
    std::exception_ptr error;
  };
  std::vector<Found> found(std::max(threads, 1));
  std::atomic<Tensor::Key> best{~Tensor::Key(0)};
  auto work = [&](int t) {
    try {
      for (Tensor::Key k = static_cast<Tensor::Key>(t); k < n; k += static_cast<Tensor::Key>(threads)) {
        if (k > best.load()) return;
        Sides s = sides(probe.decode(k));
        if (!(s.first == s.second)) {
          found[t].key = k;
          found[t].sides = std::move(s);
          Tensor::Key cur = best.load();
          while (k < cur && !best.compare_exchange_weak(cur, k)) {
          }
          return;
        }
      }
    } catch (...) {
      found[t].error = std::current_exception();
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : found)
    if (f.error) std::rethrow_exception(f.error);
  CheckRecord r;
  r.id = id;
  auto it = std::min_element(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.key < b.key; });
  if (it != found.end() && it->key != ~Tensor::Key(0)) {
    r.pass = false;
    r.witness = probe.decode(it->key);
    r.lhs = it->sides.first;
    r.rhs = it->sides.second;
  }
  records_.push_back(std::move(r));
}

void CheckReport::merge(const CheckReport& o, const std::string& prefix) {
  for (CheckRecord r : o.records_) {
    r.id = prefix + r.id;
    records_.push_back(std::move(r));
  }
}

bool CheckReport::ok() const {
  return std::all_of(records_.begin(), records_.end(), [](const CheckRecord& r) { return r.pass || !r.fatal; });
}

const CheckRecord* CheckReport::find(const std::string& id) const {
  for (const auto& r : records_)
    if (r.id == id) return &r;
  return nullptr;
}

const CheckRecord* CheckReport::first_failure() const {
  for (const auto& r : records_)
    if (!r.pass && r.fatal) return &r;
  return nullptr;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  for (const auto& r : records_) {
    os << (r.pass ? "PASS " : (r.fatal ? "FAIL " : "WARN ")) << r.id;
    if (!r.pass && !r.witness.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < r.witness.size(); ++i) os << (i ? "," : "") << r.witness[i];
      os << ")";
    }
    if (!r.note.empty()) os << "  " << r.note;
    os << "\n";
  }
  return os.str();
}

}  // namespace qhopf
