// Copyright 2026 The rdct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>

namespace rdct {

/// Operation tally for a flow-graph evaluation.
struct ArithmeticCost {
  std::int64_t additions = 0;
  std::int64_t multiplications = 0;
  std::int64_t bit_shifts = 0;

  std::int64_t total() const { return additions + multiplications + bit_shifts; }

  friend bool operator==(const ArithmeticCost&, const ArithmeticCost&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const ArithmeticCost& c) {
  return os << '(' << c.additions << ',' << c.multiplications << ','
            << c.bit_shifts << ',' << c.total() << ')';
}

/// Scalar wrapper that records every binary add/sub, multiply and shift it
/// takes part in. Negation (a sign flip on a graph edge) is free.
class Counted {
 public:
  Counted() = default;
  Counted(double value, ArithmeticCost* tally) : value_(value), tally_(tally) {}

  double value() const { return value_; }

  friend Counted operator+(const Counted& a, const Counted& b) {
    return {a.value_ + b.value_, a.bump_add(b)};
  }
  friend Counted operator-(const Counted& a, const Counted& b) {
    return {a.value_ - b.value_, a.bump_add(b)};
  }
  friend Counted operator*(const Counted& a, const Counted& b) {
    ArithmeticCost* t = a.tally_ ? a.tally_ : b.tally_;
    if (t) ++t->multiplications;
    return {a.value_ * b.value_, t};
  }
  Counted operator-() const { return {-value_, tally_}; }

  /// Multiply by 2^k (k may be negative).
  Counted shifted(int k) const {
    if (tally_) ++tally_->bit_shifts;
    double v = value_;
    for (; k > 0; --k) v *= 2.0;
    for (; k < 0; ++k) v *= 0.5;
    return {v, tally_};
  }

 private:
  ArithmeticCost* bump_add(const Counted& other) const {
    ArithmeticCost* t = tally_ ? tally_ : other.tally_;
    if (t) ++t->additions;
    return t;
  }

  double value_ = 0.0;
  ArithmeticCost* tally_ = nullptr;
};

}  // namespace rdct
