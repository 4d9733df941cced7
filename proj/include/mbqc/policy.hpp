// Copyright 2026 The mbqc authors
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

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace mbqc {

// Source of measurement outcomes. Every genuinely random measurement event
// asks the policy for one bit; deterministic outcomes never touch it, so a
// forced bit list lines up one-to-one with the random events of a run.
//
// Three modes:
//  - sample: bits are drawn from a seeded PRNG.
//  - force: bits come from a fixed list; running past the end throws.
//  - force_extended: like force, but the list is padded with 0 on demand
//    (used by branch enumeration to discover how deep a run goes).
class OutcomePolicy {
 public:
  static OutcomePolicy sample(uint64_t seed) {
    OutcomePolicy p;
    p.mode_ = Mode::kSample;
    p.gen_.seed(seed);
    return p;
  }

  static OutcomePolicy force(std::vector<int> bits) {
    OutcomePolicy p;
    p.mode_ = Mode::kForce;
    p.forced_ = std::move(bits);
    return p;
  }

  static OutcomePolicy force_extended(std::vector<int> bits) {
    OutcomePolicy p;
    p.mode_ = Mode::kForceExtend;
    p.forced_ = std::move(bits);
    return p;
  }

  // Next outcome bit; p1 is the probability of outcome 1 in sample mode and
  // is ignored when outcomes are forced.
  int next_bit(double p1 = 0.5) {
    int s;
    switch (mode_) {
      case Mode::kSample:
        if (p1 == 0.5) {
          s = static_cast<int>(gen_() >> 63);
        } else {
          // 53 uniform mantissa bits; identical sequences on all platforms.
          double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
          s = u < p1 ? 1 : 0;
        }
        break;
      case Mode::kForce:
        if (cursor_ >= forced_.size()) {
          throw std::out_of_range("forced outcome list exhausted");
        }
        s = forced_[cursor_++];
        break;
      case Mode::kForceExtend:
        s = cursor_ < forced_.size() ? forced_[cursor_++] : 0;
        break;
    }
    consumed_.push_back(s);
    return s;
  }

  bool is_forced() const { return mode_ != Mode::kSample; }

  // All bits handed out so far, in order.
  const std::vector<int>& consumed() const { return consumed_; }

 private:
  enum class Mode { kSample, kForce, kForceExtend };

  OutcomePolicy() = default;

  Mode mode_ = Mode::kSample;
  std::mt19937_64 gen_;
  std::vector<int> forced_;
  size_t cursor_ = 0;
  std::vector<int> consumed_;
};

// Runs fn once per leaf of the binary outcome tree and returns the bit
// string each leaf consumed. Branches may consume different numbers of
// bits; the walk is depth-first with 0 explored before 1.
template <typename Fn>
std::vector<std::vector<int>> enumerate_branches(
    Fn&& fn, size_t max_branches = size_t{1} << 20) {
  std::vector<std::vector<int>> leaves;
  std::vector<int> prefix;
  for (;;) {
    if (leaves.size() >= max_branches) {
      throw std::runtime_error("branch enumeration exceeded limit");
    }
    OutcomePolicy policy = OutcomePolicy::force_extended(prefix);
    fn(policy);
    std::vector<int> bits = policy.consumed();
    leaves.push_back(bits);
    while (!bits.empty() && bits.back() == 1) bits.pop_back();
    if (bits.empty()) break;
    bits.back() = 1;
    prefix = std::move(bits);
  }
  return leaves;
}

}  // namespace mbqc
