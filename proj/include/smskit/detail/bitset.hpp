// Copyright 2026 The smskit Authors
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

#include <bit>
#include <cstdint>
#include <vector>

namespace smskit::detail {

/// Fixed-universe dynamic bitset; just enough for subset bookkeeping in the
/// search routines.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend bool operator==(const Bits&, const Bits&) = default;

  int first() const {  // -1 when empty
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return (int)(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      for (std::uint64_t w = w_[i]; w; w &= w - 1)
        f((int)(i * 64) + std::countr_zero(w));
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace smskit::detail
