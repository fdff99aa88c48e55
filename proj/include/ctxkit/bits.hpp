// Copyright 2026 The ctxkit Authors
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

#ifndef CTXKIT_BITS_HPP
#define CTXKIT_BITS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ctxkit/errors.hpp"

namespace ctxkit {

/// Mask over atom indices. Scenarios are capped at 64 atoms, so one word is
/// enough; StateSet below covers the (unbounded) deterministic-state axis.
using AtomMask = std::uint64_t;

constexpr std::size_t kMaxAtoms = 64;

inline AtomMask mask_bit(std::size_t i) { return AtomMask{1} << i; }

inline AtomMask full_mask(std::size_t n) {
  return n >= 64 ? ~AtomMask{0} : (AtomMask{1} << n) - 1;
}

/// Fixed-width bit vector over the atoms of one scenario. Doubles as a
/// deterministic state (exactly one 1 per context) and as a possibilistic
/// vector (1 = possible); the invariants are owned by the producing code.
struct Bitvec {
  AtomMask bits = 0;
  std::uint32_t size = 0;

  Bitvec() = default;
  Bitvec(AtomMask b, std::uint32_t n) : bits(b & full_mask(n)), size(n) {}

  bool test(std::size_t i) const { return (bits >> i) & 1; }
  void set(std::size_t i, bool v = true) {
    if (v)
      bits |= mask_bit(i);
    else
      bits &= ~mask_bit(i);
  }

  std::uint32_t count_ones() const {
    return static_cast<std::uint32_t>(std::popcount(bits));
  }
  std::uint32_t count_zeros() const { return size - count_ones(); }

  bool operator==(const Bitvec& o) const {
    return size == o.size && bits == o.bits;
  }
  bool operator!=(const Bitvec& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s(size, '0');
    for (std::uint32_t i = 0; i < size; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  static Bitvec from_string(const std::string& s) {
    if (s.size() > kMaxAtoms) raise(Errc::too_large, "bit string too long");
    Bitvec b(0, static_cast<std::uint32_t>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        b.set(i);
      else if (s[i] != '0')
        raise(Errc::parse_error, "bit string must contain only 0/1");
    }
    return b;
  }

  static Bitvec all_ones(std::uint32_t n) { return Bitvec(full_mask(n), n); }
};

/// Sequence order: compare bit 0 first, then bit 1, ... Matches reading the
/// vector left to right, which keeps printed tables and golden files stable.
inline bool lex_less(const Bitvec& a, const Bitvec& b) {
  if (a.size != b.size) return a.size < b.size;
  AtomMask d = a.bits ^ b.bits;
  if (d == 0) return false;
  std::size_t k = static_cast<std::size_t>(std::countr_zero(d));
  return !((a.bits >> k) & 1);
}

struct BitvecLess {
  bool operator()(const Bitvec& a, const Bitvec& b) const {
    return lex_less(a, b);
  }
};

/// Dynamic bit set indexed by deterministic states (columns of an incidence
/// matrix). The number of states is not bounded by the atom cap.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t n, bool ones = false)
      : size_(n), blocks_((n + 63) / 64, ones ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (blocks_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::size_t i, bool v = true) {
    if (v)
      blocks_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
    return c;
  }
  bool none() const {
    for (auto b : blocks_)
      if (b) return false;
    return true;
  }
  bool any() const { return !none(); }

  StateSet& operator&=(const StateSet& o) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
    return *this;
  }
  StateSet& operator|=(const StateSet& o) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
    return *this;
  }
  StateSet operator&(const StateSet& o) const {
    StateSet r = *this;
    r &= o;
    return r;
  }
  StateSet operator|(const StateSet& o) const {
    StateSet r = *this;
    r |= o;
    return r;
  }
  StateSet complement() const {
    StateSet r = *this;
    for (auto& b : r.blocks_) b = ~b;
    r.trim();
    return r;
  }
  bool intersects(const StateSet& o) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & o.blocks_[i]) return true;
    return false;
  }
  bool subset_of(const StateSet& o) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & ~o.blocks_[i]) return false;
    return true;
  }

  bool operator==(const StateSet& o) const {
    return size_ == o.size_ && blocks_ == o.blocks_;
  }
  bool operator!=(const StateSet& o) const { return !(*this == o); }
  bool operator<(const StateSet& o) const {  // arbitrary total order for maps
    if (size_ != o.size_) return size_ < o.size_;
    return blocks_ < o.blocks_;
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < blocks_.size(); ++w) {
      std::uint64_t b = blocks_[w];
      while (b) {
        std::size_t k = static_cast<std::size_t>(std::countr_zero(b));
        f(w * 64 + k);
        b &= b - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each_set([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  void trim() {
    if (size_ % 64 != 0 && !blocks_.empty())
      blocks_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace ctxkit

#endif  // CTXKIT_BITS_HPP
