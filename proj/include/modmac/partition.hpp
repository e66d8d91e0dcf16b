/* Copyright 2026 The modmac Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef MODMAC_PARTITION_HPP
#define MODMAC_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace modmac {

/**
 * @brief An integer partition: a weakly decreasing sequence of positive parts.
 *
 * Zero parts are never stored. The default-constructed value is the empty
 * partition of weight 0. Ordering (`<=>`) is lexicographic on the parts, so
 * that "reverse-lexicographic" means descending under this comparison.
 */
class Partition {
 public:
  Partition() = default;

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
      weight_ += parts_[i];
    }
  }

  /// Builds a partition from arbitrary positive parts in any order.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase_if(parts, [](int p) { return p == 0; });
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// `mults[i]` is the multiplicity of part `i` (index 0 ignored).
  static Partition from_multiplicities(std::span<const int> mults) {
    std::vector<int> parts;
    for (std::size_t i = mults.size(); i-- > 1;) {
      if (mults[i] < 0) throw std::invalid_argument("negative multiplicity");
      parts.insert(parts.end(), static_cast<std::size_t>(mults[i]), static_cast<int>(i));
    }
    return Partition(std::move(parts));
  }

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int weight() const noexcept { return weight_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  [[nodiscard]] int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// i-th part, 0-based; zero past the end (the usual zero padding).
  [[nodiscard]] int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  [[nodiscard]] int mult(int part) const noexcept {
    if (part <= 0) return 0;
    auto lo = std::lower_bound(parts_.begin(), parts_.end(), part, std::greater<>());
    auto hi = std::upper_bound(parts_.begin(), parts_.end(), part, std::greater<>());
    return static_cast<int>(hi - lo);
  }

  /// Multiplicity vector indexed by part size, of length largest()+1.
  [[nodiscard]] std::vector<int> multiplicities() const {
    std::vector<int> m(static_cast<std::size_t>(largest()) + 1, 0);
    for (int p : parts_) ++m[static_cast<std::size_t>(p)];
    return m;
  }

  /// No part divisible by m.
  [[nodiscard]] bool is_regular(int m) const noexcept {
    return std::none_of(parts_.begin(), parts_.end(), [m](int p) { return p % m == 0; });
  }

  /// Every multiplicity below m.
  [[nodiscard]] bool is_reduced(int m) const noexcept {
    std::size_t i = 0;
    while (i < parts_.size()) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      if (static_cast<int>(j - i) >= m) return false;
      i = j;
    }
    return true;
  }

  [[nodiscard]] bool is_strict() const noexcept { return is_reduced(2); }

  /// mu ⊂' lambda: every multiplicity of `sub` is at most that of *this.
  [[nodiscard]] bool contains_multiset(const Partition& sub) const {
    const auto a = multiplicities();
    const auto b = sub.multiplicities();
    if (b.size() > a.size()) {
      for (std::size_t i = a.size(); i < b.size(); ++i)
        if (b[i] != 0) return false;
    }
    for (std::size_t i = 1; i < std::min(a.size(), b.size()); ++i)
      if (b[i] > a[i]) return false;
    return true;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ')';
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Multiplicities add.
inline Partition partition_union(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

/// Multiplicities subtract; requires `b ⊂' a`.
inline Partition partition_subtract(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  auto ia = a.parts().begin();
  auto ib = b.parts().begin();
  while (ia != a.parts().end()) {
    if (ib != b.parts().end() && *ib == *ia) {
      ++ia;
      ++ib;
    } else if (ib != b.parts().end() && *ib > *ia) {
      break;
    } else {
      parts.push_back(*ia++);
    }
  }
  if (ib != b.parts().end())
    throw std::invalid_argument("partition_subtract: " + b.to_string() + " is not contained in " +
                                a.to_string());
  return Partition(std::move(parts));
}

inline std::int64_t factorial(int k) {
  std::int64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

/// z_lambda = prod_i i^{m_i} m_i!
inline std::int64_t z_of(const Partition& p) {
  std::int64_t z = 1;
  const auto mult = p.multiplicities();
  for (std::size_t i = 1; i < mult.size(); ++i) {
    for (int k = 0; k < mult[i]; ++k) z *= static_cast<std::int64_t>(i);
    z *= factorial(mult[i]);
  }
  return z;
}

/// m(lambda)! = prod_i m_i!
inline std::int64_t mult_factorial(const Partition& p) {
  std::int64_t r = 1;
  for (int k : p.multiplicities()) r *= factorial(k);
  return r;
}

enum class PartitionClass { all, m_regular, m_reduced };

namespace detail {

inline void enumerate_rec(int remaining, int max_part, PartitionClass cls, int m,
                          std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (cls == PartitionClass::m_regular && p % m == 0) continue;
    int run = 0;
    if (cls == PartitionClass::m_reduced) {
      for (auto it = cur.rbegin(); it != cur.rend() && *it == p; ++it) ++run;
      if (run + 1 >= m) continue;
    }
    cur.push_back(p);
    enumerate_rec(remaining - p, p, cls, m, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Partitions of n in the given class, reverse-lexicographic.
inline std::vector<Partition> enumerate(int n, PartitionClass cls, int m = 2) {
  if (m < 2) throw std::invalid_argument("modulus m must be at least 2");
  if (n < 0) throw std::invalid_argument("weight must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::enumerate_rec(n, n, cls, m, cur, out);
  return out;
}

inline std::vector<Partition> all_partitions(int n) { return enumerate(n, PartitionClass::all, 2); }
inline std::vector<Partition> regular_partitions(int n, int m) {
  return enumerate(n, PartitionClass::m_regular, m);
}
inline std::vector<Partition> reduced_partitions(int n, int m) {
  return enumerate(n, PartitionClass::m_reduced, m);
}

struct CountCheck {
  std::size_t regular_count = 0;
  std::size_t reduced_count = 0;
  bool equal = false;
};

inline CountCheck count_check(int n, int m) {
  CountCheck r;
  r.regular_count = regular_partitions(n, m).size();
  r.reduced_count = reduced_partitions(n, m).size();
  r.equal = r.regular_count == r.reduced_count;
  return r;
}

enum class Dominance { less, greater, equal, incomparable };

inline Dominance dominance_compare(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight())
    throw std::invalid_argument("dominance is only defined between partitions of equal weight");
  if (a == b) return Dominance::equal;
  bool a_ge = true, b_ge = true;
  int sa = 0, sb = 0;
  const std::size_t len = std::max(a.parts().size(), b.parts().size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) a_ge = false;
    if (sb < sa) b_ge = false;
  }
  if (a_ge) return Dominance::greater;
  if (b_ge) return Dominance::less;
  return Dominance::incomparable;
}

/// a >= b in dominance order.
inline bool dominates(const Partition& a, const Partition& b) {
  const auto d = dominance_compare(a, b);
  return d == Dominance::greater || d == Dominance::equal;
}

/**
 * Orders partitions of one weight so that every partition precedes all
 * partitions it strictly dominates. Reverse-lexicographic order is such an
 * extension, and it fixes the tie-breaking among incomparable pairs.
 */
inline std::vector<Partition> dominance_linear_extension(std::vector<Partition> ps) {
  for (const auto& p : ps)
    if (p.weight() != ps.front().weight())
      throw std::invalid_argument("dominance_linear_extension: mixed weights");
  std::sort(ps.begin(), ps.end(), std::greater<>());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

}  // namespace modmac

template <>
struct std::hash<modmac::Partition> {
  std::size_t operator()(const modmac::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
      h ^= static_cast<std::size_t>(x);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

#endif  // MODMAC_PARTITION_HPP
