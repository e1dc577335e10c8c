#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace spcsp {

inline constexpr int kMaxPairArity = 63;

// A set of weights drawn from {0, ..., bound}.
class WeightSet {
 public:
  WeightSet() = default;
  WeightSet(int bound, uint64_t mask);

  // Throws OutOfRangeWeight for any weight outside [0, bound].
  static WeightSet of(int bound, const std::vector<int>& weights);
  static WeightSet of(int bound, std::initializer_list<int> weights) {
    return of(bound, std::vector<int>(weights));
  }
  static WeightSet range(int bound, int lo, int hi);
  static WeightSet full(int bound) { return range(bound, 0, bound); }
  static WeightSet none(int bound) { return WeightSet(bound, 0); }

  int bound() const { return bound_; }
  uint64_t mask() const { return mask_; }

  bool contains(int w) const { return w >= 0 && w <= bound_ && ((mask_ >> w) & 1u); }
  bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  int min() const;
  int max() const;
  std::vector<int> elements() const;

  void insert(int w);
  bool subset_of(const WeightSet& o) const { return (mask_ & ~o.mask_) == 0; }

  WeightSet unite(const WeightSet& o) const;
  WeightSet intersect(const WeightSet& o) const;
  // {0..bound} minus this set.
  WeightSet complement() const;
  // {bound - w : w in this set}.
  WeightSet reflect() const;
  // Same elements, reinterpreted under a new bound; elements above it are dropped.
  WeightSet rebound(int new_bound) const;

  // Largest element not exceeding w, or -1.
  int max_at_most(int w) const;
  // Smallest element at least w, or -1.
  int min_at_least(int w) const;

  std::string str() const;

  friend bool operator==(const WeightSet&, const WeightSet&) = default;

 private:
  int bound_ = 0;
  uint64_t mask_ = 0;
};

inline uint64_t low_bits(int count) {
  return count >= 64 ? ~uint64_t{0} : ((uint64_t{1} << count) - 1);
}

}  // namespace spcsp
