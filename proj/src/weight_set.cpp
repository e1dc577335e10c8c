#include "spcsp/weight_set.hpp"

#include "spcsp/error.hpp"

namespace spcsp {

WeightSet::WeightSet(int bound, uint64_t mask) : bound_(bound), mask_(mask) {
  if (bound < 0 || bound > kMaxPairArity)
    throw Error(ErrorCode::InvalidArity, "arity " + std::to_string(bound) + " outside [0, 63]");
  if (mask & ~low_bits(bound + 1))
    throw Error(ErrorCode::OutOfRangeWeight, "weight above arity " + std::to_string(bound));
}

WeightSet WeightSet::of(int bound, const std::vector<int>& weights) {
  WeightSet s(bound, 0);
  for (int w : weights) {
    if (w < 0 || w > bound)
      throw Error(ErrorCode::OutOfRangeWeight,
                  "weight " + std::to_string(w) + " outside [0, " + std::to_string(bound) + "]");
    s.mask_ |= uint64_t{1} << w;
  }
  return s;
}

WeightSet WeightSet::range(int bound, int lo, int hi) {
  WeightSet s(bound, 0);
  for (int w = std::max(lo, 0); w <= std::min(hi, bound); ++w) s.mask_ |= uint64_t{1} << w;
  return s;
}

int WeightSet::min() const { return mask_ ? std::countr_zero(mask_) : -1; }
int WeightSet::max() const { return mask_ ? 63 - std::countl_zero(mask_) : -1; }

std::vector<int> WeightSet::elements() const {
  std::vector<int> out;
  for (uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void WeightSet::insert(int w) {
  if (w < 0 || w > bound_) throw Error(ErrorCode::OutOfRangeWeight, "weight out of range");
  mask_ |= uint64_t{1} << w;
}

WeightSet WeightSet::unite(const WeightSet& o) const {
  return WeightSet(std::max(bound_, o.bound_), mask_ | o.mask_);
}

WeightSet WeightSet::intersect(const WeightSet& o) const {
  return WeightSet(bound_, mask_ & o.mask_);
}

WeightSet WeightSet::complement() const { return WeightSet(bound_, ~mask_ & low_bits(bound_ + 1)); }

WeightSet WeightSet::reflect() const {
  WeightSet s(bound_, 0);
  for (uint64_t m = mask_; m; m &= m - 1) s.mask_ |= uint64_t{1} << (bound_ - std::countr_zero(m));
  return s;
}

WeightSet WeightSet::rebound(int new_bound) const {
  return WeightSet(new_bound, mask_ & low_bits(new_bound + 1));
}

int WeightSet::max_at_most(int w) const {
  if (w < 0) return -1;
  uint64_t m = mask_ & low_bits(w + 1);
  return m ? 63 - std::countl_zero(m) : -1;
}

int WeightSet::min_at_least(int w) const {
  if (w > 63) return -1;
  uint64_t m = w <= 0 ? mask_ : (mask_ & ~low_bits(w));
  return m ? std::countr_zero(m) : -1;
}

std::string WeightSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int w : elements()) {
    if (!first) s += ",";
    s += std::to_string(w);
    first = false;
  }
  return s + "}";
}

}  // namespace spcsp
