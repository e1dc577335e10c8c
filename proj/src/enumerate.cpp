#include <algorithm>
#include <bit>
#include <thread>

#include "spcsp/analysis.hpp"
#include "spcsp/error.hpp"

namespace spcsp {

std::vector<ColumnMultiset> column_multisets(int k, const WeightSet& i) {
  int n = i.bound();
  int patterns = 1 << k;
  std::vector<ColumnMultiset> out;
  std::vector<int> sums(k, 0);
  std::vector<std::pair<VarSet, int>> chosen;
  auto ok = [&](int rem) {
    for (int s : sums) {
      int w = i.min_at_least(s);
      if (w < 0 || w > s + rem) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int pattern, int rem) -> void {
    if (!ok(rem)) return;
    if (rem == 0) {
      out.push_back({chosen});
      return;
    }
    if (pattern == patterns) return;
    VarSet p = static_cast<VarSet>(pattern);
    for (int c = rem; c >= 1; --c) {
      for (VarSet m = p; m; m &= m - 1) sums[std::countr_zero(m)] += c;
      chosen.push_back({p, c});
      self(self, pattern + 1, rem - c);
      chosen.pop_back();
      for (VarSet m = p; m; m &= m - 1) sums[std::countr_zero(m)] -= c;
    }
    self(self, pattern + 1, rem);
  };
  dfs(dfs, 0, n);
  return out;
}

namespace {

struct PairData {
  WeightSet relaxed;
  int planes = 1;
  std::vector<ColumnMultiset> sets;
};

std::vector<PairData> prepare(const Template& t, int k) {
  std::vector<PairData> out;
  for (const auto& p : t.pairs) {
    validate_pair(p);
    PairData d;
    d.relaxed = p.relaxed;
    d.planes = std::bit_width(static_cast<unsigned>(p.arity()));
    d.sets = column_multisets(k, p.strict);
    out.push_back(std::move(d));
  }
  return out;
}

// Bit t of the result is set iff function (base + t) is compatible with every pair.
uint64_t block_mask(const std::vector<PairData>& pairs, int k, uint64_t base, uint64_t valid) {
  static const uint64_t low[6] = {0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL,
                                  0xF0F0F0F0F0F0F0F0ULL, 0xFF00FF00FF00FF00ULL,
                                  0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  int patterns = 1 << k;
  uint64_t bit[16];
  for (int p = 0; p < patterns; ++p) bit[p] = p < 6 ? low[p] : (((base >> p) & 1u) ? ~0ULL : 0ULL);
  uint64_t mask = valid;
  for (const auto& pd : pairs) {
    if (pd.relaxed == WeightSet::full(pd.relaxed.bound())) continue;
    for (const auto& ms : pd.sets) {
      uint64_t plane[7] = {0, 0, 0, 0, 0, 0, 0};
      for (auto [pattern, count] : ms.columns) {
        uint64_t b = bit[pattern];
        for (int j = 0; j < pd.planes; ++j) {
          if (!((count >> j) & 1)) continue;
          uint64_t carry = b;
          for (int l = j; l < pd.planes && carry; ++l) {
            uint64_t next = plane[l] & carry;
            plane[l] ^= carry;
            carry = next;
          }
        }
      }
      uint64_t member = 0;
      for (int w : pd.relaxed.elements()) {
        uint64_t eq = ~0ULL;
        for (int j = 0; j < pd.planes; ++j) eq &= ((w >> j) & 1) ? plane[j] : ~plane[j];
        member |= eq;
      }
      mask &= member;
      if (!mask) return 0;
    }
  }
  return mask;
}

std::vector<uint64_t> exhaustive(const Template& t, int k, int jobs) {
  auto pairs = prepare(t, k);
  uint64_t total = uint64_t{1} << (1u << k);
  uint64_t blocks = total < 64 ? 1 : total / 64;
  uint64_t valid = total < 64 ? ((uint64_t{1} << total) - 1) : ~0ULL;
  std::vector<std::vector<uint64_t>> found(std::max(jobs, 1));
  auto worker = [&](int id) {
    for (uint64_t b = id; b < blocks; b += found.size()) {
      uint64_t m = block_mask(pairs, k, b * 64, valid);
      for (; m; m &= m - 1) found[id].push_back(b * 64 + std::countr_zero(m));
    }
  };
  if (found.size() == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (size_t id = 0; id < found.size(); ++id) threads.emplace_back(worker, static_cast<int>(id));
    for (auto& th : threads) th.join();
  }
  std::vector<uint64_t> all;
  for (auto& v : found) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  return all;
}

// Arity 5: assign table entries one pattern at a time, checking every
// multiset as soon as all of its patterns are fixed.
std::vector<uint64_t> backtrack5(const Template& t) {
  const int k = 5;
  auto pairs = prepare(t, k);
  struct Check {
    const PairData* pd;
    const ColumnMultiset* ms;
  };
  std::vector<std::vector<Check>> due(32);
  for (const auto& pd : pairs)
    for (const auto& ms : pd.sets) {
      VarSet last = 0;
      for (auto [p, c] : ms.columns) last = std::max(last, p);
      due[last].push_back({&pd, &ms});
    }
  std::vector<uint64_t> out;
  uint64_t table = 0;
  auto dfs = [&](auto&& self, int p) -> void {
    if (p == 32) {
      out.push_back(table);
      return;
    }
    for (int v = 0; v < 2; ++v) {
      if (v) table |= uint64_t{1} << p;
      else table &= ~(uint64_t{1} << p);
      bool ok = true;
      for (const auto& c : due[p]) {
        int w = 0;
        for (auto [pat, cnt] : c.ms->columns)
          if ((table >> pat) & 1u) w += cnt;
        if (!c.pd->relaxed.contains(w)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, p + 1);
    }
    table &= ~(uint64_t{1} << p);
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint64_t> tables(const Template& t, int k, const EnumerateOptions& opts) {
  if (k < 1) throw Error(ErrorCode::InvalidArity, "arity must be positive");
  if (k <= 4) return exhaustive(t, k, opts.jobs);
  if (k == 5 && opts.allow_arity5) return backtrack5(t);
  throw Error(ErrorCode::ArityTooLarge,
              "polymorphism enumeration supports arity <= 4 (5 with the explicit flag)");
}

}  // namespace

std::vector<BooleanFunction> enumerate_polymorphisms(const Template& t, int k,
                                                     const EnumerateOptions& opts) {
  std::vector<BooleanFunction> out;
  for (uint64_t tab : tables(t, k, opts)) out.push_back(BooleanFunction::from_words(k, {tab}));
  return out;
}

size_t count_polymorphisms(const Template& t, int k, const EnumerateOptions& opts) {
  return tables(t, k, opts).size();
}

}  // namespace spcsp
