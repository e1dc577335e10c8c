// Column-by-column search over argument matrices, with row sums kept sorted
// inside each symmetry class of the function.
#include <algorithm>
#include <array>
#include <unordered_map>

#include "spcsp/analysis.hpp"
#include "spcsp/error.hpp"

namespace spcsp {

namespace {

struct Key {
  std::array<uint64_t, 2> w{};
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  size_t operator()(const Key& k) const {
    uint64_t h = k.w[0] * 0x9e3779b97f4a7c15ULL;
    h ^= (k.w[1] + 0x632be59bd9b4e019ULL) * 0xbf58476d1ce4e5b9ULL;
    return static_cast<size_t>(h ^ (h >> 31));
  }
};

struct Node {
  std::vector<uint8_t> sums;
  int ones = 0;
  int parent = -1;
  VarSet column = 0;
};

class ImageSearch {
 public:
  ImageSearch(const BooleanFunction& f, const WeightSet& strict)
      : f_(f), i_(strict), n_(strict.bound()), k_(f.arity()) {
    for (const auto& c : symmetry_classes(f)) classes_.push_back(c);
    reach_.assign(n_ + 1, std::vector<bool>(n_ + 1, false));
    for (int s = 0; s <= n_; ++s)
      for (int rem = 0; s + rem <= n_; ++rem) {
        int w = i_.min_at_least(s);
        reach_[s][rem] = w >= 0 && w <= s + rem;
      }
  }

  void run() {
    layers_.assign(n_ + 1, {});
    Node root;
    root.sums.assign(k_, 0);
    if (!feasible(root.sums, n_)) return;
    layers_[0].push_back(root);
    for (int col = 0; col < n_; ++col) {
      std::unordered_map<Key, int, KeyHash> seen;
      int rem = n_ - col - 1;
      const auto& layer = layers_[col];
      for (size_t idx = 0; idx < layer.size(); ++idx) expand(layer, idx, rem, seen, layers_[col + 1]);
    }
  }

  WeightSet weights() const {
    WeightSet out = WeightSet::none(n_);
    if (layers_.empty()) return out;
    for (const auto& node : layers_[n_]) out.insert(node.ones);
    return out;
  }

  std::optional<WitnessMatrix> witness(const WeightSet& relaxed) const {
    if (layers_.empty()) return std::nullopt;
    const auto& last = layers_[n_];
    for (size_t idx = 0; idx < last.size(); ++idx) {
      if (relaxed.contains(last[idx].ones)) continue;
      std::vector<VarSet> cols(n_);
      int at = static_cast<int>(idx);
      for (int layer = n_; layer > 0; --layer) {
        cols[layer - 1] = layers_[layer][at].column;
        at = layers_[layer][at].parent;
      }
      WitnessMatrix w;
      w.rows.assign(k_, std::vector<uint8_t>(n_, 0));
      for (int j = 0; j < n_; ++j) {
        for (int r = 0; r < k_; ++r) w.rows[r][j] = (cols[j] >> r) & 1u;
        w.output.push_back(f_(cols[j]) ? 1 : 0);
      }
      return w;
    }
    return std::nullopt;
  }

 private:
  bool feasible(const std::vector<uint8_t>& sums, int rem) const {
    for (auto s : sums)
      if (!reach_[s][rem]) return false;
    return true;
  }

  Key key_of(const std::vector<uint8_t>& sums, int ones) const {
    Key key;
    int bit = 0;
    auto push = [&](uint64_t v) {
      key.w[bit / 64] |= v << (bit % 64);
      bit += 6;
      if (bit % 64 > 58) bit = (bit / 64 + 1) * 64;
    };
    for (auto s : sums) push(s);
    push(static_cast<uint64_t>(ones));
    return key;
  }

  struct Group {
    std::vector<int> positions;  // in class order
    int lo = 0, hi = 0;          // allowed number of increments
  };

  void expand(const std::vector<Node>& layer, size_t idx, int rem,
              std::unordered_map<Key, int, KeyHash>& seen, std::vector<Node>& out) {
    const Node& node = layer[idx];
    std::vector<Group> groups;
    for (const auto& cls : classes_) {
      size_t start = 0;
      while (start < cls.size()) {
        size_t end = start;
        uint8_t v = node.sums[cls[start]];
        while (end < cls.size() && node.sums[cls[end]] == v) ++end;
        Group g;
        g.positions.assign(cls.begin() + start, cls.begin() + end);
        bool stay = reach_[v][rem];
        bool step = v + 1 <= n_ && reach_[v + 1][rem];
        int size = static_cast<int>(g.positions.size());
        if (!stay && !step) return;
        g.lo = stay ? 0 : size;
        g.hi = step ? size : 0;
        groups.push_back(std::move(g));
        start = end;
      }
    }
    std::vector<int> count(groups.size());
    for (size_t g = 0; g < groups.size(); ++g) count[g] = groups[g].lo;
    for (;;) {
      VarSet column = 0;
      for (size_t g = 0; g < groups.size(); ++g) {
        const auto& pos = groups[g].positions;
        for (int c = 0; c < count[g]; ++c) column |= VarSet{1} << pos[pos.size() - 1 - c];
      }
      Node next;
      next.sums = node.sums;
      for (VarSet m = column; m; m &= m - 1) ++next.sums[std::countr_zero(m)];
      next.ones = node.ones + (f_(column) ? 1 : 0);
      next.parent = static_cast<int>(idx);
      next.column = column;
      Key key = key_of(next.sums, next.ones);
      if (seen.emplace(key, static_cast<int>(out.size())).second) out.push_back(std::move(next));
      size_t g = 0;
      for (; g < groups.size(); ++g) {
        if (count[g] < groups[g].hi) {
          ++count[g];
          break;
        }
        count[g] = groups[g].lo;
      }
      if (g == groups.size()) break;
    }
  }

  const BooleanFunction& f_;
  WeightSet i_;
  int n_, k_;
  std::vector<std::vector<int>> classes_;
  std::vector<std::vector<bool>> reach_;
  std::vector<std::vector<Node>> layers_;
};

void check_sizes(const BooleanFunction& f, const WeightSet& i) {
  if (i.bound() < 1) throw Error(ErrorCode::InvalidArity, "pair arity must be positive");
  if (i.bound() > kMaxPairArity) throw Error(ErrorCode::InvalidArity, "pair arity too large");
  if ((f.arity() + 1) * 6 > 128) throw Error(ErrorCode::InvalidArity, "function arity too large");
}

}  // namespace

WeightSet output_weights(const BooleanFunction& f, const WeightSet& i) {
  check_sizes(f, i);
  ImageSearch s(f, i);
  s.run();
  return s.weights();
}

std::optional<WitnessMatrix> find_witness(const BooleanFunction& f, const RelationPair& pair) {
  check_sizes(f, pair.strict);
  ImageSearch s(f, pair.strict);
  s.run();
  return s.witness(pair.relaxed);
}

}  // namespace spcsp
