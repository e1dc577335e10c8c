#include <bit>

#include "spcsp/linalg.hpp"

namespace spcsp::linalg {

void BitRow::set(int i, bool v) {
  uint64_t bit = uint64_t{1} << (i & 63);
  if (v) words_[i >> 6] |= bit;
  else words_[i >> 6] &= ~bit;
}

bool BitRow::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

int BitRow::first() const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
  return -1;
}

BitRow& BitRow::operator^=(const BitRow& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitRow::dot(const BitRow& o) const {
  int parity = 0;
  for (size_t i = 0; i < words_.size(); ++i) parity ^= std::popcount(words_[i] & o.words_[i]) & 1;
  return parity;
}

std::optional<std::vector<uint8_t>> solve_gf2(std::vector<Gf2Equation> eqs, int vars) {
  std::vector<int> pivot_of_row;
  size_t rank = 0;
  for (int col = 0; col < vars && rank < eqs.size(); ++col) {
    size_t sel = rank;
    while (sel < eqs.size() && !eqs[sel].lhs.get(col)) ++sel;
    if (sel == eqs.size()) continue;
    std::swap(eqs[rank], eqs[sel]);
    for (size_t r = 0; r < eqs.size(); ++r)
      if (r != rank && eqs[r].lhs.get(col)) {
        eqs[r].lhs ^= eqs[rank].lhs;
        eqs[r].rhs = eqs[r].rhs != eqs[rank].rhs;
      }
    pivot_of_row.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < eqs.size(); ++r)
    if (eqs[r].rhs) return std::nullopt;
  std::vector<uint8_t> x(vars, 0);
  for (size_t r = 0; r < rank; ++r) x[pivot_of_row[r]] = eqs[r].rhs ? 1 : 0;
  return x;
}

std::vector<Gf2Equation> affine_equations(const BitRow& base, const std::vector<BitRow>& directions) {
  int n = base.width();
  // Reduced row echelon basis of the direction space.
  std::vector<BitRow> basis;
  std::vector<int> pivots;
  for (BitRow d : directions) {
    for (size_t i = 0; i < basis.size(); ++i)
      if (d.get(pivots[i])) d ^= basis[i];
    int p = d.first();
    if (p < 0) continue;
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i].get(p)) basis[i] ^= d;
    basis.push_back(d);
    pivots.push_back(p);
  }
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  // One normal vector per free coordinate.
  std::vector<Gf2Equation> out;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitRow a(n);
    a.set(f, true);
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i].get(f)) a.set(pivots[i], true);
    out.push_back({a, a.dot(base)});
  }
  return out;
}

}  // namespace spcsp::linalg
