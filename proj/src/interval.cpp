#include "springer2/interval.hpp"

#include <algorithm>
#include <set>

namespace springer2 {

int IntervalDecomposition::interval_of(int v) const {
  for (std::size_t k = 0; k < intervals.size(); ++k)
    if (std::binary_search(intervals[k].elements.begin(), intervals[k].elements.end(), v))
      return static_cast<int>(k);
  return -1;
}

int IntervalDecomposition::dimension() const {
  const int p = static_cast<int>(proper.size());
  return unordered ? std::max(p - 1, 0) : p;
}

std::uint64_t IntervalDecomposition::reduce(std::uint64_t mask) const {
  if (unordered && fixed >= 0 && ((mask >> fixed) & 1U)) {
    const std::uint64_t full = (std::uint64_t{1} << proper.size()) - 1;
    mask ^= full;
  }
  return mask;
}

std::vector<std::uint64_t> IntervalDecomposition::characters() const {
  std::vector<std::uint64_t> out;
  const std::uint64_t count = std::uint64_t{1} << proper.size();
  for (std::uint64_t mask = 0; mask < count; ++mask)
    if (reduce(mask) == mask) out.push_back(mask);
  return out;
}

IntervalDecomposition decompose(const Symbol& x) {
  const int gap = x.space.r + x.space.s;
  if (x.space.r < 1) throw SymbolError("decompose: intervals need r >= 1");
  IntervalDecomposition dec;
  dec.unordered = x.space.unordered;
  std::set<int> a(x.a.begin(), x.a.end()), b(x.b.begin(), x.b.end());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(dec.S));
  for (int v : dec.S) {
    if (dec.intervals.empty() || v - dec.intervals.back().elements.back() >= gap)
      dec.intervals.emplace_back();
    dec.intervals.back().elements.push_back(v);
    if (v < x.space.s) dec.intervals.back().initial = true;
  }
  for (std::size_t k = 0; k < dec.intervals.size(); ++k)
    if (!dec.intervals[k].initial) dec.proper.push_back(static_cast<int>(k));
  if (dec.proper.size() > 63) throw SymbolError("decompose: too many intervals");
  if (dec.unordered && !dec.proper.empty()) {
    const int top = dec.interval_of(dec.S.back());
    dec.fixed = static_cast<int>(std::find(dec.proper.begin(), dec.proper.end(), top) - dec.proper.begin());
  }
  return dec;
}

Symbol act(const Symbol& x, const IntervalDecomposition& dec, std::uint64_t mask) {
  if (dec.proper.size() < 64 && (mask >> dec.proper.size()) != 0)
    throw SymbolError("act: character refers to a non-existent interval");
  std::set<int> swap;
  for (std::size_t k = 0; k < dec.proper.size(); ++k)
    if ((mask >> k) & 1U) {
      const auto& el = dec.intervals[static_cast<std::size_t>(dec.proper[k])].elements;
      swap.insert(el.begin(), el.end());
    }
  std::vector<int> a, b;
  for (int v : x.a) (swap.count(v) ? b : a).push_back(v);
  for (int v : x.b) (swap.count(v) ? a : b).push_back(v);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  int d = static_cast<int>(a.size()) - static_cast<int>(b.size());
  if (x.space.unordered && d < 0) {
    std::swap(a, b);
    d = -d;
  }
  return normalize(make_symbol(x.space.with_d(d), std::move(a), std::move(b)));
}

Symbol act(const Symbol& x, std::uint64_t mask) { return act(x, decompose(x), mask); }

std::vector<Symbol> similarity_class(const Symbol& x) {
  const auto dec = decompose(x);
  std::vector<Symbol> out;
  for (auto mask : dec.characters()) out.push_back(act(x, dec, mask));
  return out;
}

Symbol distinguished_of_class(const Symbol& x) {
  if (x.space.d != 0 && x.space.d != 1) throw DistinguishedError("distinguished elements need d in {0,1}");
  std::vector<Symbol> found;
  for (auto& y : similarity_class(x))
    if (is_distinguished(y)) found.push_back(std::move(y));
  if (found.empty()) throw DistinguishedError("no distinguished element in class of " + to_string(x));
  if (found.size() > 1) throw DistinguishedError("several distinguished elements in class of " + to_string(x));
  return found.front();
}

}  // namespace springer2
