#include "springer2/symbol.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace springer2 {

namespace {

std::int64_t row_sum(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::int64_t SymbolSpace::target_sum(int m) const {
  const std::int64_t me = m + e();
  return n + std::int64_t{r} * me * (m + d - e() - 1) + std::int64_t{s} * me * (m + d - e());
}

std::int64_t SymbolSpace::minimal_sum(int m) const {
  return std::int64_t{r + s} * (choose2(m + d) + choose2(m)) + std::int64_t{s} * m;
}

std::int64_t SymbolSpace::defect() const {
  const int m = std::max(0, -d);
  return target_sum(m) - minimal_sum(m) - n;
}

std::string to_string(const SymbolSpace& sp) {
  std::ostringstream os;
  os << (sp.unordered ? "Y" : "X") << "[n=" << sp.n << ",d=" << sp.d << ",r=" << sp.r;
  if (!sp.unordered) os << ",s=" << sp.s;
  os << "]";
  return os.str();
}

std::vector<std::string> violations(const std::vector<int>& a, const std::vector<int>& b,
                                    const SymbolSpace& sp) {
  std::vector<std::string> out;
  if (sp.r < 0 || sp.s < 0 || sp.n < 0) out.push_back("space parameters must be nonnegative");
  if (sp.unordered && (sp.s != 0 || sp.d < 0)) out.push_back("unordered space requires s=0 and d>=0");
  const int m = static_cast<int>(b.size());
  if (static_cast<int>(a.size()) != m + sp.d)
    out.push_back("row lengths: |A|=" + std::to_string(a.size()) + " but |B|+d=" +
                  std::to_string(m + sp.d));
  for (int x : a)
    if (x < 0) out.push_back("negative entry in A");
  for (int x : b)
    if (x < 0) out.push_back("negative entry in B");
  const int gap = sp.r + sp.s;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] - a[i - 1] < gap)
      out.push_back("gap a" + std::to_string(i + 1) + "-a" + std::to_string(i) + " < " +
                    std::to_string(gap));
  for (std::size_t i = 1; i < b.size(); ++i)
    if (b[i] - b[i - 1] < gap)
      out.push_back("gap b" + std::to_string(i + 1) + "-b" + std::to_string(i) + " < " +
                    std::to_string(gap));
  if (!b.empty() && b[0] < sp.s) out.push_back("b1 < s");
  if (static_cast<int>(a.size()) == m + sp.d) {
    const std::int64_t sum = row_sum(a) + row_sum(b);
    const std::int64_t want = sp.target_sum(m);
    if (sum != want)
      out.push_back("sum " + std::to_string(sum) + " != " + std::to_string(want));
  }
  return out;
}

Symbol make_symbol(const SymbolSpace& sp, std::vector<int> a, std::vector<int> b) {
  auto v = violations(a, b, sp);
  if (!v.empty()) throw SymbolError("not a member of " + to_string(sp) + ": " + v.front());
  return Symbol{sp, std::move(a), std::move(b)};
}

Symbol shift(const Symbol& x) {
  const int g = x.space.r + x.space.s;
  Symbol y{x.space, {0}, {x.space.s}};
  for (int v : x.a) y.a.push_back(v + g);
  for (int v : x.b) y.b.push_back(v + g);
  return y;
}

std::optional<Symbol> unshift(const Symbol& x) {
  if (x.b.empty() || x.a.empty() || x.a[0] != 0 || x.b[0] != x.space.s) return std::nullopt;
  const int g = x.space.r + x.space.s;
  Symbol y{x.space, {}, {}};
  for (std::size_t i = 1; i < x.a.size(); ++i) y.a.push_back(x.a[i] - g);
  for (std::size_t i = 1; i < x.b.size(); ++i) y.b.push_back(x.b[i] - g);
  return y;
}

Symbol normalize(const Symbol& x) {
  if (!is_member(x)) throw SymbolError("normalize: not a member of " + to_string(x.space));
  Symbol y = x;
  while (auto z = unshift(y)) y = std::move(*z);
  if (y.space.unordered && y.space.d == 0 && std::tie(y.b, y.a) < std::tie(y.a, y.b))
    std::swap(y.a, y.b);
  return y;
}

Symbol normalize(const SymbolSpace& sp, std::vector<int> a, std::vector<int> b) {
  return normalize(Symbol{sp, std::move(a), std::move(b)});
}

Symbol at_length(const Symbol& x, int m) {
  Symbol y = normalize(x);
  if (m < y.m()) throw SymbolError("at_length: requested length below canonical length");
  while (y.m() < m) y = shift(y);
  return y;
}

bool same_class(const Symbol& x, const Symbol& y) {
  return x.space == y.space && normalize(x) == normalize(y);
}

Symbol add(const Symbol& x, const Symbol& y) {
  if (x.space.d != y.space.d) throw SymbolError("add: defect d differs");
  if (x.space.unordered != y.space.unordered) throw SymbolError("add: mixed ordered/unordered");
  const int m = std::max(normalize(x).m(), normalize(y).m());
  Symbol u = at_length(x, m), v = at_length(y, m);
  SymbolSpace sp{x.space.r + y.space.r, x.space.s + y.space.s, x.space.n + y.space.n, x.space.d,
                 x.space.unordered};
  Symbol z{sp, u.a, u.b};
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += v.a[i];
  for (std::size_t i = 0; i < z.b.size(); ++i) z.b[i] += v.b[i];
  return normalize(z);
}

Symbol from_bipartition(const Bipartition& bp, const SymbolSpace& sp, std::optional<int> m_opt) {
  if (sp.d != 0 && sp.d != 1) throw SymbolError("from_bipartition: d must be 0 or 1");
  if (bp.size() != sp.n) throw SymbolError("from_bipartition: size mismatch");
  const int m_min = std::max({bp.mu.length() - sp.d, bp.nu.length(), 0});
  const int m = m_opt.value_or(m_min);
  if (m < m_min) throw SymbolError("from_bipartition: length too small for bipartition");
  const int g = sp.r + sp.s;
  Symbol x{sp, bp.mu.ascending(m + sp.d), bp.nu.ascending(m)};
  for (int i = 0; i < m + sp.d; ++i) x.a[static_cast<std::size_t>(i)] += i * g;
  for (int i = 0; i < m; ++i) x.b[static_cast<std::size_t>(i)] += sp.s + i * g;
  if (!m_opt) return normalize(x);
  if (!is_member(x)) throw SymbolError("from_bipartition: internal inconsistency");
  return x;
}

Symbol from_bipartition(const UnorderedBipartition& bp, const SymbolSpace& sp) {
  if (!sp.unordered) throw SymbolError("from_bipartition: unordered input needs an unordered space");
  return from_bipartition(bp.representative(), sp);
}

Bipartition to_bipartition(const Symbol& x) {
  if (x.space.d != 0 && x.space.d != 1) throw SymbolError("to_bipartition: d must be 0 or 1");
  if (!is_member(x)) throw SymbolError("to_bipartition: not a member");
  const int g = x.space.r + x.space.s;
  std::vector<int> mu, nu;
  for (std::size_t i = 0; i < x.a.size(); ++i) mu.push_back(x.a[i] - static_cast<int>(i) * g);
  for (std::size_t i = 0; i < x.b.size(); ++i)
    nu.push_back(x.b[i] - x.space.s - static_cast<int>(i) * g);
  return {Partition(mu), Partition(nu)};
}

UnorderedBipartition to_unordered_bipartition(const Symbol& x) {
  return UnorderedBipartition(to_bipartition(x));
}

namespace {

bool interleaves(const std::vector<int>& a, const std::vector<int>& b) {
  // a1 <= b1 <= a2 <= ... with |a| - |b| in {0,1}
  std::vector<int> c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    c.push_back(a[i]);
    if (i < b.size()) c.push_back(b[i]);
  }
  return std::is_sorted(c.begin(), c.end());
}

}  // namespace

bool is_distinguished(const Symbol& x) {
  const int d = x.space.d;
  if (d != 0 && d != 1) return false;
  if (interleaves(x.a, x.b)) return true;
  return x.space.unordered && d == 0 && interleaves(x.b, x.a);
}

namespace {

// Partitions of k with at most len parts, as ascending zero-padded vectors.
std::vector<std::vector<int>> padded_partitions(int k, int len) {
  std::vector<std::vector<int>> out;
  if (len < 0) return out;
  for (const auto& p : partitions(k))
    if (p.length() <= len) out.push_back(p.ascending(len));
  return out;
}

}  // namespace

std::vector<Symbol> enumerate_by_search(const SymbolSpace& sp) {
  std::vector<Symbol> out;
  const std::int64_t total = sp.n + sp.defect();
  if (total < 0) return out;
  const int g = sp.r + sp.s;
  const int m0 = std::max(0, -sp.d);
  // A canonical representative of length m has all m+d excesses of A or all
  // m excesses of B positive, so m is bounded by the total excess.
  const int m_max = m0 + static_cast<int>(total) + 1;
  std::set<Symbol> seen;
  for (int m = m0; m <= m_max; ++m) {
    const bool can_unshift = m >= 1 && m + sp.d >= 1;
    for (int k = 0; k <= total; ++k) {
      auto alphas = padded_partitions(k, m + sp.d);
      auto betas = padded_partitions(static_cast<int>(total) - k, m);
      for (const auto& al : alphas) {
        for (const auto& be : betas) {
          if (can_unshift && al[0] == 0 && be[0] == 0) continue;
          Symbol x{sp, al, be};
          for (int i = 0; i < m + sp.d; ++i) x.a[static_cast<std::size_t>(i)] += i * g;
          for (int i = 0; i < m; ++i) x.b[static_cast<std::size_t>(i)] += sp.s + i * g;
          Symbol y = normalize(x);
          if (seen.insert(y).second) out.push_back(std::move(y));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Symbol> enumerate(const SymbolSpace& sp) {
  if (sp.d != 0 && sp.d != 1) return enumerate_by_search(sp);
  std::vector<Symbol> out;
  if (sp.unordered && sp.d == 0) {
    for (const auto& bp : enumerate_unordered_bipartitions(sp.n)) out.push_back(from_bipartition(bp, sp));
  } else {
    for (const auto& bp : enumerate_bipartitions(sp.n)) out.push_back(from_bipartition(bp, sp));
  }
  return out;
}

std::string to_string(const Symbol& x) { return "A=" + join(x.a) + ";B=" + join(x.b); }

namespace {

std::vector<int> parse_row(const std::string& body) {
  std::vector<int> v;
  if (body.empty() || body == "-") return v;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int x = 0;
    try {
      x = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw SymbolError("bad symbol entry '" + item + "'");
    }
    if (pos != item.size() || x < 0) throw SymbolError("bad symbol entry '" + item + "'");
    v.push_back(x);
  }
  return v;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> parse_rows(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (ch != ' ') text += ch;
  const auto semi = text.find(';');
  if (semi == std::string::npos || text.rfind("A=", 0) != 0 || text.compare(semi + 1, 2, "B=") != 0)
    throw SymbolError("symbol must look like A=0,4;B=3");
  return {parse_row(text.substr(2, semi - 2)), parse_row(text.substr(semi + 3))};
}

Symbol parse_symbol(const std::string& text, const SymbolSpace& sp) {
  auto [a, b] = parse_rows(text);
  if (sp.unordered && static_cast<int>(b.size()) - static_cast<int>(a.size()) == sp.d) std::swap(a, b);
  return normalize(make_symbol(sp, std::move(a), std::move(b)));
}

}  // namespace springer2
