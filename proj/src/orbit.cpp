#include "springer2/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "springer2/f2.hpp"

namespace springer2 {

const std::vector<LieCase>& all_cases() {
  static const std::vector<LieCase> cases{LieCase::sp, LieCase::oo, LieCase::eo, LieCase::spd,
                                          LieCase::ood};
  return cases;
}

std::string case_name(LieCase c) {
  switch (c) {
    case LieCase::sp: return "sp";
    case LieCase::oo: return "oo";
    case LieCase::eo: return "eo";
    case LieCase::spd: return "spd";
    case LieCase::ood: return "ood";
  }
  return "?";
}

LieCase parse_case(const std::string& s) {
  for (LieCase c : all_cases())
    if (case_name(c) == s) return c;
  throw std::invalid_argument("unknown case '" + s + "' (expected sp, oo, eo, spd or ood)");
}

SymbolSpace case_space(LieCase c, int n) {
  switch (c) {
    case LieCase::sp: return {n + 1, n + 1, n, 1, false};
    case LieCase::oo: return {2, n + 1, n, 1, false};
    case LieCase::eo: return {n + 1, 0, n, 0, true};
    case LieCase::spd: return {1, n + 1, n, 1, false};
    case LieCase::ood: return {n + 1, 0, n, 1, true};
  }
  throw std::logic_error("case_space");
}

Constraint case_constraint(LieCase c) {
  switch (c) {
    case LieCase::sp: return Constraint::all();
    case LieCase::oo: return Constraint::nu_le_mu_plus(2);
    case LieCase::eo: return Constraint::nu_le_mu_plus(0);
    case LieCase::spd: return Constraint::nu_le_mu_plus(1);
    case LieCase::ood: return Constraint::nu_shifted_le_mu();
  }
  throw std::logic_error("case_constraint");
}

bool odd_length(LieCase c) { return c == LieCase::sp || c == LieCase::oo || c == LieCase::spd; }

int OrbitDatum::chi_of(int v) const {
  auto it = chi.find(v);
  return it == chi.end() ? 0 : it->second;
}

int OrbitDatum::multiplicity(int v) const {
  return static_cast<int>(std::count(lambda.begin(), lambda.end(), v));
}

namespace {

// Allowed chi range for a positive part value.
std::pair<int, int> chi_range(LieCase c, int v) {
  switch (c) {
    case LieCase::sp: return {0, v / 2};
    case LieCase::spd: return {v / 2, v};  // 2chi >= v-1
    default: return {(v + 1) / 2, v};      // 2chi >= v
  }
}

int target_size(const OrbitDatum& x) {
  switch (x.lie) {
    case LieCase::oo: return 2 * x.n + 1;
    case LieCase::ood: return 2 * x.n - 2 * x.m;
    default: return 2 * x.n;
  }
}

std::string idx(int i) { return std::to_string(i); }

}  // namespace

std::vector<std::string> violations(const OrbitDatum& x) {
  std::vector<std::string> out;
  const int L = x.length();
  if (x.n < 0) out.push_back("n must be nonnegative");
  if (!std::is_sorted(x.lambda.begin(), x.lambda.end())) out.push_back("lambda must be ascending");
  if (L > 0 && x.lambda.front() < 0) out.push_back("negative part");
  if (!out.empty()) return out;

  std::set<int> values;
  for (int v : x.lambda)
    if (v > 0) values.insert(v);
  for (const auto& [v, c] : x.chi)
    if (!values.count(v)) out.push_back("chi given for absent value " + idx(v));
  for (int v : values)
    if (!x.chi.count(v)) out.push_back("chi missing for value " + idx(v));

  const int total = std::accumulate(x.lambda.begin(), x.lambda.end(), 0);
  if (total != target_size(x))
    out.push_back("sum of parts " + idx(total) + " != " + idx(target_size(x)));
  if (x.lie != LieCase::ood && x.m != 0) out.push_back("defect m is only used for ood");

  if (odd_length(x.lie)) {
    if (L % 2 == 0) out.push_back("length must be odd");
    if (L == 0 || x.lambda.front() != 0) out.push_back("lambda_1 must be 0");
  } else if (L % 2) {
    out.push_back("length must be even");
  }

  for (int v : values) {
    auto [lo, hi] = chi_range(x.lie, v);
    const int c = x.chi_of(v);
    if (c < lo || c > hi)
      out.push_back("chi(" + idx(v) + ")=" + idx(c) + " outside [" + idx(lo) + "," + idx(hi) + "]");
  }
  for (int i = 2; i <= L; ++i) {
    if (x.chi_at(i) < x.chi_at(i - 1)) out.push_back("chi decreases at index " + idx(i));
    if (x.part(i) - x.chi_at(i) < x.part(i - 1) - x.chi_at(i - 1))
      out.push_back("lambda-chi decreases at index " + idx(i));
  }

  switch (x.lie) {
    case LieCase::sp:
      for (int v : values)
        if (2 * x.chi_of(v) < v && x.multiplicity(v) % 2)
          out.push_back("value " + idx(v) + " with chi < v/2 has odd multiplicity");
      break;
    case LieCase::oo: {
      std::vector<int> odd;
      for (int v : values)
        if (x.multiplicity(v) % 2) odd.push_back(v);
      const bool ok = (odd.size() == 1 && odd[0] == 1) ||
                      (odd.size() == 2 && odd[1] == odd[0] + 1);
      if (!ok) out.push_back("odd-multiplicity values are not {a,a-1}");
      std::vector<int> jumps;
      for (int j = 3; j <= L; j += 2)
        if (x.part(j) > x.part(j - 1)) jumps.push_back(j);
      if (jumps.size() != 1) {
        out.push_back("no unique odd index m0 with a strict increase");
        break;
      }
      const int m0 = jumps[0];
      for (int j = 1; j <= m0; ++j)
        if (x.chi_at(j) != x.part(j)) out.push_back("chi(lambda_" + idx(j) + ") != lambda_" + idx(j));
      for (int j = 1; 2 * j + 1 <= L; ++j)
        if (j != (m0 - 1) / 2 && x.part(2 * j) != x.part(2 * j + 1))
          out.push_back("lambda_" + idx(2 * j) + " != lambda_" + idx(2 * j + 1));
      if (x.part(m0) != x.part(m0 - 1) + 1) out.push_back("lambda_m0 != lambda_(m0-1) + 1");
      break;
    }
    case LieCase::eo:
    case LieCase::ood:
      for (int j = 1; 2 * j <= L; ++j)
        if (x.part(2 * j - 1) != x.part(2 * j))
          out.push_back("lambda_" + idx(2 * j - 1) + " != lambda_" + idx(2 * j));
      break;
    case LieCase::spd:
      for (int j = 1; 2 * j + 1 <= L; ++j)
        if (x.part(2 * j) != x.part(2 * j + 1))
          out.push_back("lambda_" + idx(2 * j) + " != lambda_" + idx(2 * j + 1));
      break;
  }
  if (x.lie == LieCase::eo || x.lie == LieCase::ood || x.lie == LieCase::spd)
    for (int v : values)
      if (x.multiplicity(v) % 2) out.push_back("value " + idx(v) + " has odd multiplicity");
  if (x.lie == LieCase::ood) {
    if (x.m < 0 || x.m > x.n) out.push_back("m outside [0,n]");
    if (L > 0 && x.m < x.part(L) - x.chi_at(L)) out.push_back("m < lambda_L - chi(lambda_L)");
  }
  return out;
}

OrbitDatum canonicalize_padding(const OrbitDatum& x) {
  OrbitDatum y = x;
  y.lambda.clear();
  for (int v : x.lambda)
    if (v > 0) y.lambda.push_back(v);
  std::sort(y.lambda.begin(), y.lambda.end());
  if (odd_length(x.lie)) {
    const int zeros = y.lambda.size() % 2 ? 2 : 1;
    y.lambda.insert(y.lambda.begin(), static_cast<std::size_t>(zeros), 0);
  }
  for (auto it = y.chi.begin(); it != y.chi.end();)
    it = (it->first <= 0 || !std::count(y.lambda.begin(), y.lambda.end(), it->first)) ? y.chi.erase(it)
                                                                                       : std::next(it);
  return y;
}

OrbitDatum pad(const OrbitDatum& x, int pairs) {
  OrbitDatum y = x;
  y.lambda.insert(y.lambda.begin(), static_cast<std::size_t>(2 * pairs), 0);
  return y;
}

namespace {

void chi_assignments(const OrbitDatum& base, const std::vector<int>& values, std::size_t k,
                     OrbitDatum& cur, std::vector<OrbitDatum>& out) {
  if (k == values.size()) {
    if (is_valid(cur)) out.push_back(cur);
    return;
  }
  const int v = values[k];
  auto [lo, hi] = chi_range(base.lie, v);
  // chi and v - chi are nondecreasing in v.
  if (k > 0) {
    const int pv = values[k - 1], pc = cur.chi[pv];
    lo = std::max(lo, pc);
    hi = std::min(hi, v - pv + pc);
  }
  for (int c = lo; c <= hi; ++c) {
    cur.chi[v] = c;
    chi_assignments(base, values, k + 1, cur, out);
  }
  cur.chi.erase(v);
}

void add_orbits(LieCase c, int n, int m, const std::vector<int>& parts, std::vector<OrbitDatum>& out) {
  OrbitDatum base{c, n, parts, {}, m};
  base = canonicalize_padding(base);
  std::vector<int> values;
  for (int v : base.lambda)
    if (v > 0 && (values.empty() || values.back() != v)) values.push_back(v);
  OrbitDatum cur = base;
  chi_assignments(base, values, 0, cur, out);
}

std::vector<int> doubled(const Partition& p) {
  std::vector<int> v;
  for (int x : p.parts()) {
    v.push_back(x);
    v.push_back(x);
  }
  return v;
}

}  // namespace

std::vector<OrbitDatum> enumerate_orbits(LieCase c, int n) {
  if (n < 0) throw OrbitError("enumerate_orbits: n must be nonnegative");
  std::vector<OrbitDatum> out;
  switch (c) {
    case LieCase::sp:
      for (const auto& p : partitions(2 * n)) add_orbits(c, n, 0, p.parts(), out);
      break;
    case LieCase::oo:
      for (const auto& p : partitions(2 * n + 1)) add_orbits(c, n, 0, p.parts(), out);
      break;
    case LieCase::eo:
    case LieCase::spd:
      for (const auto& p : partitions(n)) add_orbits(c, n, 0, doubled(p), out);
      break;
    case LieCase::ood:
      for (int m = 0; m <= n; ++m)
        for (const auto& p : partitions(n - m)) add_orbits(c, n, m, doubled(p), out);
      break;
  }
  std::sort(out.begin(), out.end(), [](const OrbitDatum& a, const OrbitDatum& b) {
    return to_string(a) < to_string(b);
  });
  return out;
}

OrbitDatum zero_orbit(LieCase c, int n) {
  OrbitDatum x{c, n, {}, {}, 0};
  const int ones = c == LieCase::oo ? 2 * n + 1 : 2 * n;
  x.lambda.assign(static_cast<std::size_t>(ones), 1);
  if (ones > 0) x.chi[1] = (c == LieCase::sp || c == LieCase::spd) ? 0 : 1;
  return canonicalize_padding(x);
}

OrbitDatum regular_orbit(LieCase c, int n) {
  OrbitDatum x{c, n, {}, {}, 0};
  switch (c) {
    case LieCase::sp:
      if (n > 0) {
        x.lambda = {2 * n};
        x.chi[2 * n] = n;
      }
      break;
    case LieCase::oo:
      x.lambda = {n, n + 1};
      x.chi[n + 1] = n + 1;
      if (n > 0) x.chi[n] = n;
      break;
    case LieCase::eo:
    case LieCase::spd:
      if (n > 0) {
        x.lambda = {n, n};
        x.chi[n] = n;
      }
      break;
    case LieCase::ood:
      x.m = n;
      break;
  }
  return canonicalize_padding(x);
}

std::string to_string(const OrbitDatum& x) {
  std::string s;
  if (x.lie == LieCase::ood) s = "m=" + std::to_string(x.m) + ";";
  std::string body;
  for (auto it = x.lambda.rbegin(); it != x.lambda.rend(); ++it) {
    if (*it <= 0) continue;
    if (!body.empty()) body += ',';
    body += std::to_string(*it) + "_" + std::to_string(x.chi_of(*it));
  }
  return s + (body.empty() ? "-" : body);
}

OrbitDatum parse_orbit(LieCase c, int n, const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (ch != ' ') text += ch;
  OrbitDatum x{c, n, {}, {}, 0};
  auto to_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw OrbitError("bad number '" + s + "' in orbit '" + raw + "'");
    }
    if (pos != s.size()) throw OrbitError("bad number '" + s + "' in orbit '" + raw + "'");
    return v;
  };
  if (text.rfind("m=", 0) == 0) {
    const auto semi = text.find(';');
    if (semi == std::string::npos) throw OrbitError("missing ';' after m=<k>");
    if (c != LieCase::ood) throw OrbitError("m=<k> prefix is only allowed for ood");
    x.m = to_int(text.substr(2, semi - 2));
    text = text.substr(semi + 1);
  } else if (c == LieCase::ood) {
    throw OrbitError("ood orbits need an m=<k>; prefix");
  }
  if (text != "-") {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto us = item.find('_');
      if (us == std::string::npos) throw OrbitError("orbit item '" + item + "' must look like v_c");
      const int v = to_int(item.substr(0, us)), ch = to_int(item.substr(us + 1));
      if (v <= 0) throw OrbitError("orbit parts must be positive");
      auto [it, fresh] = x.chi.emplace(v, ch);
      if (!fresh && it->second != ch) throw OrbitError("conflicting chi for value " + std::to_string(v));
      x.lambda.push_back(v);
    }
  }
  x = canonicalize_padding(x);
  auto v = violations(x);
  if (!v.empty()) throw OrbitError("invalid " + case_name(c) + " orbit '" + raw + "': " + v.front());
  return x;
}

int ComponentGroup::rank() const {
  return even_subgroup ? std::max(free_rank() - 1, 0) : free_rank();
}

int ComponentGroup::basis_index(int class_id) const {
  auto it = std::find(surviving.begin(), surviving.end(), class_id);
  return it == surviving.end() ? -1 : static_cast<int>(it - surviving.begin());
}

std::uint64_t ComponentGroup::image(int i) const {
  if (i < 1 || i >= static_cast<int>(class_of.size()) || class_of[static_cast<std::size_t>(i)] < 0) return 0;
  const int b = basis_index(class_of[static_cast<std::size_t>(i)]);
  return b < 0 ? 0 : std::uint64_t{1} << b;
}

std::uint64_t ComponentGroup::reduce(std::uint64_t mask) const {
  const int k = free_rank();
  if (even_subgroup && k > 0 && ((mask >> (k - 1)) & 1U)) mask ^= f2::full(k);
  return mask;
}

std::vector<std::uint64_t> ComponentGroup::characters() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rank()); ++mask) out.push_back(mask);
  return out;
}

ComponentGroup component_group(const OrbitDatum& x) {
  ComponentGroup g;
  const int L = x.length();
  g.class_of.assign(static_cast<std::size_t>(L) + 1, -1);
  g.even_subgroup = x.lie == LieCase::eo;
  if (x.lie == LieCase::sp) return g;

  auto is_gen = [&](int i) {
    const int v = x.part(i), c = x.chi_at(i);
    return x.lie == LieCase::spd ? 2 * c != v - 1 : 2 * c != v;
  };
  std::vector<int> parent(static_cast<std::size_t>(L) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
    return i;
  };
  for (int i = 1; i <= L; ++i)
    if (is_gen(i)) g.generators.push_back(i);
  for (int i = 1; i < L; ++i) {
    if (!is_gen(i) || !is_gen(i + 1)) continue;
    const int lhs = x.chi_at(i) + x.chi_at(i + 1), rhs = x.part(i + 1);
    const bool merge = x.lie == LieCase::spd ? lhs >= rhs : lhs > rhs;
    if (merge) parent[static_cast<std::size_t>(find(i + 1))] = find(i);
  }
  std::map<int, int> root_to_class;
  for (int i : g.generators) {
    const int r = find(i);
    auto [it, fresh] = root_to_class.emplace(r, static_cast<int>(g.classes.size()));
    if (fresh) {
      g.classes.emplace_back();
      g.killed.push_back(false);
    }
    g.classes[static_cast<std::size_t>(it->second)].push_back(i);
    g.class_of[static_cast<std::size_t>(i)] = it->second;
  }
  auto kill = [&](int i) {
    if (g.class_of[static_cast<std::size_t>(i)] >= 0) g.killed[static_cast<std::size_t>(g.class_of[static_cast<std::size_t>(i)])] = true;
  };
  for (int i : g.generators) {
    switch (x.lie) {
      case LieCase::oo:
      case LieCase::eo:
        if (x.multiplicity(x.part(i)) % 2) kill(i);
        break;
      case LieCase::spd:
        if (x.part(i) == 0) kill(i);
        break;
      case LieCase::ood:
        if (i == L && x.chi_at(L) >= x.m) kill(i);
        break;
      case LieCase::sp:
        break;
    }
  }
  for (std::size_t k = 0; k < g.classes.size(); ++k)
    if (!g.killed[k]) g.surviving.push_back(static_cast<int>(k));
  return g;
}

}  // namespace springer2
