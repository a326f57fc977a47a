#include "springer2/bipartition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace springer2 {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("partition part must be nonnegative");
    if (p > 0) parts_.push_back(p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
}

std::vector<int> Partition::ascending(int len) const {
  if (len < length()) throw std::invalid_argument("padding length shorter than partition");
  std::vector<int> out(static_cast<std::size_t>(len - length()), 0);
  out.insert(out.end(), parts_.rbegin(), parts_.rend());
  return out;
}

int Partition::removable_boxes() const {
  int count = 0;
  for (int i = 0; i < length(); ++i)
    if (part(i) > part(i + 1)) ++count;
  return count;
}

std::vector<Partition> Partition::remove_box() const {
  std::vector<Partition> out;
  for (int i = 0; i < length(); ++i) {
    if (part(i) > part(i + 1)) {
      auto p = parts_;
      --p[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::int64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int t = part; t <= n; ++t) p[static_cast<std::size_t>(t)] += p[static_cast<std::size_t>(t - part)];
  return p[static_cast<std::size_t>(n)];
}

UnorderedBipartition::UnorderedBipartition(Partition a, Partition b) {
  Bipartition x{a, b};
  Bipartition y{std::move(b), std::move(a)};
  rep_ = (y < x) ? std::move(y) : std::move(x);
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_bipartitions: n must be nonnegative");
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k) {
    auto left = partitions(k);
    auto right = partitions(n - k);
    for (const auto& mu : left)
      for (const auto& nu : right) out.push_back({mu, nu});
  }
  return out;
}

std::vector<UnorderedBipartition> enumerate_unordered_bipartitions(int n) {
  std::vector<UnorderedBipartition> out;
  for (const auto& bp : enumerate_bipartitions(n)) {
    UnorderedBipartition u(bp);
    if (u.representative() == bp) out.push_back(std::move(u));
  }
  return out;
}

std::vector<Bipartition> branch(const Bipartition& bp) {
  if (bp.size() == 0) throw std::invalid_argument("branch: empty bipartition has no restriction");
  std::vector<Bipartition> out;
  for (auto& mu : bp.mu.remove_box()) out.push_back({std::move(mu), bp.nu});
  for (auto& nu : bp.nu.remove_box()) out.push_back({bp.mu, std::move(nu)});
  return out;
}

std::vector<UnorderedBipartition> branch(const UnorderedBipartition& ubp) {
  std::vector<UnorderedBipartition> out;
  for (const auto& bp : branch(ubp.representative())) out.emplace_back(bp);
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfies(const Bipartition& bp, Constraint c) {
  const int len = std::max(bp.mu.length(), bp.nu.length()) + 1;
  switch (c.kind) {
    case Constraint::Kind::all:
      return true;
    case Constraint::Kind::nu_le_mu_plus:
      for (int i = 0; i < len; ++i)
        if (bp.nu.part(i) > bp.mu.part(i) + c.k) return false;
      return true;
    case Constraint::Kind::nu_shifted_le_mu:
      // nu_{i+1} <= mu_i for i >= 1; nu_1 is unconstrained.
      for (int i = 0; i < len; ++i)
        if (bp.nu.part(i + 1) > bp.mu.part(i)) return false;
      return true;
  }
  return false;
}

std::int64_t count_constrained(int n, Constraint c) {
  std::int64_t count = 0;
  for (const auto& bp : enumerate_bipartitions(n))
    if (satisfies(bp, c)) ++count;
  return count;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.part(i));
  }
  return s + ")";
}

std::string to_string(const Bipartition& bp) {
  return "(" + to_string(bp.mu) + "," + to_string(bp.nu) + ")";
}

std::string to_string(const UnorderedBipartition& ubp) {
  const auto& r = ubp.representative();
  return "{" + to_string(r.mu) + "," + to_string(r.nu) + "}";
}

}  // namespace springer2
