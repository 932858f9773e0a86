#include "tlbd/diagram.hpp"

#include <algorithm>

#include "tlbd/errors.hpp"

namespace tlbd {

bool left_exposed(const Diagram& d, int arc_index) {
  const auto [i, j] = d.arcs[static_cast<size_t>(arc_index)];
  for (const auto& [k, l] : d.arcs)
    if (k < i && j < l) return false;
  return true;
}

void validate(const Diagram& d) {
  const int n = d.points();
  if (n % 2 != 0) throw contract_violation("diagram: odd boundary size");
  if (d.arcs.size() != static_cast<size_t>(n / 2) || d.dots.size() != d.arcs.size())
    throw contract_violation("diagram: arc/dot count mismatch");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (const auto& [i, j] : d.arcs) {
    if (i < 1 || j < 1 || i > n || j > n || i >= j)
      throw contract_violation("diagram: bad arc endpoints");
    if (seen[static_cast<size_t>(i)] || seen[static_cast<size_t>(j)])
      throw contract_violation("diagram: repeated endpoint");
    seen[static_cast<size_t>(i)] = seen[static_cast<size_t>(j)] = 1;
  }
  for (size_t a = 0; a < d.arcs.size(); ++a)
    for (size_t b = a + 1; b < d.arcs.size(); ++b) {
      auto [i, j] = d.arcs[a];
      auto [k, l] = d.arcs[b];
      if (k < i) {
        std::swap(i, k);
        std::swap(j, l);
      }
      if (i < k && k < j && j < l) throw contract_violation("diagram: crossing arcs");
    }
  for (size_t a = 0; a < d.arcs.size(); ++a) {
    if (d.dots[a] != 0 && d.dots[a] != 1) throw contract_violation("diagram: dot not a parity bit");
    if (d.dots[a] == 1 && !left_exposed(d, static_cast<int>(a)))
      throw contract_violation("diagram: dotted arc not wall-exposed");
  }
}

void normalize(Diagram& d) {
  for (auto& a : d.arcs)
    if (a.first > a.second) std::swap(a.first, a.second);
  std::vector<size_t> order(d.arcs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return d.arcs[a] < d.arcs[b]; });
  std::vector<std::pair<int, int>> arcs(d.arcs.size());
  std::vector<int> dots(d.dots.size());
  for (size_t i = 0; i < order.size(); ++i) {
    arcs[i] = d.arcs[order[i]];
    dots[i] = d.dots[order[i]];
  }
  d.arcs = std::move(arcs);
  d.dots = std::move(dots);
}

namespace {

// all non-crossing perfect matchings of points lo..hi (inclusive)
void matchings(int lo, int hi, std::vector<std::pair<int, int>>& acc,
               std::vector<std::vector<std::pair<int, int>>>& out) {
  if (lo > hi) {
    out.push_back(acc);
    return;
  }
  for (int j = lo + 1; j <= hi; j += 2) {
    // matching lo with j separates the inside from the outside
    std::vector<std::pair<int, int>> tmp;
    std::vector<std::vector<std::pair<int, int>>> inner;
    matchings(lo + 1, j - 1, tmp, inner);
    for (const auto& in : inner) {
      const size_t mark = acc.size();
      acc.emplace_back(lo, j);
      acc.insert(acc.end(), in.begin(), in.end());
      matchings(j + 1, hi, acc, out);
      acc.resize(mark);
    }
  }
}

}  // namespace

std::vector<Diagram> enumerate_basis(int m, int k) {
  std::vector<Diagram> out;
  const int n = m + k;
  if (n % 2 != 0 || n < 0) return out;  // zero Hom-space
  if (n == 0) {
    out.push_back(Diagram{0, 0, {}, {}});
    return out;
  }
  std::vector<std::pair<int, int>> acc;
  std::vector<std::vector<std::pair<int, int>>> all;
  matchings(1, n, acc, all);
  for (auto& arcs : all) {
    Diagram base{m, k, arcs, std::vector<int>(arcs.size(), 0)};
    normalize(base);
    std::vector<int> exposed;
    for (size_t a = 0; a < base.arcs.size(); ++a)
      if (left_exposed(base, static_cast<int>(a))) exposed.push_back(static_cast<int>(a));
    const size_t subsets = size_t{1} << exposed.size();
    for (size_t mask = 0; mask < subsets; ++mask) {
      Diagram d = base;
      for (size_t t = 0; t < exposed.size(); ++t)
        if (mask & (size_t{1} << t)) d.dots[static_cast<size_t>(exposed[t])] = 1;
      out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Diagram identity_diagram(int n) {
  Diagram d{n, n, {}, {}};
  for (int i = 1; i <= n; ++i) {
    d.arcs.emplace_back(i, 2 * n + 1 - i);
    d.dots.push_back(0);
  }
  normalize(d);
  return d;
}

}  // namespace tlbd
