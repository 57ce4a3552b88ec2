#include "colref/partition.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "colref/errors.hpp"

namespace colref {

Partition Partition::unit(int n) {
  Partition p;
  if (n > 0) {
    p.classes.emplace_back(n);
    for (int v = 0; v < n; ++v) p.classes[0][v] = v;
  }
  return p;
}

Partition Partition::discrete(int n) {
  Partition p;
  p.classes.reserve(n);
  for (int v = 0; v < n; ++v) p.classes.push_back({v});
  return p;
}

Partition Partition::from_colours(const std::vector<int>& colours) {
  std::map<int, std::vector<int>> by_colour;
  for (int v = 0; v < static_cast<int>(colours.size()); ++v) by_colour[colours[v]].push_back(v);
  Partition p;
  p.classes.reserve(by_colour.size());
  for (auto& [c, members] : by_colour) p.classes.push_back(std::move(members));
  p.normalise();
  return p;
}

int Partition::vertex_count() const {
  int total = 0;
  for (const auto& c : classes) total += static_cast<int>(c.size());
  return total;
}

std::vector<int> Partition::colour_of(int n) const {
  std::vector<int> colour(n, -1);
  for (int i = 0; i < class_count(); ++i) {
    for (int v : classes[i]) {
      if (v < 0 || v >= n || colour[v] != -1) {
        fail(Errc::InvalidPartition, "classes do not partition 0.." + std::to_string(n - 1));
      }
      colour[v] = i;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (colour[v] == -1) fail(Errc::InvalidPartition, "vertex " + std::to_string(v) + " not covered");
  }
  return colour;
}

bool Partition::covers(int n) const {
  std::vector<char> seen(n, 0);
  int total = 0;
  for (const auto& c : classes) {
    if (c.empty()) return false;
    for (int v : c) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
      ++total;
    }
  }
  return total == n;
}

bool Partition::refines(const Partition& coarser) const {
  const int n = vertex_count();
  if (coarser.vertex_count() != n) return false;
  std::vector<int> outer = coarser.colour_of(n);
  for (const auto& c : classes) {
    for (int v : c) {
      if (outer[v] != outer[c[0]]) return false;
    }
  }
  return true;
}

bool Partition::is_discrete() const {
  return std::all_of(classes.begin(), classes.end(),
                     [](const std::vector<int>& c) { return c.size() == 1; });
}

void Partition::normalise() {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

} // namespace colref
