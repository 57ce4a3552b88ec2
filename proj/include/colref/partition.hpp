#pragma once

#include <vector>

namespace colref {

/// Vertex partition in canonical form: every class is a sorted vertex list
/// and classes are ordered by their smallest member. Two Partition values
/// compare equal iff they are the same set partition.
struct Partition {
  std::vector<std::vector<int>> classes;

  static Partition unit(int n);
  static Partition discrete(int n);

  /// Groups vertices by colour value; class order follows the canonical rule.
  static Partition from_colours(const std::vector<int>& colours);

  int class_count() const { return static_cast<int>(classes.size()); }
  int vertex_count() const;

  /// colour_of()[v] = index of the class containing v. n is the expected
  /// vertex count; throws InvalidPartition if the classes do not cover
  /// 0..n-1 exactly once.
  std::vector<int> colour_of(int n) const;

  /// True iff this partition covers 0..n-1 with disjoint classes.
  bool covers(int n) const;

  /// True iff every class of this partition is contained in a class of
  /// `coarser`.
  bool refines(const Partition& coarser) const;

  bool is_discrete() const;

  /// Restores the canonical ordering after direct manipulation of `classes`.
  void normalise();

  bool operator==(const Partition&) const = default;
};

} // namespace colref
