#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aksw {

using Partition = std::vector<int>;

/// 1-based box coordinates; comp is the component index.
struct Box {
  int row = 1;
  int col = 1;
  int comp = 1;
  friend auto operator<=>(const Box&, const Box&) = default;
  std::string to_string() const;
};

/// Reading order: component, then row, then column.
inline bool reading_before(const Box& a, const Box& b) {
  if (a.comp != b.comp) return a.comp < b.comp;
  if (a.row != b.row) return a.row < b.row;
  return a.col < b.col;
}

class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components);
  static MultiPartition empty(int d) { return MultiPartition(std::vector<Partition>(static_cast<std::size_t>(d))); }
  /// Parses `(2,1|,|3)`; throws ParseError.
  static MultiPartition parse(std::string_view text);

  int d() const { return static_cast<int>(parts_.size()); }
  int size() const;
  const std::vector<Partition>& components() const { return parts_; }
  const Partition& component(int c) const { return parts_[static_cast<std::size_t>(c - 1)]; }
  /// Length of row `row` in component `comp` (0 past the last row).
  int row_length(int comp, int row) const;
  bool contains(const Box& b) const;
  MultiPartition with_box(const Box& b) const;
  MultiPartition without_box(const Box& b) const;
  /// Every component has at most bounds[c-1] rows.
  bool fits(const std::vector<int>& bounds) const;

  std::string to_string() const;
  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;

 private:
  std::vector<Partition> parts_;
};

/// Standard tableau stored as the path of boxes: path[i-1] holds entry i.
struct StandardTableau {
  MultiPartition shape;
  std::vector<Box> path;

  int n() const { return static_cast<int>(path.size()); }
  /// filling[c-1][a-1][b-1] is the entry at box (a,b,c).
  std::vector<std::vector<std::vector<int>>> filling() const;
  /// Box list `[(1,1,1),(1,1,3),...]`.
  std::string to_string() const;
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

/// Partitions of n, largest first in reverse-lexicographic order.
std::vector<Partition> partitions(int n);

std::vector<MultiPartition> multipartitions(int d, int n);
std::vector<MultiPartition> restricted_multipartitions(int d, int n, const std::vector<int>& bounds);

/// Addable boxes ordered by (component, row); with bounds, boxes that would
/// open row bounds[c-1]+1 are excluded.
std::vector<Box> addable_boxes(const MultiPartition& mu, const std::optional<std::vector<int>>& bounds = std::nullopt);
std::vector<Box> removable_boxes(const MultiPartition& mu);

/// All standard tableaux of shape mu, in lexicographic path order (so the
/// first one fills rows in reading order).
std::vector<StandardTableau> standard_tableaux(const MultiPartition& mu);

/// Saturated chains from the empty multipartition to mu, counted by a
/// memoized recursion over removable boxes.
std::uint64_t path_count(const MultiPartition& mu, const std::optional<std::vector<int>>& bounds = std::nullopt);

/// Box holding entry i (1-based).
Box content_of_entry(const StandardTableau& t, int i);

/// The tableau with entries i and i+1 exchanged, if still standard.
std::optional<StandardTableau> swap_entries(const StandardTableau& t, int i);

/// Index of t in tableaux (throws if absent).
std::size_t tableau_index(const std::vector<StandardTableau>& tableaux, const StandardTableau& t);

}  // namespace aksw
