#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarnet/temporal.hpp"
#include "polarnet/types.hpp"

namespace polarnet {

/// Assignment of every vertex to exactly one of k groups, each non-empty.
class Partition {
 public:
  Partition() = default;

  /// Throws ArgumentError if some index in [0, max+1) is unused.
  explicit Partition(std::vector<GroupId> assignment);
  Partition(std::vector<GroupId> assignment, std::vector<std::string> group_labels);

  std::size_t vertex_count() const noexcept { return assignment_.size(); }
  std::size_t group_count() const noexcept { return sizes_.size(); }
  GroupId group_of(VertexId v) const { return assignment_.at(v); }
  std::span<const GroupId> assignment() const noexcept { return assignment_; }
  std::span<const std::size_t> group_sizes() const noexcept { return sizes_; }

  /// Empty string when the group carries no label.
  const std::string& group_label(GroupId g) const { return labels_.at(g); }
  std::span<const std::string> group_labels() const noexcept { return labels_; }
  void set_group_label(GroupId g, std::string label);

  /// Group index whose label equals `label`, if any.
  std::optional<GroupId> find_group(std::string_view label) const;

  /// Vertices of group g in ascending order.
  std::vector<VertexId> members(GroupId g) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<GroupId> assignment_;
  std::vector<std::size_t> sizes_;
  std::vector<std::string> labels_;
};

struct RelabeledPartition {
  Partition partition;
  /// new_to_old[new index] = old index.
  std::vector<GroupId> new_to_old;
};

/// Renumbers groups by decreasing size; equal sizes keep their old order.
RelabeledPartition relabel_by_size(const Partition& p);

/// Reads "label,group" lines plus optional "#meta,group,label" lines. Every
/// vertex of `labels` must appear exactly once; violations raise FormatError.
Partition load_partition(std::istream& in, const LabelIndex& labels);
Partition load_partition_file(const std::string& path, const LabelIndex& labels);

void save_partition(const Partition& p, const LabelIndex& labels, std::ostream& out);

}  // namespace polarnet
