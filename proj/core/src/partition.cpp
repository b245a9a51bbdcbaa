#include "polarnet/partition.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>

#include "polarnet/errors.hpp"

namespace polarnet {

Partition::Partition(std::vector<GroupId> assignment) : assignment_(std::move(assignment)) {
  GroupId k = 0;
  for (GroupId g : assignment_) k = std::max<GroupId>(k, g + 1);
  sizes_.assign(k, 0);
  for (GroupId g : assignment_) ++sizes_[g];
  for (GroupId g = 0; g < k; ++g) {
    if (sizes_[g] == 0) throw ArgumentError("group index " + std::to_string(g) + " has no vertices");
  }
  labels_.assign(k, std::string{});
}

Partition::Partition(std::vector<GroupId> assignment, std::vector<std::string> group_labels)
    : Partition(std::move(assignment)) {
  if (group_labels.size() > labels_.size()) throw ArgumentError("more group labels than groups");
  std::move(group_labels.begin(), group_labels.end(), labels_.begin());
}

void Partition::set_group_label(GroupId g, std::string label) {
  if (g >= group_count()) throw ArgumentError("group index " + std::to_string(g) + " out of range");
  labels_[g] = std::move(label);
}

std::optional<GroupId> Partition::find_group(std::string_view label) const {
  for (GroupId g = 0; g < labels_.size(); ++g) {
    if (!labels_[g].empty() && labels_[g] == label) return g;
  }
  return std::nullopt;
}

std::vector<VertexId> Partition::members(GroupId g) const {
  if (g >= group_count()) throw ArgumentError("group index " + std::to_string(g) + " out of range");
  std::vector<VertexId> out;
  out.reserve(sizes_[g]);
  for (VertexId v = 0; v < assignment_.size(); ++v) {
    if (assignment_[v] == g) out.push_back(v);
  }
  return out;
}

RelabeledPartition relabel_by_size(const Partition& p) {
  const auto sizes = p.group_sizes();
  std::vector<GroupId> order(sizes.size());
  std::iota(order.begin(), order.end(), GroupId{0});
  std::stable_sort(order.begin(), order.end(), [&](GroupId a, GroupId b) { return sizes[a] > sizes[b]; });
  std::vector<GroupId> old_to_new(order.size());
  for (GroupId i = 0; i < order.size(); ++i) old_to_new[order[i]] = i;

  std::vector<GroupId> assignment(p.vertex_count());
  for (VertexId v = 0; v < assignment.size(); ++v) assignment[v] = old_to_new[p.group_of(v)];
  std::vector<std::string> labels(order.size());
  for (GroupId i = 0; i < order.size(); ++i) labels[i] = p.group_label(order[i]);
  return {Partition(std::move(assignment), std::move(labels)), std::move(order)};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

GroupId parse_group(std::string_view field, std::size_t line_no) {
  GroupId g = 0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), g);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw FormatError("partition line " + std::to_string(line_no) + ": group index is not a non-negative integer: '" +
                      std::string(field) + "'");
  }
  return g;
}

}  // namespace

Partition load_partition(std::istream& in, const LabelIndex& labels) {
  if (!in) throw IoError("partition stream is not readable");
  std::vector<GroupId> assignment(labels.size(), 0);
  std::vector<bool> seen(labels.size(), false);
  std::vector<std::pair<GroupId, std::string>> meta;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = trim(line);
    if (view.empty()) continue;
    if (view.starts_with("#meta,")) {
      view.remove_prefix(6);
      const auto comma = view.find(',');
      if (comma == std::string_view::npos) {
        throw FormatError("partition line " + std::to_string(line_no) + ": expected #meta,group-index,label");
      }
      meta.emplace_back(parse_group(trim(view.substr(0, comma)), line_no), std::string(trim(view.substr(comma + 1))));
      continue;
    }
    if (view.front() == '#') continue;
    const auto comma = view.rfind(',');
    if (comma == std::string_view::npos) {
      throw FormatError("partition line " + std::to_string(line_no) + ": expected vertex-label,group-index");
    }
    const auto label = trim(view.substr(0, comma));
    const auto id = labels.find(label);
    if (!id) {
      throw FormatError("partition line " + std::to_string(line_no) + ": unknown vertex '" + std::string(label) + "'");
    }
    if (seen[*id]) {
      throw FormatError("partition line " + std::to_string(line_no) + ": vertex '" + std::string(label) +
                        "' assigned twice");
    }
    seen[*id] = true;
    assignment[*id] = parse_group(trim(view.substr(comma + 1)), line_no);
  }
  if (in.bad()) throw IoError("read failure in partition stream");
  for (VertexId v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw FormatError("partition is missing vertex '" + labels.label(v) + "'");
  }
  Partition p;
  try {
    p = Partition(std::move(assignment));
  } catch (const ArgumentError& e) {
    throw FormatError(std::string("invalid partition: ") + e.what());
  }
  for (auto& [g, name] : meta) {
    if (g >= p.group_count()) {
      throw FormatError("#meta line names group " + std::to_string(g) + " but only " +
                        std::to_string(p.group_count()) + " groups exist");
    }
    p.set_group_label(g, std::move(name));
  }
  return p;
}

Partition load_partition_file(const std::string& path, const LabelIndex& labels) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open partition '" + path + "'");
  try {
    return load_partition(in, labels);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void save_partition(const Partition& p, const LabelIndex& labels, std::ostream& out) {
  if (labels.size() != p.vertex_count()) throw ArgumentError("label index and partition sizes differ");
  for (GroupId g = 0; g < p.group_count(); ++g) {
    if (!p.group_label(g).empty()) out << "#meta," << g << ',' << p.group_label(g) << '\n';
  }
  for (VertexId v = 0; v < p.vertex_count(); ++v) out << labels.label(v) << ',' << p.group_of(v) << '\n';
}

}  // namespace polarnet
