#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polarnet/types.hpp"

namespace polarnet {

/// Bijection between vertex labels and dense ids in [0, size()).
class LabelIndex {
 public:
  /// Returns the id of `label`, assigning the next free id if unseen.
  VertexId intern(std::string_view label);

  std::optional<VertexId> find(std::string_view label) const;
  const std::string& label(VertexId id) const { return labels_.at(id); }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId, Hash, std::equal_to<>> ids_;
};

/// One interaction: information flows from `source` to `target`.
struct TemporalArc {
  VertexId source;
  VertexId target;
  Timestamp timestamp;

  friend bool operator==(const TemporalArc&, const TemporalArc&) = default;
};

/// Raw timestamped arcs before graph construction.
struct TemporalEdgeSet {
  std::vector<TemporalArc> arcs;
  LabelIndex labels;
  std::size_t dropped_self_loops = 0;
  std::size_t malformed_lines = 0;
  std::optional<std::size_t> first_malformed_line;

  std::size_t vertex_count() const noexcept { return labels.size(); }
};

struct IngestOptions {
  char delimiter = ',';
  /// Skip the first non-comment line.
  bool has_header = false;
  /// Reject the input if any line is malformed.
  bool strict = false;
};

/// Reads `source<delim>target<delim>timestamp` records. Lines starting with
/// '#' and blank lines are ignored. Self-loops are dropped and counted.
/// Throws ParseError in strict mode and IoError when the stream fails.
TemporalEdgeSet ingest_edge_list(std::istream& in, const IngestOptions& options = {});

/// Opens `path` and forwards to the stream overload.
TemporalEdgeSet ingest_edge_list_file(const std::string& path, const IngestOptions& options = {});

/// Writes arcs in ingestion order using the same record format.
void write_edge_list(const TemporalEdgeSet& edges, std::ostream& out, char delimiter = ',');

}  // namespace polarnet
