#include "polarnet/temporal.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "polarnet/errors.hpp"

namespace polarnet {

VertexId LabelIndex::intern(std::string_view label) {
  if (auto it = ids_.find(label); it != ids_.end()) return it->second;
  const auto id = static_cast<VertexId>(labels_.size());
  if (id == kInvalidVertex) throw ArgumentError("vertex id space exhausted");
  labels_.emplace_back(label);
  ids_.emplace(labels_.back(), id);
  return id;
}

std::optional<VertexId> LabelIndex::find(std::string_view label) const {
  if (auto it = ids_.find(label); it != ids_.end()) return it->second;
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

struct Record {
  std::string_view source;
  std::string_view target;
  Timestamp timestamp;
};

// Returns an error message, or an empty string on success.
std::string split_record(std::string_view line, char delimiter, Record& out) {
  std::string_view fields[3];
  std::size_t count = 0;
  while (true) {
    const auto pos = line.find(delimiter);
    if (count == 3) return "expected 3 fields, found more";
    fields[count++] = trim(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  if (count != 3) return "expected 3 fields, found " + std::to_string(count);
  if (fields[0].empty() || fields[1].empty()) return "empty vertex label";
  const auto ts = fields[2];
  Timestamp value = 0;
  const auto [end, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), value);
  if (ec != std::errc{} || end != ts.data() + ts.size()) return "timestamp is not an integer: '" + std::string(ts) + "'";
  if (value < 0) return "negative timestamp";
  out = {fields[0], fields[1], value};
  return {};
}

}  // namespace

TemporalEdgeSet ingest_edge_list(std::istream& in, const IngestOptions& options) {
  if (!in) throw IoError("edge-list stream is not readable");
  TemporalEdgeSet result;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = options.has_header;
  while (std::getline(in, line)) {
    ++line_no;
    const auto view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    Record record{};
    if (auto err = split_record(view, options.delimiter, record); !err.empty()) {
      if (options.strict) throw ParseError(line_no, err);
      ++result.malformed_lines;
      if (!result.first_malformed_line) result.first_malformed_line = line_no;
      continue;
    }
    if (record.source == record.target) {
      ++result.dropped_self_loops;
      continue;
    }
    const VertexId s = result.labels.intern(record.source);
    const VertexId t = result.labels.intern(record.target);
    result.arcs.push_back({s, t, record.timestamp});
  }
  if (in.bad()) throw IoError("read failure after line " + std::to_string(line_no));
  return result;
}

TemporalEdgeSet ingest_edge_list_file(const std::string& path, const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list '" + path + "'");
  try {
    return ingest_edge_list(in, options);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

void write_edge_list(const TemporalEdgeSet& edges, std::ostream& out, char delimiter) {
  for (const auto& arc : edges.arcs) {
    out << edges.labels.label(arc.source) << delimiter << edges.labels.label(arc.target) << delimiter
        << arc.timestamp << '\n';
  }
}

}  // namespace polarnet
