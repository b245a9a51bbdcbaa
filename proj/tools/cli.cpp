#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polarnet/community.hpp"
#include "polarnet/domination.hpp"
#include "polarnet/errors.hpp"
#include "polarnet/graph.hpp"
#include "polarnet/partition.hpp"
#include "polarnet/polarization.hpp"
#include "polarnet/serialize.hpp"
#include "polarnet/synth.hpp"
#include "polarnet/temporal.hpp"
#include "polarnet/windows.hpp"

namespace polarnet::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string input;
  std::string partition;
  std::string out;
  std::string format = "csv";
  std::string delimiter = ",";
  bool header = false;
  bool strict = false;
  Timestamp window_seconds = 0;
  Timestamp window_origin = 0;
  Timestamp exclude_from = std::numeric_limits<Timestamp>::min();
  Timestamp exclude_to = std::numeric_limits<Timestamp>::max();
  bool has_exclusion = false;
  Timestamp from = std::numeric_limits<Timestamp>::min();
  Timestamp to = std::numeric_limits<Timestamp>::max();
  std::vector<std::string> groups;
  std::vector<double> rho;
  std::string mode = "unrestricted";
  bool curve = false;
  std::size_t max_spreaders = 0;
  std::uint64_t seed = 0;
  double resolution = 1.0;
  double min_improvement = 1e-7;
  std::size_t top = 10;
  std::vector<std::string> group_labels;
  // synth
  std::string family;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> degrees;
  double p_in = 0.0;
  double p_out = 0.0;
  std::size_t n = 0;
  std::size_t swaps = 0;
  Timestamp origin = 0;
  Timestamp days = 1;
};

// Options that were given on the command line, for provenance.
json provenance(const CLI::App& sub, const RunConfig& cfg) {
  json doc;
  doc["command"] = cfg.command;
  json options = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    const auto& values = opt->results();
    std::string name = opt->get_name();
    if (name.rfind("--", 0) == 0) name = name.substr(2);
    if (values.empty() || opt->get_type_size() == 0) {
      options[name] = true;
    } else if (values.size() == 1) {
      options[name] = values.front();
    } else {
      options[name] = values;
    }
  }
  doc["options"] = std::move(options);
  return doc;
}

char delimiter_of(const RunConfig& cfg) {
  if (cfg.delimiter == "\\t" || cfg.delimiter == "tab") return '\t';
  if (cfg.delimiter.size() != 1) throw ArgumentError("--delimiter must be a single character");
  return cfg.delimiter.front();
}

IngestOptions ingest_options(const RunConfig& cfg) {
  IngestOptions o;
  o.delimiter = delimiter_of(cfg);
  o.has_header = cfg.header;
  o.strict = cfg.strict;
  return o;
}

fs::path prepare_out_dir(const RunConfig& cfg) {
  if (cfg.out.empty()) throw ArgumentError("--out is required");
  fs::path dir(cfg.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + cfg.out + "'");
  return dir;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write '" + path.string() + "'");
  return f;
}

void check_format(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") throw ArgumentError("--format must be csv or json");
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string known_groups(const Partition& p) {
  std::ostringstream os;
  for (GroupId g = 0; g < p.group_count(); ++g) {
    if (g) os << ", ";
    os << g;
    if (!p.group_label(g).empty()) os << " (" << p.group_label(g) << ")";
  }
  return os.str();
}

std::vector<GroupId> select_groups(const std::vector<std::string>& selectors, const Partition& p) {
  std::vector<GroupId> out;
  for (const auto& raw : selectors) {
    std::stringstream ss(raw);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (token.empty()) continue;
      std::optional<GroupId> g;
      if (all_digits(token)) {
        const auto value = std::stoull(token);
        if (value < p.group_count()) g = static_cast<GroupId>(value);
      } else {
        g = p.find_group(token);
      }
      if (!g) throw ArgumentError("unknown group '" + token + "'; known groups: " + known_groups(p));
      out.push_back(*g);
    }
  }
  return out;
}

TemporalEdgeSet without_range(const TemporalEdgeSet& edges, Timestamp from, Timestamp to) {
  TemporalEdgeSet kept;
  kept.labels = edges.labels;
  for (const auto& arc : edges.arcs) {
    if (arc.timestamp >= from && arc.timestamp < to) continue;
    kept.arcs.push_back(arc);
  }
  return kept;
}

TemporalEdgeSet within_range(const TemporalEdgeSet& edges, Timestamp from, Timestamp to) {
  TemporalEdgeSet kept;
  kept.labels = edges.labels;
  for (const auto& arc : edges.arcs) {
    if (arc.timestamp >= from && arc.timestamp < to) kept.arcs.push_back(arc);
  }
  return kept;
}

// ---------------------------------------------------------------- ingest-check

int cmd_ingest_check(const RunConfig& cfg, const json& config, std::ostream& out) {
  check_format(cfg);
  const auto edges = ingest_edge_list_file(cfg.input, ingest_options(cfg));
  json summary{{"input", cfg.input},
               {"arcs", edges.arcs.size()},
               {"vertices", edges.vertex_count()},
               {"dropped_self_loops", edges.dropped_self_loops},
               {"malformed_lines", edges.malformed_lines}};
  if (edges.first_malformed_line) summary["first_malformed_line"] = *edges.first_malformed_line;
  if (!edges.arcs.empty()) {
    const auto [lo, hi] = std::minmax_element(edges.arcs.begin(), edges.arcs.end(),
                                              [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });
    summary["min_timestamp"] = lo->timestamp;
    summary["max_timestamp"] = hi->timestamp;
    const auto g = build_directed_graph(edges);
    summary["distinct_arcs"] = g.arc_count();
    summary["undirected_edges"] = underlying_undirected(g).edge_count();
  }
  if (cfg.window_seconds > 0) {
    summary["windows"] = slice_windows(edges, cfg.window_seconds, cfg.window_origin).size();
  }
  if (cfg.format == "json") {
    json doc{{"config", config}, {"summary", summary}};
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : summary.items()) out << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return kOk;
}

// ----------------------------------------------------------------- communities

int cmd_communities(const RunConfig& cfg, const json& config, std::ostream& out) {
  if (!(cfg.resolution > 0.0)) throw ArgumentError("--resolution must be positive");
  if (cfg.exclude_from >= cfg.exclude_to) throw ArgumentError("--exclude-from must precede --exclude-to");
  const auto dir = prepare_out_dir(cfg);
  const auto edges = ingest_edge_list_file(cfg.input, ingest_options(cfg));
  const auto kept = cfg.has_exclusion ? without_range(edges, cfg.exclude_from, cfg.exclude_to) : edges;
  const auto view = underlying_undirected(build_directed_graph(kept));
  if (view.edge_count() == 0) {
    throw ArgumentError("graph is empty after exclusions (" + std::to_string(edges.arcs.size()) +
                        " arcs read, none kept); community detection needs at least one edge");
  }
  DetectionOptions options;
  options.resolution = cfg.resolution;
  options.seed = cfg.seed;
  options.min_improvement = cfg.min_improvement;
  auto detected = detect_communities_traced(view, options);
  auto& p = detected.partition;
  for (const auto& spec : cfg.group_labels) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || !all_digits(spec.substr(0, eq))) {
      throw ArgumentError("--group-label expects index=label, got '" + spec + "'");
    }
    p.set_group_label(static_cast<GroupId>(std::stoul(spec.substr(0, eq))), spec.substr(eq + 1));
  }
  const double q = modularity(view, p);
  {
    auto f = open_out(dir / "partition.csv");
    save_partition(p, edges.labels, f);
  }
  json summary{{"config", config},
               {"vertices", p.vertex_count()},
               {"edges", view.edge_count()},
               {"groups", p.group_count()},
               {"modularity", q},
               {"pass_modularity", detected.pass_modularity}};
  json top = json::array();
  out << "group,size,label\n";
  for (GroupId g = 0; g < p.group_count() && g < cfg.top; ++g) {
    out << g << ',' << p.group_sizes()[g] << ',' << p.group_label(g) << '\n';
    top.push_back({{"group", g}, {"size", p.group_sizes()[g]}, {"label", p.group_label(g)}});
  }
  out << "# groups=" << p.group_count() << " modularity=" << format_number(q) << '\n';
  summary["top_groups"] = std::move(top);
  auto f = open_out(dir / "communities.json");
  f << summary.dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- polarization

int cmd_polarization(const RunConfig& cfg, const json& config, std::ostream& out) {
  check_format(cfg);
  if (cfg.window_seconds < 0) throw ArgumentError("--window-seconds must be positive");
  if (cfg.partition.empty()) throw ArgumentError("--partition is required");
  const auto dir = prepare_out_dir(cfg);
  const auto edges = ingest_edge_list_file(cfg.input, ingest_options(cfg));
  const auto p = load_partition_file(cfg.partition, edges.labels);
  const auto tracked = select_groups(cfg.groups, p);

  std::vector<TimeWindow> windows;
  if (cfg.window_seconds > 0) {
    windows = slice_windows(edges, cfg.window_seconds, cfg.window_origin);
  } else if (!edges.arcs.empty()) {
    const auto [lo, hi] = std::minmax_element(edges.arcs.begin(), edges.arcs.end(),
                                              [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });
    windows.emplace_back(lo->timestamp, hi->timestamp + 1, "all");
  }
  const auto report = window_series(edges, p, windows, tracked);

  if (cfg.format == "json") {
    auto doc = polarization_json(report);
    doc["config"] = config;
    auto f = open_out(dir / "polarization.json");
    f << doc.dump(2) << '\n';
  } else {
    auto f = open_out(dir / "polarization.csv");
    write_polarization_csv(report, f);
    auto t = open_out(dir / "polarization_trends.csv");
    t << "series,slope,intercept,points\n";
    for (const auto& tr : report.trends) {
      t << tr.series << ',' << format_number(tr.fit.slope) << ',' << format_number(tr.fit.intercept) << ',' << tr.points
        << '\n';
    }
  }
  out << "windows," << report.windows.size() << '\n';
  for (const auto& tr : report.trends) {
    out << "trend," << tr.series << ",slope=" << format_number(tr.fit.slope)
        << ",intercept=" << format_number(tr.fit.intercept) << '\n';
  }
  return kOk;
}

// -------------------------------------------------------------------- dominate

std::string rho_tag(double rho) {
  auto s = format_number(rho);
  std::replace(s.begin(), s.end(), '.', '_');
  return s;
}

int cmd_dominate(const RunConfig& cfg, const json& config, std::ostream& out) {
  check_format(cfg);
  if (cfg.mode != "in-group" && cfg.mode != "network-by-group" && cfg.mode != "unrestricted") {
    throw ArgumentError("--mode must be in-group, network-by-group or unrestricted");
  }
  if (!cfg.curve && cfg.rho.empty()) throw ArgumentError("give at least one --rho or use --curve");
  for (double r : cfg.rho) {
    if (!(r > 0.0 && r <= 1.0)) throw ArgumentError("--rho values must lie in (0, 1]");
  }
  if (cfg.from >= cfg.to) throw ArgumentError("--from must precede --to");
  const bool grouped = cfg.mode != "unrestricted";
  if (grouped && cfg.partition.empty()) throw ArgumentError("--partition is required for mode " + cfg.mode);
  const auto dir = prepare_out_dir(cfg);

  const auto edges = within_range(ingest_edge_list_file(cfg.input, ingest_options(cfg)), cfg.from, cfg.to);
  const auto g = build_directed_graph(edges);
  std::optional<Partition> p;
  std::vector<GroupId> groups;
  if (grouped) {
    p = load_partition_file(cfg.partition, edges.labels);
    groups = select_groups(cfg.groups, *p);
    if (groups.empty()) {
      for (GroupId i = 0; i < p->group_count(); ++i) groups.push_back(i);
    }
  }

  struct Job {
    std::string name;
    GroupInstance instance;
  };
  std::vector<Job> jobs;
  if (!grouped) {
    GroupInstance all;
    all.candidates = spreaders(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) all.targets.push_back(v);
    jobs.push_back({"all", std::move(all)});
  } else {
    for (GroupId gid : groups) {
      jobs.push_back({"g" + std::to_string(gid), cfg.mode == "in-group" ? in_group_instance(g, *p, gid)
                                                                        : network_by_group_instance(g, *p, gid)});
    }
  }

  const std::string prefix = cfg.mode;
  bool any_infeasible = false;
  json summary = json::array();
  for (const auto& job : jobs) {
    const auto& graph = job.instance.graph(g);
    if (cfg.curve) {
      const std::size_t cap = cfg.max_spreaders > 0 ? cfg.max_spreaders : std::max<std::size_t>(1, job.instance.candidates.size());
      const auto curve = coverage_curve(graph, job.instance.candidates, job.instance.targets, cap);
      const auto base = "curve_" + prefix + "_" + job.name;
      if (cfg.format == "json") {
        auto f = open_out(dir / (base + ".json"));
        f << json{{"config", config}, {"group", job.name}, {"n_target", job.instance.targets.size()},
                  {"curve", curve_json(curve)}}.dump(2)
          << '\n';
      } else {
        auto f = open_out(dir / (base + ".csv"));
        write_curve_csv(curve, f);
      }
      const double final_fraction = curve.empty() ? 0.0 : curve.back().fraction;
      out << "curve," << job.name << ",points=" << curve.size() << ",final=" << format_number(final_fraction) << '\n';
      summary.push_back({{"group", job.name}, {"points", curve.size()}, {"final_fraction", final_fraction}});
      continue;
    }
    for (double rho : cfg.rho) {
      const auto base = "dominate_" + prefix + "_" + job.name + "_rho" + rho_tag(rho);
      json row{{"group", job.name}, {"rho", rho}};
      try {
        auto result = greedy_pdds(graph, rho, std::span<const VertexId>(job.instance.candidates),
                                  std::span<const VertexId>(job.instance.targets));
        for (auto& v : result.selected) v = job.instance.to_global(v);
        result.candidates = grouped ? "spreaders of group " + job.name.substr(1) +
                                          (cfg.mode == "in-group" ? " within the group" : " across the network")
                                    : "all spreaders";
        if (cfg.format == "json") {
          auto doc = domination_json(result, edges.labels);
          doc["config"] = config;
          doc["mode"] = cfg.mode;
          doc["group"] = job.name;
          auto f = open_out(dir / (base + ".json"));
          f << doc.dump(2) << '\n';
        } else {
          auto f = open_out(dir / (base + ".csv"));
          write_domination_csv(result, edges.labels, f);
        }
        row.update({{"feasible", true}, {"spreaders", result.selected.size()}, {"covered", result.covered()},
                    {"target", result.target}, {"n_target", result.n_target}});
        out << "result," << job.name << ",rho=" << format_number(rho) << ",spreaders=" << result.selected.size()
            << ",covered=" << result.covered() << '/' << result.n_target << '\n';
      } catch (const InfeasibleError& e) {
        any_infeasible = true;
        row.update({{"feasible", false}, {"max_achievable", e.max_achievable()}, {"target", e.target()},
                    {"n_target", e.n_target()}, {"max_achievable_fraction", e.max_achievable_fraction()}});
        if (cfg.format == "json") {
          auto f = open_out(dir / (base + ".json"));
          f << json{{"config", config}, {"mode", cfg.mode}, {"group", job.name}, {"feasible", false},
                    {"rho", rho}, {"target", e.target()}, {"n_target", e.n_target()},
                    {"max_achievable", e.max_achievable()}, {"max_achievable_fraction", e.max_achievable_fraction()}}
                   .dump(2)
            << '\n';
        }
        out << "infeasible," << job.name << ",rho=" << format_number(rho)
            << ",max_achievable=" << format_number(e.max_achievable_fraction()) << '\n';
      }
      summary.push_back(std::move(row));
    }
  }

  if (cfg.format == "json") {
    auto f = open_out(dir / "dominate_summary.json");
    f << json{{"config", config}, {"mode", cfg.mode}, {"runs", summary}}.dump(2) << '\n';
  } else {
    auto f = open_out(dir / "dominate_summary.csv");
    if (cfg.curve) {
      f << "group,points,final_fraction\n";
      for (const auto& r : summary) {
        f << r["group"].get<std::string>() << ',' << r["points"].get<std::size_t>() << ','
          << format_number(r["final_fraction"].get<double>()) << '\n';
      }
    } else {
      f << "group,rho,feasible,spreaders,covered,target,n_target,max_achievable_fraction\n";
      for (const auto& r : summary) {
        const bool ok = r["feasible"].get<bool>();
        f << r["group"].get<std::string>() << ',' << format_number(r["rho"].get<double>()) << ',' << (ok ? "true" : "false")
          << ',' << (ok ? std::to_string(r["spreaders"].get<std::size_t>()) : "") << ','
          << (ok ? std::to_string(r["covered"].get<std::size_t>()) : std::to_string(r["max_achievable"].get<std::size_t>()))
          << ',' << r["target"].get<std::size_t>() << ',' << r["n_target"].get<std::size_t>() << ','
          << (ok ? "" : format_number(r["max_achievable_fraction"].get<double>())) << '\n';
      }
    }
  }
  return any_infeasible ? kInfeasible : kOk;
}

// ----------------------------------------------------------------------- synth

int cmd_synth(const RunConfig& cfg, const json& config, std::ostream& out) {
  const auto family = synth::parse_family(cfg.family);
  if (!family) {
    throw ArgumentError("unknown family '" + cfg.family +
                        "'; expected figure2, planted-partition, configuration-model, star, directed-cycle or disjoint-cliques");
  }
  if (cfg.days <= 0) throw ArgumentError("--days must be positive");
  synth::GeneratorSpec spec;
  spec.family = *family;
  spec.sizes = cfg.sizes;
  spec.p_in = cfg.p_in;
  spec.p_out = cfg.p_out;
  spec.degrees = cfg.degrees;
  spec.n = cfg.n;
  spec.swaps = cfg.swaps;
  spec.seed = cfg.seed;
  synth::validate(spec);
  const auto dir = prepare_out_dir(cfg);
  const auto generated = synth::generate(spec);
  const auto stamped = synth::with_timestamps(generated.graph, generated.labels, cfg.origin, cfg.days * 86400, cfg.seed);
  {
    auto f = open_out(dir / "edges.csv");
    write_edge_list(stamped, f, delimiter_of(cfg));
  }
  std::size_t partition_lines = 0;
  if (generated.partition) {
    // Only vertices that occur in the edge list can be read back.
    const auto& full = *generated.partition;
    std::vector<char> active(generated.graph.vertex_count(), 0);
    for (const auto& arc : stamped.arcs) active[arc.source] = active[arc.target] = 1;
    LabelIndex labels;
    std::vector<GroupId> remap(full.group_count(), kInvalidVertex);
    std::vector<GroupId> assignment;
    std::vector<std::string> names;
    for (VertexId v = 0; v < active.size(); ++v) {
      if (!active[v]) continue;
      labels.intern(generated.labels.label(v));
      GroupId& r = remap[full.group_of(v)];
      if (r == kInvalidVertex) {
        r = static_cast<GroupId>(names.size());
        names.push_back(full.group_label(full.group_of(v)));
      }
      assignment.push_back(r);
    }
    if (!assignment.empty()) {
      Partition kept(std::move(assignment), std::move(names));
      auto f = open_out(dir / "partition.csv");
      save_partition(kept, labels, f);
      partition_lines = kept.vertex_count();
    }
  }
  {
    auto f = open_out(dir / "synth.json");
    f << json{{"config", config}, {"family", cfg.family}, {"vertices", generated.graph.vertex_count()},
              {"arcs", stamped.arcs.size()}, {"partition_vertices", partition_lines}}.dump(2)
      << '\n';
  }
  out << "family," << cfg.family << "\narcs," << stamped.arcs.size() << "\nvertices," << generated.graph.vertex_count()
      << "\npartition_vertices," << partition_lines << '\n';
  return kOk;
}

// -------------------------------------------------------------------- dispatch

void add_input(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input", cfg.input, "Edge-list file (source,target,timestamp)")->required()->check(CLI::ExistingFile);
  sub->add_option("--delimiter", cfg.delimiter, "Field delimiter (default ',')");
  sub->add_flag("--header", cfg.header, "First non-comment line is a header");
  sub->add_flag("--strict", cfg.strict, "Fail on the first malformed line");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"polarnet: polarization and domination analysis of interaction networks", "polarnet"};
  app.require_subcommand(1);

  auto* ingest = app.add_subcommand("ingest-check", "Validate an edge list and print its summary");
  add_input(ingest, cfg);
  ingest->add_option("--format", cfg.format, "csv or json");
  ingest->add_option("--window-seconds", cfg.window_seconds, "Also count windows of this length");
  ingest->add_option("--window-origin", cfg.window_origin, "Window alignment origin");

  auto* communities = app.add_subcommand("communities", "Detect communities and write a partition file");
  add_input(communities, cfg);
  communities->add_option("--out", cfg.out, "Output directory")->required();
  auto* exclude_from = communities->add_option("--exclude-from", cfg.exclude_from, "Drop arcs with timestamp >= this ...");
  auto* exclude_to = communities->add_option("--exclude-to", cfg.exclude_to, "... and < this");
  communities->add_option("--seed", cfg.seed, "Seed for the vertex visit order");
  communities->add_option("--resolution", cfg.resolution, "Modularity resolution (default 1)");
  communities->add_option("--min-improvement", cfg.min_improvement, "Local-moving stop threshold");
  communities->add_option("--top", cfg.top, "Groups listed in the summary");
  communities->add_option("--group-label", cfg.group_labels, "index=label metadata (repeatable)");

  auto* polarization = app.add_subcommand("polarization", "Per-window modularity and d-modularity series");
  add_input(polarization, cfg);
  polarization->add_option("--partition", cfg.partition, "Partition file")->required()->check(CLI::ExistingFile);
  polarization->add_option("--out", cfg.out, "Output directory")->required();
  polarization->add_option("--format", cfg.format, "csv or json");
  polarization->add_option("--window-seconds", cfg.window_seconds, "Window length; 0 = one window for the whole period");
  polarization->add_option("--window-origin", cfg.window_origin, "Timestamp of a window boundary");
  polarization->add_option("--groups", cfg.groups, "Tracked groups: indices or labels, comma separated");

  auto* dominate = app.add_subcommand("dominate", "Greedy partial directed domination");
  add_input(dominate, cfg);
  dominate->add_option("--partition", cfg.partition, "Partition file")->check(CLI::ExistingFile);
  dominate->add_option("--out", cfg.out, "Output directory")->required();
  dominate->add_option("--format", cfg.format, "csv or json");
  dominate->add_option("--mode", cfg.mode, "in-group, network-by-group or unrestricted");
  dominate->add_option("--rho", cfg.rho, "Coverage fraction in (0, 1] (repeatable)");
  dominate->add_flag("--curve", cfg.curve, "Emit coverage curves instead of per-rho results");
  dominate->add_option("--max-spreaders", cfg.max_spreaders, "Curve length cap (default: all candidates)");
  dominate->add_option("--groups", cfg.groups, "Groups to run: indices or labels, comma separated");
  dominate->add_option("--from", cfg.from, "Only arcs with timestamp >= this");
  dominate->add_option("--to", cfg.to, "Only arcs with timestamp < this");

  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic edge list and partition");
  synth_cmd->add_option("--family", cfg.family,
                        "figure2, planted-partition, configuration-model, star, directed-cycle, disjoint-cliques")
      ->required();
  synth_cmd->add_option("--out", cfg.out, "Output directory")->required();
  synth_cmd->add_option("--sizes", cfg.sizes, "Block or clique sizes")->delimiter(',');
  synth_cmd->add_option("--degrees", cfg.degrees, "Degree sequence")->delimiter(',');
  synth_cmd->add_option("--p-in", cfg.p_in, "In-block arc probability");
  synth_cmd->add_option("--p-out", cfg.p_out, "Cross-block arc probability");
  synth_cmd->add_option("--n", cfg.n, "Leaves (star) or length (directed-cycle)");
  synth_cmd->add_option("--swaps", cfg.swaps, "Accepted double-edge swaps (configuration-model)");
  synth_cmd->add_option("--seed", cfg.seed, "Generator seed");
  synth_cmd->add_option("--origin", cfg.origin, "First timestamp");
  synth_cmd->add_option("--days", cfg.days, "Timestamps spread over this many days");
  synth_cmd->add_option("--delimiter", cfg.delimiter, "Field delimiter (default ',')");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kArgumentError;
  }

  try {
    if (ingest->parsed()) {
      cfg.command = "ingest-check";
      return cmd_ingest_check(cfg, provenance(*ingest, cfg), out);
    }
    if (communities->parsed()) {
      cfg.command = "communities";
      cfg.has_exclusion = exclude_from->count() > 0 || exclude_to->count() > 0;
      return cmd_communities(cfg, provenance(*communities, cfg), out);
    }
    if (polarization->parsed()) {
      cfg.command = "polarization";
      return cmd_polarization(cfg, provenance(*polarization, cfg), out);
    }
    if (dominate->parsed()) {
      cfg.command = "dominate";
      return cmd_dominate(cfg, provenance(*dominate, cfg), out);
    }
    if (synth_cmd->parsed()) {
      cfg.command = "synth";
      return cmd_synth(cfg, provenance(*synth_cmd, cfg), out);
    }
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const ArgumentError& e) {
    err << "argument error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kFormatError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUndefinedResult;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kArgumentError;
}

}  // namespace polarnet::cli
