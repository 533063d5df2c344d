#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <system_error>

#include "hypertri/approx_count.hpp"
#include "hypertri/exact_count.hpp"
#include "hypertri/hypergraph.hpp"
#include "hypertri/metrics.hpp"
#include "hypertri/parallel.hpp"
#include "hypertri/pattern_table.hpp"
#include "hypertri/wedge_index.hpp"

namespace hypertri::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  explicit Stopwatch(Json& timings) : timings_(timings) {}
  template <typename Fn>
  auto operator()(const std::string& phase, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto finish = [&] {
      const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
      timings_[phase] = d.count();
    };
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      finish();
    } else {
      auto r = fn();
      finish();
      return r;
    }
  }

 private:
  Json& timings_;
};

struct Common {
  std::string input;
  std::string format = "edgelist";
  unsigned threads = 1;
  std::string output = "json";
  std::string emit;
};

void add_common(CLI::App& cmd, Common& c, bool emit) {
  cmd.add_option("--input", c.input, "Hypergraph file (simplex: path prefix)")->required();
  cmd.add_option("--format", c.format, "edgelist or simplex")
      ->check(CLI::IsMember({"edgelist", "simplex"}));
  cmd.add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  cmd.add_option("--output", c.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  if (emit) cmd.add_option("--emit", c.emit, "Write enumerated triangles to this file");
}

LoadResult load(const Common& c) {
  const auto fmt = c.format == "simplex" ? InputFormat::simplex_list : InputFormat::edge_list;
  try {
    return load_hypergraph(c.input, fmt);
  } catch (const ParseError& e) {
    throw IoError(c.input + ": " + e.what());
  } catch (const std::system_error& e) {
    throw IoError(c.input + ": " + e.what());
  }
}

Json input_digest(const Common& c, const LoadResult& in) {
  return Json{{"path", c.input},
              {"format", c.format},
              {"hyperedges", in.graph.edge_count()},
              {"vertices", in.graph.vertex_count()},
              {"duplicates_dropped", in.report.duplicates_dropped},
              {"duplicate_vertices_collapsed", in.report.duplicate_vertices_collapsed}};
}

Json wedge_digest(const WedgeIndex& index) {
  return Json{{"total", index.size()},
              {"intersection", index.intersection_count()},
              {"inclusion", index.inclusion_count()}};
}

std::optional<PatternClass> parse_class(const std::string& s) {
  for (auto c : {PatternClass::CCC, PatternClass::TCC, PatternClass::TTC, PatternClass::TTT})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

std::string class_label(PatternId p) {
  std::string s = to_string(pattern_class(p));
  if (ttt_subclass(p) != TttSubclass::none) s = std::string(to_string(ttt_subclass(p))) + s;
  return s;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void write_report(std::ostream& out, const Json& report) { out << report.dump(2) << '\n'; }

std::ofstream open_emit(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  return f;
}

// ---------------------------------------------------------------------------

struct CountArgs {
  Common common;
  int pattern = 0;
  std::string cls;
  bool all = false;
  std::string algo = "adv";
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  // Which patterns and which counters the selector needs.
  std::vector<int> selected;
  std::vector<std::pair<std::string, Algorithm>> phases;
  auto add_range = [&](int lo, int hi) {
    for (int p = lo; p <= hi; ++p) selected.push_back(p);
  };
  Json selector;
  if (a.pattern != 0) {
    if (a.pattern < 1 || a.pattern > kPatternCount) throw UsageError("--pattern must be 1..20");
    const PatternId p(a.pattern);
    selected.push_back(a.pattern);
    selector = {{"pattern", a.pattern}};
    switch (ttt_subclass(p)) {
      case TttSubclass::dense: phases.emplace_back("DenseTTT", Algorithm::dense_ttt); break;
      case TttSubclass::sparse: phases.emplace_back("SparseTTT", Algorithm::sparse_ttt); break;
      case TttSubclass::none: {
        const auto c = pattern_class(p);
        phases.emplace_back(to_string(c), c == PatternClass::CCC   ? Algorithm::ccc
                                          : c == PatternClass::TCC ? Algorithm::tcc
                                                                   : Algorithm::ttc);
      }
    }
  } else if (!a.cls.empty()) {
    selector = {{"class", a.cls}};
    if (a.cls == "CCC") {
      add_range(1, 1);
      phases.emplace_back("CCC", Algorithm::ccc);
    } else if (a.cls == "TCC") {
      add_range(2, 5);
      phases.emplace_back("TCC", Algorithm::tcc);
    } else if (a.cls == "TTC") {
      add_range(6, 8);
      phases.emplace_back("TTC", Algorithm::ttc);
    } else if (a.cls == "TTT") {
      add_range(9, 20);
      phases.emplace_back("TTT", Algorithm::ttt);
    } else if (a.cls == "DenseTTT") {
      add_range(9, 16);
      phases.emplace_back("DenseTTT", Algorithm::dense_ttt);
    } else if (a.cls == "SparseTTT") {
      add_range(17, 20);
      phases.emplace_back("SparseTTT", Algorithm::sparse_ttt);
    } else {
      throw UsageError("unknown class '" + a.cls + "'");
    }
  } else if (a.all) {
    selector = {{"all", true}};
    add_range(1, kPatternCount);
    phases.emplace_back("all", Algorithm::all_adv);
  } else {
    throw UsageError("one of --pattern, --class or --all is required");
  }
  if (a.algo == "baseline") {
    phases.assign(1, {"baseline", Algorithm::baseline});
  } else if (a.algo != "adv") {
    throw UsageError("--algo must be baseline or adv");
  }
  std::vector<bool> wanted(kPatternCount + 1, false);
  for (int p : selected) wanted[p] = true;

  Json timings = Json::object();
  Stopwatch time(timings);
  const auto in = time("load", [&] { return load(a.common); });
  const ParallelPlan plan(a.common.threads);
  const auto index = time("preprocess", [&] { return parallel_preprocess(in.graph, plan); });

  std::ofstream emit_file;
  TriangleSink sink;
  if (!a.common.emit.empty()) {
    emit_file = open_emit(a.common.emit);
    sink = [&](const Triangle& t) {
      if (!wanted[t.pattern.value()]) return;
      emit_file << t.edges[0] << ' ' << t.edges[1] << ' ' << t.edges[2] << ' '
                << t.pattern.value() << '\n';
    };
  }

  PatternCounts counts;
  for (const auto& [name, algo] : phases)
    counts += time(name, [&] { return parallel_count(index, algo, plan, sink, &in.graph); });

  std::optional<std::uint64_t> open;
  if (a.all) open = time("open", [&] { return count_open_triangles(index, counts); });
  if (emit_file.is_open() && !emit_file.flush()) throw IoError("write to " + a.common.emit + " failed");

  std::uint64_t total = 0;
  Json per_pattern = Json::object();
  for (int p : selected) {
    per_pattern[std::to_string(p)] = counts.at(p);
    total += counts.at(p);
  }

  if (a.common.output == "csv") {
    out << "pattern,class,count\n";
    for (int p : selected) out << p << ',' << class_label(PatternId(p)) << ',' << counts.at(p) << '\n';
    return kOk;
  }

  Json classes = Json::object();
  for (auto c : {PatternClass::CCC, PatternClass::TCC, PatternClass::TTC, PatternClass::TTT}) {
    const auto [lo, hi] = class_range(c);
    if (std::any_of(selected.begin(), selected.end(), [&](int p) { return p >= lo && p <= hi; }))
      classes[to_string(c)] = counts.total(c);
  }
  Json report;
  report["command"] = "count";
  report["input"] = input_digest(a.common, in);
  report["wedges"] = wedge_digest(index);
  report["selector"] = selector;
  report["algorithm"] = a.algo;
  report["counts"] = per_pattern;
  report["classes"] = classes;
  report["total"] = total;
  report["open_triangles"] = open ? Json(*open) : Json(nullptr);
  report["run"] = {{"threads", a.common.threads}, {"timings_ms", timings}};
  write_report(out, report);
  return kOk;
}

// ---------------------------------------------------------------------------

struct EstimateArgs {
  Common common;
  double sigma = 1.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string mode = "adv";
  std::string cls;
  bool full_pass = false;
};

int cmd_estimate(const EstimateArgs& a, std::ostream& out) {
  EstimateConfig cfg;
  cfg.sigma = a.sigma;
  cfg.alpha = a.samples;
  cfg.seed = a.seed;
  cfg.mode = a.mode == "basic" ? EstimatorMode::basic : EstimatorMode::advanced;
  if (!a.cls.empty()) {
    cfg.class_filter = parse_class(a.cls);
    if (!cfg.class_filter) throw UsageError("unknown class '" + a.cls + "'");
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  Json timings = Json::object();
  Stopwatch time(timings);
  const auto in = time("load", [&] { return load(a.common); });
  const ParallelPlan plan(a.common.threads);
  const ExhaustiveWedgeSampler exhaustive;
  const auto est = time("estimate", [&] {
    return estimate(in.graph, cfg, plan, a.full_pass ? &exhaustive : nullptr);
  });

  if (a.common.output == "csv") {
    out << "pattern,class,estimate\n";
    for (int p = 1; p <= kPatternCount; ++p)
      out << p << ',' << class_label(PatternId(p)) << ',' << fmt_double(est.estimates(p - 1)) << '\n';
    return kOk;
  }

  Json estimates = Json::object();
  for (int p = 1; p <= kPatternCount; ++p) estimates[std::to_string(p)] = est.estimates(p - 1);
  Json classes = Json::object();
  for (auto c : {PatternClass::CCC, PatternClass::TCC, PatternClass::TTC, PatternClass::TTT})
    classes[to_string(c)] = est.total(c);
  Json pools = Json::array();
  for (const auto& p : est.pools)
    pools.push_back({{"name", p.name}, {"pool_size", p.pool_size}, {"budget", p.budget},
                     {"draws", p.draws}});

  Json report;
  report["command"] = "estimate";
  report["input"] = input_digest(a.common, in);
  report["config"] = {{"mode", to_string(est.mode)},
                      {"sigma", est.sigma},
                      {"samples", est.alpha},
                      {"seed", est.seed},
                      {"class", a.cls.empty() ? Json(nullptr) : Json(a.cls)},
                      {"sampler", a.full_pass ? "full-pass" : "uniform"}};
  report["sampled_hyperedges"] = est.sampled_edges;
  report["wedges"] = {{"total", est.wedges},
                      {"intersection", est.intersection_wedges},
                      {"inclusion", est.inclusion_wedges}};
  report["pools"] = pools;
  report["estimates"] = estimates;
  report["classes"] = classes;
  report["total"] = est.total();
  report["warning"] = est.no_wedges ? Json("sampled hypergraph has no wedges") : Json(nullptr);
  report["run"] = {{"threads", a.common.threads}, {"timings_ms", timings}};
  write_report(out, report);
  return kOk;
}

// ---------------------------------------------------------------------------

struct CcArgs {
  Common common;
  bool uniform = false;
  std::string epsilons;
  std::string denominator = "open";
};

EpsilonWeights parse_epsilons(const std::string& arg) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
    std::ifstream f(arg);
    if (!f) throw IoError("cannot open epsilon file " + arg);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed epsilon weights: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("epsilon weights must be a JSON object");
  EpsilonWeights eps;
  for (const auto& [key, value] : j.items()) {
    int p = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), p);
    if (ec != std::errc() || ptr != key.data() + key.size() || p < 1 || p > kPatternCount)
      throw UsageError("epsilon key '" + key + "' is not a pattern id 1..20");
    if (!value.is_number()) throw UsageError("epsilon for pattern " + key + " is not a number");
    try {
      eps.set(PatternId(p), value.get<double>());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return eps;
}

int cmd_cc(const CcArgs& a, std::ostream& out) {
  if (a.uniform == !a.epsilons.empty())
    throw UsageError("exactly one of --uniform or --epsilons is required");
  const auto eps = a.uniform ? EpsilonWeights::uniform() : parse_epsilons(a.epsilons);
  const auto denom = a.denominator == "centered" ? Denominator::all_centered : Denominator::open_only;

  Json timings = Json::object();
  Stopwatch time(timings);
  const auto in = time("load", [&] { return load(a.common); });
  const ParallelPlan plan(a.common.threads);
  const auto index = time("preprocess", [&] { return parallel_preprocess(in.graph, plan); });
  const auto counts = time("all", [&] { return parallel_count(index, Algorithm::all_adv, plan); });
  const auto open = time("open", [&] { return count_open_triangles(index, counts); });
  const auto cc = clustering_coefficient(counts, open, eps, denom);
  const auto profile = per_pattern_profile(counts, open);

  if (a.common.output == "csv") {
    out << "pattern,count,epsilon,profile\n";
    for (int p = 1; p <= kPatternCount; ++p)
      out << p << ',' << counts.at(p) << ',' << fmt_double(eps[PatternId(p)]) << ','
          << fmt_double(profile(p - 1)) << '\n';
    return kOk;
  }

  Json jcounts = Json::object(), jprofile = Json::object(), jeps = Json::object();
  for (int p = 1; p <= kPatternCount; ++p) {
    const auto key = std::to_string(p);
    jcounts[key] = counts.at(p);
    jprofile[key] = profile(p - 1);
    jeps[key] = eps[PatternId(p)];
  }
  Json report;
  report["command"] = "cc";
  report["input"] = input_digest(a.common, in);
  report["wedges"] = wedge_digest(index);
  report["denominator"] = to_string(denom);
  report["epsilons"] = jeps;
  report["coefficient"] = cc.value;
  report["zero_denominator"] = cc.zero_denominator;
  report["profile"] = jprofile;
  report["counts"] = jcounts;
  report["total"] = counts.total();
  report["open_triangles"] = open;
  report["run"] = {{"threads", a.common.threads}, {"timings_ms", timings}};
  write_report(out, report);
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_patterns(const std::string& output, std::ostream& out) {
  const auto& table = pattern_table();
  if (output == "json") {
    Json rows = Json::array();
    for (const auto& info : table.patterns())
      rows.push_back({{"id", info.id.value()},
                      {"class", to_string(info.cls)},
                      {"subclass", info.subclass == TttSubclass::none ? Json(nullptr)
                                                                      : Json(to_string(info.subclass))},
                      {"representative", info.representative.to_string()},
                      {"canonical", info.canonical.to_string()},
                      {"orbit_size", info.orbit_size}});
    write_report(out, Json{{"command", "patterns"}, {"patterns", rows}});
  } else if (output == "csv") {
    out << "id,class,subclass,representative\n";
    for (const auto& info : table.patterns())
      out << info.id.value() << ',' << to_string(info.cls) << ',' << to_string(info.subclass)
          << ",\"" << info.representative.to_string() << "\"\n";
  } else {
    out << std::left << std::setw(4) << "id" << std::setw(7) << "class" << std::setw(10)
        << "subclass" << "a b c d e f g\n";
    for (const auto& info : table.patterns()) {
      out << std::setw(4) << info.id.value() << std::setw(7) << to_string(info.cls)
          << std::setw(10) << to_string(info.subclass);
      for (int r = 0; r < 7; ++r)
        out << (r ? " " : "") << info.representative[static_cast<RegionSignature::Region>(r)];
      out << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct StatsArgs {
  Common common;
  std::string dump;
};

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  Json timings = Json::object();
  Stopwatch time(timings);
  const auto in = time("load", [&] { return load(a.common); });
  const ParallelPlan plan(a.common.threads);
  const auto index = time("preprocess", [&] { return parallel_preprocess(in.graph, plan); });
  if (!a.dump.empty()) {
    auto f = open_emit(a.dump);
    dump_wedges(f, index);
    if (!f.flush()) throw IoError("write to " + a.dump + " failed");
  }
  const auto& g = in.graph;
  Json fields = {{"hyperedges", g.edge_count()},
                 {"vertices", g.vertex_count()},
                 {"total_edge_size", g.total_edge_size()},
                 {"max_edge_size", g.max_edge_size()},
                 {"wedges", index.size()},
                 {"intersection_wedges", index.intersection_count()},
                 {"inclusion_wedges", index.inclusion_count()},
                 {"common_vertex_entries", index.common_entries()},
                 {"neighbor_pairs", neighbor_pair_sum(index)}};
  if (a.common.output == "csv") {
    out << "field,value\n";
    for (const auto& [k, v] : fields.items()) out << k << ',' << v.dump() << '\n';
    return kOk;
  }
  Json report;
  report["command"] = "stats";
  report["input"] = input_digest(a.common, in);
  report["stats"] = fields;
  report["run"] = {{"threads", a.common.threads}, {"timings_ms", timings}};
  write_report(out, report);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyper-triangle counting, estimation and clustering coefficients", "hypertri"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Exact per-pattern hyper-triangle counts");
  add_common(*c, count.common, true);
  auto* sel_pattern = c->add_option("--pattern", count.pattern, "Single pattern 1..20");
  auto* sel_class = c->add_option("--class", count.cls, "CCC, TCC, TTC, TTT, DenseTTT or SparseTTT");
  auto* sel_all = c->add_flag("--all", count.all, "Every pattern, plus open triangles");
  sel_pattern->excludes(sel_class)->excludes(sel_all);
  sel_class->excludes(sel_all);
  c->add_option("--algo", count.algo, "baseline or adv");

  EstimateArgs est;
  auto* e = app.add_subcommand("estimate", "Sampling estimates of per-pattern counts");
  add_common(*e, est.common, false);
  e->add_option("--sigma", est.sigma, "Fraction of hyperedges sampled, in (0, 1]");
  e->add_option("--samples", est.samples, "Number of wedge draws")->required();
  e->add_option("--seed", est.seed, "Random seed");
  e->add_option("--mode", est.mode, "basic or adv")->check(CLI::IsMember({"basic", "adv"}));
  e->add_option("--class", est.cls, "Restrict the advanced estimator to one class");
  e->add_flag("--full-pass", est.full_pass, "Visit every wedge once instead of sampling");

  CcArgs cc;
  auto* k = app.add_subcommand("cc", "Fine-grained clustering coefficient");
  add_common(*k, cc.common, false);
  k->add_flag("--uniform", cc.uniform, "All weights 1");
  k->add_option("--epsilons", cc.epsilons, "JSON object {\"1\":w,...} or a file holding one");
  k->add_option("--denominator", cc.denominator, "open or centered")
      ->check(CLI::IsMember({"open", "centered"}));

  std::string patterns_output = "text";
  auto* p = app.add_subcommand("patterns", "Print the 20-pattern table");
  p->add_option("--output", patterns_output, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  StatsArgs stats;
  auto* s = app.add_subcommand("stats", "Hypergraph and wedge statistics");
  add_common(*s, stats.common, false);
  s->add_option("--dump-wedges", stats.dump, "Write `first second kind size` lines to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  }

  try {
    if (c->parsed()) return cmd_count(count, out);
    if (e->parsed()) return cmd_estimate(est, out);
    if (k->parsed()) return cmd_cc(cc, out);
    if (p->parsed()) return cmd_patterns(patterns_output, out);
    if (s->parsed()) return cmd_stats(stats, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  } catch (const IoError& ex) {
    err << "error: " << ex.what() << '\n';
    return kIoError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kIoError;
  }
  return kUsageError;
}

}  // namespace hypertri::cli
