// Command-line front end. Talks to the library exclusively through the C API.
//
// Data goes to stdout (or --output), logs and errors to stderr. Exit status:
// 0 success or theorem confirmed, 2 counterexample found, 1 operational error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fanq/fanq.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitError = 1;

struct Failure {
  std::string message;
};

struct GraphDeleter {
  void operator()(fanq_graph* g) const { fanq_graph_free(g); }
};
using GraphHandle = std::unique_ptr<fanq_graph, GraphDeleter>;

struct CertificateDeleter {
  void operator()(fanq_certificate* c) const { fanq_certificate_free(c); }
};
using CertificateHandle = std::unique_ptr<fanq_certificate, CertificateDeleter>;

struct StringDeleter {
  void operator()(char* s) const { fanq_string_free(s); }
};

void check(fanq_status status, const std::string& context) {
  if (status != FANQ_OK) throw Failure{context + ": " + fanq_last_error()};
}

std::string take(char* s) {
  std::unique_ptr<char, StringDeleter> owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round15(double x) { return std::strtod(real(x).c_str(), nullptr); }

struct RunConfig {
  std::string input = "-";
  std::string output = "-";
  std::string format = "json";
  bool fail_fast = false;
  bool connected_only = false;
  int n = 0;
  int k = 0;
  int shards = 0;
  int shard_index = 0;
  int jobs = 0;
  double tol_eigen = 1e-9;
  double tol_margin = 1e-6;
  std::string pattern = "fan";
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw Failure{"cannot open output file '" + path + "'"};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct InputGraph {
  std::size_t line = 0;
  std::string text;
  GraphHandle graph;
};

// Reads graph6 lines, decoding each through the C API. Malformed lines stop
// the run with --fail-fast, otherwise they are logged and skipped.
std::vector<InputGraph> read_graphs(const RunConfig& cfg) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (cfg.input != "-") {
    file.open(cfg.input);
    if (!file) throw Failure{"cannot open input file '" + cfg.input + "'"};
    in = &file;
  }
  std::vector<InputGraph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(*in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    fanq_graph* raw = nullptr;
    if (fanq_graph_from_graph6(line.c_str(), &raw) != FANQ_OK) {
      const std::string why = "line " + std::to_string(number) + ": " + fanq_last_error();
      if (cfg.fail_fast) throw Failure{why};
      std::cerr << "fanq: skipping " << why << '\n';
      continue;
    }
    out.push_back({number, line, GraphHandle(raw)});
  }
  return out;
}

// Input lines re-joined for the library's graph6 sources.
std::string joined(const std::vector<InputGraph>& graphs) {
  std::string text;
  for (const auto& g : graphs) text += g.text + '\n';
  return text;
}

// Writes a list of rows either as a JSON array or as TSV with a header.
void write_rows(std::ostream& out, const std::string& format, const std::vector<std::string>& columns,
                const std::vector<std::vector<Json>>& rows) {
  if (format == "tsv") {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "\t" : "") << columns[c];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "\t" : "");
        const Json& v = row[c];
        if (v.is_null()) out << "NA";
        else if (v.is_string()) out << v.get<std::string>();
        else if (v.is_number_float()) out << real(v.get<double>());
        else out << v.dump();
      }
      out << '\n';
    }
    return;
  }
  Json doc = Json::array();
  for (const auto& row : rows) {
    Json obj;
    for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = row[c];
    doc.push_back(obj);
  }
  out << doc.dump(2) << '\n';
}

// Flattens a JSON object into key<TAB>value lines.
void write_flat(std::ostream& out, const Json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_object()) {
      write_flat(out, v, key);
    } else if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_object()) write_flat(out, v[i], key + "." + std::to_string(i));
        else out << key << '.' << i << '\t' << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump()) << '\n';
      }
    } else if (v.is_string()) {
      out << key << '\t' << v.get<std::string>() << '\n';
    } else if (v.is_number_float()) {
      out << key << '\t' << real(v.get<double>()) << '\n';
    } else {
      out << key << '\t' << (v.is_null() ? "NA" : v.dump()) << '\n';
    }
  }
}

void write_document(std::ostream& out, const std::string& format, const Json& j) {
  if (format == "tsv") write_flat(out, j);
  else out << j.dump(2) << '\n';
}

fanq_tolerances tolerances(const RunConfig& cfg) {
  if (!(cfg.tol_eigen > 0) || !(cfg.tol_margin > 0)) throw Failure{"tolerances must be positive"};
  fanq_tolerances t = fanq_default_tolerances();
  t.eigen = cfg.tol_eigen;
  t.margin = cfg.tol_margin;
  return t;
}

int run_q1(const RunConfig& cfg) {
  auto graphs = read_graphs(cfg);
  std::vector<std::vector<Json>> rows;
  for (const auto& g : graphs) {
    double q = 0.0;
    check(fanq_q1(g.graph.get(), &q), "line " + std::to_string(g.line));
    rows.push_back({g.text, fanq_graph_order(g.graph.get()), fanq_graph_size(g.graph.get()), round15(q)});
  }
  Output out(cfg.output);
  write_rows(out.stream(), cfg.format, {"graph6", "n", "e", "q1"}, rows);
  return 0;
}

int run_fan_free(const RunConfig& cfg) {
  if (cfg.k < 1) throw Failure{"--k must be at least 1"};
  auto graphs = read_graphs(cfg);
  std::vector<std::vector<Json>> rows;
  for (const auto& g : graphs) {
    int contains = 0;
    int center = -1;
    std::vector<int> pairs(static_cast<std::size_t>(2 * cfg.k));
    check(fanq_contains_fan(g.graph.get(), cfg.k, &contains, &center, pairs.data()), "line " + std::to_string(g.line));
    Json witness = nullptr;
    if (contains) {
      std::string text;
      for (int i = 0; i < cfg.k; ++i)
        text += (i ? " " : "") + std::to_string(pairs[2 * i]) + "-" + std::to_string(pairs[2 * i + 1]);
      witness = text;
    }
    rows.push_back({g.text, contains == 0, contains ? Json(center) : Json(nullptr), witness});
  }
  Output out(cfg.output);
  write_rows(out.stream(), cfg.format, {"graph6", "fan_free", "center", "pairs"}, rows);
  return 0;
}

int run_certify(const RunConfig& cfg, bool from_input) {
  fanq_search_options options = fanq_default_search_options();
  options.tolerances = tolerances(cfg);
  options.jobs = cfg.jobs;
  options.shards = cfg.shards > 0 ? cfg.shards : std::max(1, cfg.jobs);
  std::string text;
  if (from_input) text = joined(read_graphs(cfg));

  fanq_certificate* raw = nullptr;
  check(fanq_certify(cfg.n, cfg.k, &options, from_input ? text.c_str() : nullptr, 1, &raw), "certify");
  CertificateHandle cert(raw);
  char* json = nullptr;
  check(fanq_certificate_json(cert.get(), &json), "certificate");
  Output out(cfg.output);
  write_document(out.stream(), cfg.format, Json::parse(take(json)));

  const int code = fanq_certificate_exit_code(cert.get());
  switch (fanq_certificate_verdict(cert.get())) {
    case FANQ_VERDICT_CONFIRMED: std::cerr << "fanq: S_{n,k} is the unique maximiser (confirmed)\n"; break;
    case FANQ_VERDICT_COUNTEREXAMPLE: std::cerr << "fanq: counterexample found inside the theorem regime\n"; break;
    case FANQ_VERDICT_OUTSIDE_REGIME: std::cerr << "fanq: outside theorem regime; no uniqueness claim\n"; break;
  }
  return code;
}

int on_graph(const fanq_graph* g, void* user) {
  auto* out = static_cast<std::ostream*>(user);
  char* text = nullptr;
  if (fanq_graph_to_graph6(g, &text) != FANQ_OK) return 1;
  *out << take(text) << '\n';
  return 0;
}

int run_enumerate(const RunConfig& cfg) {
  if (cfg.shards > 0 && (cfg.shard_index < 0 || cfg.shard_index >= cfg.shards))
    throw Failure{"--shard-index must lie in [0, --shards)"};
  Output out(cfg.output);
  std::uint64_t count = 0;
  check(fanq_enumerate(cfg.n, cfg.connected_only ? 1 : 0, cfg.shard_index, cfg.shards, on_graph, &out.stream(), &count),
        "enumerate");
  std::cerr << "fanq: " << count << " graphs\n";
  return 0;
}

int run_turan(const RunConfig& cfg, bool from_input) {
  fanq_pattern pattern;
  if (cfg.pattern == "kk2") pattern = FANQ_PATTERN_KK2;
  else if (cfg.pattern == "fan") pattern = FANQ_PATTERN_FAN;
  else throw Failure{"--pattern must be kk2 or fan"};
  std::string text;
  if (from_input) text = joined(read_graphs(cfg));
  char* raw = nullptr;
  check(fanq_turan(cfg.n, pattern, cfg.k, from_input ? text.c_str() : nullptr, 1, &raw), "turan");
  Json record = Json::parse(take(raw));

  Json formula = nullptr;
  if (pattern == FANQ_PATTERN_KK2 && cfg.k >= 2 && cfg.n >= 2 * cfg.k - 1) {
    int64_t value = 0;
    fanq_regime regime = FANQ_REGIME_CLIQUE;
    check(fanq_turan_kk2(cfg.n, cfg.k, &value, &regime), "turan_kk2");
    formula = value;
  } else if (pattern == FANQ_PATTERN_FAN) {
    int64_t value = 0;
    int guaranteed = 0;
    check(fanq_efgg_value(cfg.n, cfg.k, &value, &guaranteed), "efgg_value");
    formula = {{"value", value}, {"guaranteed_regime", guaranteed != 0}};
  }
  record["formula"] = formula;
  Output out(cfg.output);
  write_document(out.stream(), cfg.format, record);
  return 0;
}

int run_bounds(const RunConfig& cfg) {
  auto graphs = read_graphs(cfg);
  std::vector<std::vector<Json>> rows;
  for (const auto& g : graphs) {
    const std::string where = "line " + std::to_string(g.line);
    const int n = fanq_graph_order(g.graph.get());
    double q = 0.0;
    check(fanq_q1(g.graph.get(), &q), where);
    Json merris = nullptr;
    double bound = 0.0;
    if (fanq_merris_bound(g.graph.get(), &bound, nullptr) == FANQ_OK) merris = round15(bound);
    int split_k = 0;
    check(fanq_graph_split_parameter(g.graph.get(), &split_k), where);
    Json closed = nullptr;
    Json lower = nullptr;
    if (split_k > 0) {
      double value = 0.0;
      check(fanq_q1_split_closed_form(n, split_k, &value), where);
      closed = round15(value);
      if (fanq_q1_split_lower_bound(n, split_k, &value) == FANQ_OK) lower = round15(value);
    }
    rows.push_back({g.text, n, fanq_graph_size(g.graph.get()), round15(q), merris,
                    split_k > 0 ? Json(split_k) : Json(nullptr), closed, lower});
  }
  Output out(cfg.output);
  write_rows(out.stream(), cfg.format, {"graph6", "n", "e", "q1", "merris", "split_k", "split_closed_form", "split_lower_bound"},
             rows);
  return 0;
}

int run_construct(const RunConfig& cfg) {
  fanq_graph* raw = nullptr;
  char* spec = nullptr;
  check(fanq_efgg_construction(cfg.n, cfg.k, &raw, &spec), "construct");
  GraphHandle graph(raw);
  Json j = Json::parse(take(spec));
  int64_t value = 0;
  int guaranteed = 0;
  check(fanq_efgg_value(cfg.n, cfg.k, &value, &guaranteed), "efgg_value");
  j["formula_value"] = value;
  j["guaranteed_regime"] = guaranteed != 0;
  int contains = 0;
  check(fanq_contains_fan(graph.get(), cfg.k, &contains, nullptr, nullptr), "contains_fan");
  j["fan_free"] = contains == 0;
  Output out(cfg.output);
  write_document(out.stream(), cfg.format, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signless Laplacian spectral radius and k-fan extremal toolkit"};
  app.set_config("--config", "", "Optional TOML/INI config file; command-line flags take precedence");
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "graph6 input file ('-' for stdin)");
    sub->add_option("--output", cfg.output, "Output file ('-' for stdout)");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_flag("--fail-fast", cfg.fail_fast, "Stop at the first malformed input line");
  };

  auto* q1 = app.add_subcommand("q1", "q1 of every input graph");
  add_io(q1);

  auto* fan = app.add_subcommand("fan-free", "F_k-freeness of every input graph, with witness centre");
  add_io(fan);
  fan->add_option("--k", cfg.k, "Fan size")->required();

  auto* certify = app.add_subcommand("certify", "Exhaustive search for the F_k-free graph maximising q1");
  certify->add_option("--n", cfg.n, "Order")->required();
  certify->add_option("--k", cfg.k, "Fan size")->required();
  certify->add_option("--input", cfg.input, "graph6 source instead of internal enumeration");
  certify->add_option("--output", cfg.output, "Output file ('-' for stdout)");
  certify->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  certify->add_flag("--fail-fast", cfg.fail_fast, "Stop at the first malformed input line");
  certify->add_option("--shards", cfg.shards, "Number of enumeration shards")->check(CLI::PositiveNumber);
  certify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::NonNegativeNumber);
  certify->add_option("--tol-eigen", cfg.tol_eigen, "Eigenvalue accuracy");
  certify->add_option("--tol-margin", cfg.tol_margin, "Equality margin for ties");

  auto* enumerate = app.add_subcommand("enumerate", "All graphs of order n up to isomorphism, as graph6");
  enumerate->add_option("--n", cfg.n, "Order")->required();
  enumerate->add_flag("--connected-only", cfg.connected_only, "Only connected graphs");
  enumerate->add_option("--shards", cfg.shards, "Number of shards")->check(CLI::PositiveNumber);
  enumerate->add_option("--shard-index", cfg.shard_index, "Shard to emit")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--output", cfg.output, "Output file ('-' for stdout)");

  auto* turan = app.add_subcommand("turan", "Brute-force Turan number with the matching formula value");
  turan->add_option("--n", cfg.n, "Order")->required();
  turan->add_option("--k", cfg.k, "Pattern parameter")->required();
  turan->add_option("--pattern", cfg.pattern, "kk2 or fan")->check(CLI::IsMember({"kk2", "fan"}));
  turan->add_option("--input", cfg.input, "graph6 source instead of internal enumeration");
  turan->add_option("--output", cfg.output, "Output file ('-' for stdout)");
  turan->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  turan->add_flag("--fail-fast", cfg.fail_fast, "Stop at the first malformed input line");

  auto* bounds = app.add_subcommand("bounds", "q1 next to the Merris bound and split-graph closed forms");
  add_io(bounds);

  auto* construct = app.add_subcommand("construct", "Extremal F_k-free construction of order n");
  construct->add_option("--n", cfg.n, "Order")->required();
  construct->add_option("--k", cfg.k, "Fan size")->required();
  construct->add_option("--output", cfg.output, "Output file ('-' for stdout)");
  construct->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (*q1) return run_q1(cfg);
    if (*fan) return run_fan_free(cfg);
    if (*certify) return run_certify(cfg, certify->count("--input") > 0);
    if (*enumerate) return run_enumerate(cfg);
    if (*turan) return run_turan(cfg, turan->count("--input") > 0);
    if (*bounds) return run_bounds(cfg);
    if (*construct) return run_construct(cfg);
  } catch (const Failure& f) {
    std::cerr << "fanq: error: " << f.message << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "fanq: error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
