// Command-line front end: generate and execute benchmark suites on the
// built-in simulator, ingest counts from external backends, map circuits
// onto device couplings, and report run history.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbench/analysis.hpp"
#include "qbench/benchmarks.hpp"
#include "qbench/counts.hpp"
#include "qbench/device.hpp"
#include "qbench/qasm.hpp"
#include "qbench/simulate.hpp"
#include "qbench/transpile.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qbench;

namespace {

constexpr const char* kToolVersion = "qbench 1.0.0";

// Exit code contract: 0 all verdicts correct, 1 verdict failures,
// 2 input or schema errors.
constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

fs::path resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("QBENCH_OUT"); env && *env) return env;
  return "out";
}

// Reorder a register-convention key (clbit 0 rightmost) into the case's
// presentation order (qubit indices listed leftmost first).
std::string display_key(const std::string& reg_key, const std::vector<int>& order) {
  std::string out;
  out.reserve(order.size());
  for (int q : order) out.push_back(reg_key[reg_key.size() - 1 - static_cast<std::size_t>(q)]);
  return out;
}

json verdict_to_json(const BenchmarkCase& bc, const Verdict& v) {
  json j;
  j["case"] = bc.name;
  j["suite"] = bc.suite;
  j["class"] = verdict_class_name(v.cls);
  j["color"] = verdict_color(v.cls);
  j["expected"] = v.expected;
  json tops = json::array();
  const std::size_t shown = std::min<std::size_t>(v.top_states.size(), 16);
  for (std::size_t i = 0; i < shown; ++i) {
    tops.push_back({{"state", v.top_states[i].first}, {"frequency", v.top_states[i].second}});
  }
  j["top_states"] = tops;
  j["distinct_states"] = v.top_states.size();
  j["margin"] = v.margin;
  j["se"] = v.se;
  j["k_tie"] = v.k_tie;
  if (!bc.display_order.empty()) {
    j["display_order"] = bc.display_order;
    json disp = json::array();
    for (std::size_t i = 0; i < shown; ++i) {
      disp.push_back(display_key(v.top_states[i].first, bc.display_order));
    }
    j["display_top_states"] = disp;
  }
  return j;
}

json oracle_to_json(const BenchmarkCase& bc) {
  json j;
  j["case"] = bc.name;
  j["suite"] = bc.suite;
  j["oracle"] = json::object();
  for (const auto& [key, p] : bc.oracle) j["oracle"][key] = p;
  if (!bc.display_order.empty()) j["display_order"] = bc.display_order;
  if (!bc.amplitude_signs.empty()) {
    j["amplitude_signs"] = json::object();
    for (const auto& [key, s] : bc.amplitude_signs) j["amplitude_signs"][key] = s;
  }
  return j;
}

std::vector<BenchmarkCase> whole_catalog() { return suite_by_name("all"); }

const BenchmarkCase* find_case(const std::vector<BenchmarkCase>& catalog,
                               const std::string& name) {
  for (const BenchmarkCase& bc : catalog) {
    if (bc.name == name) return &bc;
  }
  return nullptr;
}

// Timestamps live only in meta.json and in directory names, so repeated
// runs with one seed produce byte-identical data files.
json meta_json(const std::string& backend, std::uint64_t shots, std::uint64_t seed,
               const BenchmarkCase& bc) {
  json m;
  m["created_at"] = utc_timestamp_now();
  m["tool_version"] = kToolVersion;
  m["backend"] = backend;
  m["shots"] = shots;
  m["seed"] = seed;
  m["params"] = json::object();
  for (const auto& [key, value] : bc.params) m["params"][key] = value;
  if (!bc.note.empty()) m["note"] = bc.note;
  return m;
}

std::string pick_run_id(const fs::path& out_dir,
                        const std::vector<std::pair<std::string, std::string>>& probe_dirs) {
  std::string base = utc_timestamp_now();
  for (int n = 1; n < 10000; ++n) {
    std::string id = (n == 1) ? base : base + "-" + std::to_string(n);
    bool taken = false;
    for (const auto& [suite, name] : probe_dirs) {
      if (name.empty() ? fs::exists(out_dir / suite / ("summary-" + id + ".json"))
                       : fs::exists(out_dir / suite / name / id)) {
        taken = true;
        break;
      }
    }
    if (!taken) return id;
  }
  throw std::runtime_error("cannot allocate a run directory");
}

struct RunOptions {
  std::string suite = "all";
  std::string backend = "ideal";
  std::uint64_t shots = 8192;
  std::uint64_t seed = 1;
  double p_correct = 0.99;
  std::string channel = "depolarizing";
  std::string out;
};

struct CaseOutcome {
  std::string name;
  VerdictClass cls = VerdictClass::Inconclusive;
  std::string top_state;
  double top_freq = 0.0;
  CorrelatorSet correlators;
  std::map<std::string, double> params;
  std::string counts_path;
};

CaseOutcome execute_case(const BenchmarkCase& bc, const RunOptions& opt,
                         const fs::path& out_dir, const std::string& run_id) {
  CountsTable counts;
  if (opt.backend == "noisy") {
    NoiseModel noise;
    noise.p_correct = opt.p_correct;
    noise.channel =
        opt.channel == "bitflip" ? NoiseChannel::BitFlip : NoiseChannel::Depolarizing;
    counts = run_noisy(bc.circuit, opt.shots, opt.seed, noise);
  } else {
    counts = sample(bc.circuit, opt.shots, opt.seed);
  }
  counts.circuit_name = bc.name;
  Verdict v = classify(counts, bc.oracle);

  fs::path dir = out_dir / bc.suite / bc.name / run_id;
  fs::create_directories(dir);
  write_file(dir / "circuit.qasm", qasm::serialize(bc.circuit));
  CountsTable persisted = counts;
  persisted.date.clear();
  write_file(dir / "counts.json", counts_to_json(persisted));
  write_file(dir / "verdict.json", verdict_to_json(bc, v).dump(2) + "\n");
  write_file(dir / "oracle.json", oracle_to_json(bc).dump(2) + "\n");
  write_file(dir / "meta.json", meta_json(opt.backend, opt.shots, opt.seed, bc).dump(2) + "\n");

  CaseOutcome outcome;
  outcome.name = bc.name;
  outcome.cls = v.cls;
  if (!v.top_states.empty()) {
    outcome.top_state = v.top_states[0].first;
    outcome.top_freq = v.top_states[0].second;
  }
  if (bc.suite == "singlet") outcome.correlators = singlet_correlators(counts);
  outcome.params = bc.params;
  outcome.counts_path = (dir / "counts.json").string();
  return outcome;
}

void write_singlet_csv(const fs::path& path, const std::vector<CaseOutcome>& outcomes) {
  std::ostringstream csv;
  csv << "theta1,theta2,f00,f01,f10,f11,F1,F2,F,E_theory\n";
  for (const CaseOutcome& oc : outcomes) {
    double t1 = oc.params.at("theta1");
    double t2 = oc.params.at("theta2");
    const CorrelatorSet& c = oc.correlators;
    char line[256];
    std::snprintf(line, sizeof line,
                  "%.10g,%.10g,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", t1, t2, c.f00,
                  c.f01, c.f10, c.f11, c.F1, c.F2, c.F, singlet_theory_correlator(t1, t2));
    csv << line;
  }
  write_file(path, csv.str());
}

int cmd_run(const RunOptions& opt) {
  fs::path out_dir = resolve_out_dir(opt.out);
  std::vector<std::string> suites;
  if (opt.suite == "all") {
    suites = {"singlet", "adder", "identity", "surface", "code513"};
  } else {
    suites = {opt.suite};
  }

  bool all_correct = true;
  for (const std::string& suite : suites) {
    std::vector<BenchmarkCase> cases = suite_by_name(suite);
    std::vector<std::pair<std::string, std::string>> probes{{suite, ""}};
    for (const BenchmarkCase& bc : cases) probes.emplace_back(suite, bc.name);
    std::string run_id = pick_run_id(out_dir, probes);

    std::vector<std::future<CaseOutcome>> futures;
    futures.reserve(cases.size());
    for (const BenchmarkCase& bc : cases) {
      futures.push_back(std::async(std::launch::async, [&bc, &opt, &out_dir, &run_id] {
        return execute_case(bc, opt, out_dir, run_id);
      }));
    }
    std::vector<CaseOutcome> outcomes;
    outcomes.reserve(futures.size());
    for (auto& f : futures) outcomes.push_back(f.get());

    json summary;
    summary["suite"] = suite;
    summary["run_id"] = run_id;
    summary["backend"] = opt.backend;
    summary["shots"] = opt.shots;
    summary["seed"] = opt.seed;
    if (opt.backend == "noisy") {
      summary["p_correct"] = opt.p_correct;
      summary["channel"] = opt.channel;
    }
    summary["cases"] = json::array();
    summary["failures"] = json::array();
    int correct = 0;
    for (const CaseOutcome& oc : outcomes) {
      summary["cases"].push_back({{"case", oc.name},
                                  {"class", verdict_class_name(oc.cls)},
                                  {"color", verdict_color(oc.cls)},
                                  {"top_state", oc.top_state},
                                  {"top_frequency", oc.top_freq}});
      if (oc.cls == VerdictClass::Correct) {
        ++correct;
      } else {
        summary["failures"].push_back(
            {{"case", oc.name}, {"class", verdict_class_name(oc.cls)}});
        all_correct = false;
      }
      std::printf("%-10s %-24s %-24s top %s %.4f\n", suite.c_str(), oc.name.c_str(),
                  verdict_class_name(oc.cls), oc.top_state.c_str(), oc.top_freq);
    }
    summary["all_correct"] = correct == static_cast<int>(outcomes.size());
    if (suite == "singlet") {
      fs::path csv_path = out_dir / suite / ("correlators-" + run_id + ".csv");
      write_singlet_csv(csv_path, outcomes);
      summary["csv"] = csv_path.string();
    }
    write_file(out_dir / suite / ("summary-" + run_id + ".json"), summary.dump(2) + "\n");

    std::ofstream records(out_dir / "records.jsonl", std::ios::app);
    for (const CaseOutcome& oc : outcomes) {
      json rec;
      rec["case"] = oc.name;
      rec["suite"] = suite;
      rec["run_id"] = run_id;
      rec["params"] = json::object();
      for (const auto& [key, value] : oc.params) rec["params"][key] = value;
      rec["counts_file"] = oc.counts_path;
      rec["verdict"] = verdict_class_name(oc.cls);
      rec["created_at"] = utc_timestamp_now();
      rec["tool_version"] = kToolVersion;
      records << rec.dump() << "\n";
    }
    std::printf("%s: %d/%zu correct (%s)\n", suite.c_str(), correct, outcomes.size(),
                (out_dir / suite / ("summary-" + run_id + ".json")).c_str());
  }
  return all_correct ? kExitOk : kExitVerdict;
}

int cmd_ingest(const std::string& counts_file, const std::string& case_name,
               const std::string& out_flag) {
  CountsTable counts;
  try {
    counts = counts_from_json(read_file(counts_file));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "ingest: %s\n", e.what());
    return kExitInput;
  }
  std::vector<BenchmarkCase> catalog = whole_catalog();
  const BenchmarkCase* bc = find_case(catalog, case_name);
  if (!bc) {
    std::fprintf(stderr, "ingest: unknown case \"%s\"\n", case_name.c_str());
    return kExitInput;
  }
  const std::size_t want = bc->oracle.begin()->first.size();
  if (counts.key_width() != want) {
    std::fprintf(stderr, "ingest: counts keys are %zu bits but the case register is %zu\n",
                 counts.key_width(), want);
    return kExitInput;
  }

  Verdict v = classify(counts, bc->oracle);
  json vj = verdict_to_json(*bc, v);
  vj["ingested_from"] = counts_file;

  fs::path out_dir = resolve_out_dir(out_flag);
  std::string run_id = pick_run_id(out_dir, {{bc->suite, bc->name}});
  fs::path dir = out_dir / bc->suite / bc->name / run_id;
  fs::create_directories(dir);
  write_file(dir / "circuit.qasm", qasm::serialize(bc->circuit));
  write_file(dir / "counts.json", counts_to_json(counts));
  write_file(dir / "verdict.json", vj.dump(2) + "\n");
  write_file(dir / "oracle.json", oracle_to_json(*bc).dump(2) + "\n");
  json meta;
  meta["created_at"] = utc_timestamp_now();
  meta["tool_version"] = kToolVersion;
  meta["ingested_from"] = counts_file;
  meta["backend"] = counts.backend;
  meta["date"] = counts.date;
  write_file(dir / "meta.json", meta.dump(2) + "\n");

  std::ofstream records(out_dir / "records.jsonl", std::ios::app);
  json rec;
  rec["case"] = bc->name;
  rec["suite"] = bc->suite;
  rec["run_id"] = run_id;
  rec["counts_file"] = (dir / "counts.json").string();
  rec["verdict"] = verdict_class_name(v.cls);
  rec["created_at"] = utc_timestamp_now();
  rec["tool_version"] = kToolVersion;
  records << rec.dump() << "\n";

  std::printf("%s\n", vj.dump(2).c_str());
  return v.cls == VerdictClass::Correct ? kExitOk : kExitVerdict;
}

int cmd_transpile(const std::string& in_path, const std::string& out_path,
                  const std::string& coupling, bool verify) {
  Circuit circuit{1, 0};
  try {
    circuit = qasm::parse(read_file(in_path));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "transpile: %s\n", e.what());
    return kExitInput;
  }
  Device device;
  try {
    bool builtin = false;
    for (const std::string& name : builtin_device_names()) {
      if (name == coupling) builtin = true;
    }
    device = builtin ? builtin_device(coupling) : load_device(read_file(coupling));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "transpile: %s\n", e.what());
    return kExitInput;
  }
  RouteResult routed;
  try {
    routed = route(circuit, device);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "transpile: %s\n", e.what());
    return kExitInput;
  }
  try {
    write_file(out_path, qasm::serialize(routed.circuit));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "transpile: %s\n", e.what());
    return kExitInput;
  }
  std::printf("routed onto %s: swaps %d, reversals %d, cx +%d, h +%d\n", device.name.c_str(),
              routed.stats.swaps, routed.stats.reversals, routed.stats.cx_added,
              routed.stats.h_added);
  if (verify) {
    if (circuit.num_qubits() > 10 || routed.circuit.num_qubits() > 10) {
      std::fprintf(stderr, "transpile: --verify handles at most 10 qubits (got %d)\n",
                   std::max(circuit.num_qubits(), routed.circuit.num_qubits()));
      return kExitInput;
    }
    json layout = json::array();
    for (int slot : routed.slot_of_phys) layout.push_back(slot);
    std::printf("layout slot_of_phys: %s\n", layout.dump().c_str());
    EquivalenceReport rep = verify_equivalence(circuit, routed.circuit, routed.slot_of_phys);
    std::printf("verify: max deviation %.3e, global phase %.6f\n", rep.max_deviation,
                rep.global_phase);
    if (!rep.equivalent) {
      std::fprintf(stderr, "transpile: routed circuit is NOT equivalent\n");
      return kExitVerdict;
    }
    std::printf("verify: equivalent\n");
  }
  return kExitOk;
}

struct HistoryEntry {
  std::string run_id;
  fs::path dir;
};

int cmd_report(const std::string& dir_flag, bool stationarity_flag, double k_se) {
  fs::path root = resolve_out_dir(dir_flag);
  std::map<std::pair<std::string, std::string>, std::vector<HistoryEntry>> history;
  if (fs::is_directory(root)) {
    for (const auto& suite_it : fs::directory_iterator(root)) {
      if (!suite_it.is_directory()) continue;
      for (const auto& case_it : fs::directory_iterator(suite_it.path())) {
        if (!case_it.is_directory()) continue;
        for (const auto& run_it : fs::directory_iterator(case_it.path())) {
          if (!run_it.is_directory() || !fs::exists(run_it.path() / "verdict.json")) continue;
          history[{suite_it.path().filename().string(), case_it.path().filename().string()}]
              .push_back({run_it.path().filename().string(), run_it.path()});
        }
      }
    }
  }
  if (history.empty()) {
    std::fprintf(stderr, "report: no run records under %s\n", root.string().c_str());
    return kExitInput;
  }
  for (auto& [key, entries] : history) {
    std::sort(entries.begin(), entries.end(),
              [](const HistoryEntry& a, const HistoryEntry& b) { return a.run_id < b.run_id; });
    std::printf("case %s/%s\n", key.first.c_str(), key.second.c_str());
    std::vector<CountsTable> records;
    for (const HistoryEntry& entry : entries) {
      std::string cls = "?";
      std::string top;
      double freq = 0.0;
      try {
        json vj = json::parse(read_file(entry.dir / "verdict.json"));
        cls = vj.value("class", "?");
        if (vj.contains("top_states") && !vj["top_states"].empty()) {
          top = vj["top_states"][0].value("state", "");
          freq = vj["top_states"][0].value("frequency", 0.0);
        }
        records.push_back(counts_from_json(read_file(entry.dir / "counts.json")));
      } catch (const std::exception& e) {
        std::fprintf(stderr, "report: %s: %s\n", entry.dir.string().c_str(), e.what());
        return kExitInput;
      }
      std::printf("  %-28s %-24s top %s %.4f\n", entry.run_id.c_str(), cls.c_str(), top.c_str(),
                  freq);
    }
    if (stationarity_flag) {
      if (records.size() < 2) {
        std::printf("  stationarity: Inconclusive (single run)\n");
      } else {
        try {
          StationarityReport rep = stationarity(records, k_se);
          std::printf("  stationarity: %s (top %s %s, max delta %.4f, threshold %.4f)\n",
                      rep.stationary ? "stationary" : "NON-STATIONARY",
                      rep.runs[0].top_state.c_str(), rep.same_top ? "stable" : "UNSTABLE",
                      rep.max_delta, rep.threshold);
        } catch (const std::exception& e) {
          std::fprintf(stderr, "report: %s\n", e.what());
          return kExitInput;
        }
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark toolkit for gate-based quantum computers"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "generate and execute a benchmark suite");
  run->add_option("--suite", run_opt.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"singlet", "adder", "identity", "surface", "code513", "all"}));
  run->add_option("--backend", run_opt.backend, "execution backend")
      ->check(CLI::IsMember({"ideal", "noisy"}));
  run->add_option("--shots", run_opt.shots, "shots per case");
  run->add_option("--seed", run_opt.seed, "sampling seed");
  run->add_option("--p-correct", run_opt.p_correct, "per-gate success probability");
  run->add_option("--channel", run_opt.channel, "error channel on gate failure")
      ->check(CLI::IsMember({"bitflip", "depolarizing"}));
  run->add_option("--out", run_opt.out, "output directory (default $QBENCH_OUT or ./out)");

  std::string ingest_file, ingest_case, ingest_out;
  CLI::App* ingest = app.add_subcommand("ingest", "judge an external counts file");
  ingest->add_option("counts", ingest_file, "counts JSON file")->required();
  ingest->add_option("--case", ingest_case, "benchmark case name")->required();
  ingest->add_option("--out", ingest_out, "output directory");

  std::string tp_in, tp_out, tp_coupling = "ibmqe-v1";
  bool tp_verify = false;
  CLI::App* transpile = app.add_subcommand("transpile", "map a circuit onto a device coupling");
  transpile->add_option("input", tp_in, "input circuit file")->required();
  transpile->add_option("output", tp_out, "routed circuit file")->required();
  transpile->add_option("--coupling", tp_coupling, "built-in device name or device JSON file");
  transpile->add_flag("--verify", tp_verify, "check unitary equivalence (max 10 qubits)");

  std::string report_dir;
  bool report_stat = false;
  double report_k_se = 5.0;
  CLI::App* report = app.add_subcommand("report", "summarize run history");
  report->add_option("history", report_dir, "history directory (default $QBENCH_OUT or ./out)");
  report->add_flag("--stationarity", report_stat, "compare runs of each case");
  report->add_option("--k-se", report_k_se, "stationarity tolerance in SE units");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (run->parsed()) return cmd_run(run_opt);
    if (ingest->parsed()) return cmd_ingest(ingest_file, ingest_case, ingest_out);
    if (transpile->parsed()) return cmd_transpile(tp_in, tp_out, tp_coupling, tp_verify);
    if (report->parsed()) return cmd_report(report_dir, report_stat, report_k_se);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "qbench: %s\n", e.what());
    return kExitInput;
  }
  return kExitOk;
}
