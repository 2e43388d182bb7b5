#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "khoform/harness.hpp"
#include "khoform/khovanov.hpp"
#include "khoform/oracle.hpp"
#include "khoform/pipeline.hpp"
#include "khoform/resolution.hpp"
#include "khoform/verify.hpp"

using namespace khoform;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;

struct RunConfig {
  std::string word;
  int n = 4;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::size_t max_len = 12;
  std::size_t budget = kDefaultFaceBudget;
  std::string format = "json";
  bool trace = false;
  std::size_t all_up_to = 0;
  bool exhaustive = false;
  std::vector<std::size_t> lengths{100, 1000, 10000, 100000};
  std::size_t per_length = 3;
  double max_exponent = 3.5;
  std::string dot_path, json_path;
};

json solve_report(const BraidWord& w, const RunConfig& cfg) {
  Solution sol = solve(w);
  const int c = static_cast<int>(w.size());
  const int jm = j_min(w);
  auto [framed, oriented] = khovanov_rows(sol.type, c, jm, writhe(w));
  Adequacy adq = adequacy(w);
  json out{{"word", w.to_string()},
           {"n", w.strands()},
           {"c", c},
           {"s_B", circle_count(w)},
           {"j_min", jm},
           {"homotopy", json::parse(sol.type.to_json())},
           {"khovanov", {json::parse(framed.to_json()), json::parse(oriented.to_json())}},
           {"adequacy", {{"B", adq.b_adequate}, {"A", adq.a_adequate}}}};
  if (sol.cls) out["class"] = to_string(sol.cls->tag);
  if (cfg.trace) out["trace"] = json::parse(sol.trace.to_json());
  return out;
}

void print_solve_text(const json& r) {
  std::cout << "word      " << r["word"].get<std::string>() << "  (n=" << r["n"] << ")\n"
            << "c=" << r["c"] << "  |s_B|=" << r["s_B"] << "  j_min=" << r["j_min"] << "\n"
            << "homotopy  " << HomotopyType::from_json(r["homotopy"].dump()).to_string() << "\n";
  for (const auto& row : r["khovanov"]) {
    std::cout << row["convention"].get<std::string>() << " j=" << row["j"] << ":";
    if (row["entries"].empty()) std::cout << " 0";
    for (const auto& e : row["entries"]) std::cout << " Z^" << e["rank"] << "[" << e["i"] << "]";
    std::cout << "\n";
  }
  std::cout << "adequacy  B=" << r["adequacy"]["B"] << " A=" << r["adequacy"]["A"] << "\n";
  if (r.contains("trace")) std::cout << "trace     " << r["trace"].dump() << "\n";
}

int cmd_solve(const RunConfig& cfg) {
  BraidWord w = parse(cfg.word, cfg.n);
  json r = solve_report(w, cfg);
  if (cfg.format == "text") print_solve_text(r);
  else std::cout << r.dump() << "\n";
  return 0;
}

int cmd_oracle(const RunConfig& cfg) {
  BraidWord w = parse(cfg.word, cfg.n);
  HomologyProfile p = oracle_profile(lando_graph(w), cfg.budget);
  if (cfg.format == "text") std::cout << p.to_string() << "\n";
  else std::cout << json{{"word", w.to_string()}, {"n", w.strands()}, {"profile", json::parse(p.to_json())}}.dump() << "\n";
  return 0;
}

struct Tally {
  std::size_t match = 0, mismatch = 0, skipped = 0;
};

int stream_verdicts(std::size_t count, const std::function<BraidWord(std::size_t)>& word_at,
                    const RunConfig& cfg, bool summary) {
  Tally t;
  ordered_parallel<Verdict>(
      count, worker_count(), [&](std::size_t i) { return compare(word_at(i), cfg.budget); },
      [&](std::size_t, Verdict& v) {
        if (v.status == VerdictStatus::Match) ++t.match;
        else if (v.status == VerdictStatus::Mismatch) ++t.mismatch;
        else ++t.skipped;
        if (cfg.format == "text")
          std::cout << to_string(v.status) << "  " << v.word << "  "
                    << (v.type ? v.type->to_string() : std::string("-"))
                    << (v.reason.empty() ? "" : "  (" + v.reason + ")") << "\n";
        else
          std::cout << v.to_json() << "\n";
      });
  if (summary)
    std::cerr << "words " << count << " match " << t.match << " mismatch " << t.mismatch << " skipped "
              << t.skipped << "\n";
  return t.mismatch ? kExitMismatch : 0;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.exhaustive) {
    std::vector<std::pair<std::size_t, std::uint64_t>> index;
    std::uint64_t total = 0;
    for (std::size_t len = 0; len <= cfg.all_up_to; ++len) {
      index.push_back({len, total});
      total += word_count(len, cfg.n);
    }
    auto word_at = [&](std::size_t i) {
      auto it = std::prev(std::upper_bound(index.begin(), index.end(), i,
                                           [](std::size_t v, const auto& e) { return v < e.second; }));
      return nth_word(it->first, i - it->second, cfg.n);
    };
    return stream_verdicts(static_cast<std::size_t>(total), word_at, cfg, true);
  }
  BraidWord w = parse(cfg.word, cfg.n);
  return stream_verdicts(1, [&](std::size_t) { return w; }, cfg, false);
}

int cmd_fuzz(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<BraidWord> words;
  words.reserve(cfg.samples);
  for (std::size_t i = 0; i < cfg.samples; ++i) words.push_back(random_word_up_to(rng, cfg.max_len, cfg.n));
  return stream_verdicts(words.size(), [&](std::size_t i) { return words[i]; }, cfg, true);
}

int cmd_bench(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<double> xs, ys;
  json rows = json::array();
  for (std::size_t len : cfg.lengths) {
    double total = 0;
    for (std::size_t k = 0; k < cfg.per_length; ++k) {
      BraidWord w = random_word(rng, len, cfg.n);
      auto t0 = std::chrono::steady_clock::now();
      Solution sol = solve(w);
      total += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      (void)sol;
    }
    const double mean = total / static_cast<double>(cfg.per_length);
    xs.push_back(static_cast<double>(len));
    ys.push_back(std::max(mean, 1e-6));
    rows.push_back({{"length", len}, {"words", cfg.per_length}, {"mean_seconds", mean}});
    if (cfg.format == "text") std::cout << "length " << len << "  mean " << mean << " s\n" << std::flush;
  }
  const double slope = xs.size() >= 2 ? loglog_slope(xs, ys) : 0.0;
  const bool ok = slope <= cfg.max_exponent;
  if (cfg.format == "text")
    std::cout << "exponent " << slope << (ok ? "  ok" : "  exceeds bound") << "\n";
  else
    std::cout << json{{"seed", cfg.seed}, {"timings", rows}, {"exponent", slope}, {"bound", cfg.max_exponent},
                      {"ok", ok}}
                     .dump()
              << "\n";
  return ok ? 0 : kExitMismatch;
}

int cmd_export(const RunConfig& cfg) {
  BraidWord w = parse(cfg.word, cfg.n);
  ChordDiagram d = resolve(w);
  const std::string dot = build_lando(d).graph.to_dot("lando");
  const std::string chords = to_json(d);
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text << "\n";
  };
  if (cfg.dot_path.empty()) std::cout << dot << "\n";
  else write(cfg.dot_path, dot);
  if (cfg.json_path.empty()) std::cout << chords << "\n";
  else write(cfg.json_path, chords);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extreme Khovanov homology of closed 4-braids"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of strands")->check(CLI::Range(2, 64));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", cfg.budget, "oracle face budget");
  };

  auto* solve_cmd = app.add_subcommand("solve", "homotopy type, Khovanov rows and adequacy");
  solve_cmd->add_option("word", cfg.word, "signed generators, e.g. \"1 2 -1\"")->required();
  solve_cmd->add_flag("--trace", cfg.trace, "include the reduction trace");
  common(solve_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force homology of the independence complex");
  oracle_cmd->add_option("word", cfg.word)->required();
  common(oracle_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "compare the solver against the oracle");
  verify_cmd->add_option("word", cfg.word);
  verify_cmd->add_option("--all-up-to", cfg.all_up_to, "every word of length <= L");
  common(verify_cmd);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "random words against the oracle");
  fuzz_cmd->add_option("--samples", cfg.samples);
  fuzz_cmd->add_option("--max-len", cfg.max_len);
  fuzz_cmd->add_option("--seed", cfg.seed);
  common(fuzz_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "timing sweep over word lengths");
  bench_cmd->add_option("--lengths", cfg.lengths)->delimiter(',');
  bench_cmd->add_option("--per-length", cfg.per_length)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", cfg.seed);
  bench_cmd->add_option("--max-exponent", cfg.max_exponent);
  common(bench_cmd);

  auto* export_cmd = app.add_subcommand("export", "Lando graph as DOT and chord diagram as JSON");
  export_cmd->add_option("word", cfg.word)->required();
  export_cmd->add_option("--dot", cfg.dot_path, "DOT output file");
  export_cmd->add_option("--json", cfg.json_path, "chord diagram output file");
  common(export_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  cfg.exhaustive = verify_cmd->count("--all-up-to") > 0;
  if (*verify_cmd && !cfg.exhaustive && cfg.word.empty()) {
    std::cerr << "verify needs a word or --all-up-to\n";
    return kExitConfig;
  }

  try {
    if (*solve_cmd) return cmd_solve(cfg);
    if (*oracle_cmd) return cmd_oracle(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
    if (*fuzz_cmd) return cmd_fuzz(cfg);
    if (*bench_cmd) return cmd_bench(cfg);
    if (*export_cmd) return cmd_export(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    if (!e.trace_json().empty()) std::cerr << e.trace_json() << "\n";
    return kExitMismatch;
  } catch (const BudgetExceeded& e) {
    std::cerr << "oracle budget exceeded: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return 0;
}
