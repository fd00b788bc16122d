// Command line front end: decide words, validate schemas, run the benchmark
// matrix. Exit codes: 0 decided/ok, 2 input error, 3 internal invariant
// violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gog/bench.hpp"
#include "gog/config.hpp"
#include "gog/derivation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gog::ConfigError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

int cmd_solve(const std::string& schema_path, const std::string& word_text,
              const std::string& word_file, const std::string& engine_name,
              bool check_invariants) {
  gog::GroupSchema schema = gog::parse_schema_file(schema_path);
  auto report = schema.validate();
  if (!report.ok()) {
    for (const auto& issue : report.issues) std::cerr << issue << "\n";
    return kExitInput;
  }

  std::string text = word_text;
  if (!word_file.empty()) text = read_file(word_file);
  gog::Word w = schema.alphabet().parse_word(text);

  gog::EngineKind engine;
  if (engine_name == "auto") {
    engine = schema.admissible() ? gog::EngineKind::Admissible
                                 : gog::EngineKind::TrivialEdges;
  } else if (engine_name == "admissible") {
    engine = gog::EngineKind::Admissible;
  } else if (engine_name == "trivial-edges") {
    engine = gog::EngineKind::TrivialEdges;
  } else {
    std::cerr << "unknown engine: " << engine_name << "\n";
    return kExitInput;
  }

  gog::SolveOptions opts;
  opts.check_invariants = check_invariants;
  gog::SolveReport rep = gog::solve(schema, w, engine, opts);

  std::cout << (rep.verdict == gog::Verdict::Trivial ? "TRIVIAL" : "NONTRIVIAL")
            << "\n";
  std::cout << "iterations=" << rep.iterations << " charge=" << rep.charge
            << " normalized_length=" << rep.normalized_length << "\n";
  if (check_invariants) {
    for (std::size_t i = 0; i < rep.invariant_log.size(); ++i) {
      const auto& st = rep.invariant_log[i];
      std::cout << "iteration=" << (i + 1)
                << " derived_total=" << st.derived_total
                << " path_length=" << st.path_length
                << " non_sprawling=" << (st.non_sprawling ? 1 : 0)
                << " max_ratio=" << st.max_ratio << "\n";
    }
  }
  return kExitOk;
}

int cmd_validate(const std::string& schema_path) {
  gog::GroupSchema schema = gog::parse_schema_file(schema_path);
  auto report = schema.validate();
  if (report.ok()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  for (const auto& issue : report.issues) std::cout << issue << "\n";
  return kExitInput;
}

int cmd_bench(const std::string& families, const std::string& sizes,
              const std::string& algorithms, int reps, std::uint64_t seed,
              const std::string& out_path, unsigned threads) {
  gog::BenchPlan plan;
  plan.families = split_list(families);
  plan.algorithms = split_list(algorithms);
  for (const std::string& s : split_list(sizes)) {
    plan.sizes.push_back(std::stoll(s));
  }
  plan.repetitions = reps;
  plan.seed = seed;
  plan.threads = threads;

  auto records = gog::run_bench(plan);
  std::string csv = gog::bench_csv(records);
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitInput;
    }
    out << csv;
  }
  std::cout << gog::bench_doubling_summary(records);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word problem solver for graphs of groups"};
  app.require_subcommand(1);

  std::string schema_path, word_text, word_file;
  std::string engine = "auto";
  bool check_invariants = false;

  auto* solve = app.add_subcommand("solve", "decide whether a word is trivial");
  solve->add_option("--schema", schema_path, "schema config file")->required();
  auto* word_opt =
      solve->add_option("--word", word_text, "word as space separated letters");
  auto* word_file_opt =
      solve->add_option("--word-file", word_file, "file holding the word");
  solve->add_option("--engine", engine,
                    "trivial-edges | admissible | auto (default)");
  solve->add_flag("--check-invariants", check_invariants,
                  "verify engine invariants every iteration");

  std::string v_schema;
  auto* validate = app.add_subcommand("validate", "check schema invariants");
  validate->add_option("--schema", v_schema, "schema config file")->required();

  std::string families = "slow_many,slow_one";
  std::string sizes = "64,128,256";
  std::string algorithms = "many,one,middle";
  int reps = 1;
  std::uint64_t seed = 1;
  std::string out_path;
  unsigned threads = 1;
  auto* bench = app.add_subcommand("bench", "run the charge benchmark matrix");
  bench->add_option("--families", families, "slow_many,slow_one,random");
  bench->add_option("--sizes", sizes, "comma separated sizes (k values)");
  bench->add_option("--algorithms", algorithms, "many,one,middle");
  bench->add_option("--reps", reps, "repetitions per cell");
  bench->add_option("--seed", seed, "seed for the random family");
  bench->add_option("--out", out_path, "CSV output path (default stdout)");
  bench->add_option("--threads", threads, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      if (word_opt->count() == 0 && word_file_opt->count() == 0) {
        std::cerr << "solve needs --word or --word-file\n";
        return kExitInput;
      }
      return cmd_solve(schema_path, word_text, word_file, engine,
                       check_invariants);
    }
    if (validate->parsed()) return cmd_validate(v_schema);
    if (bench->parsed()) {
      return cmd_bench(families, sizes, algorithms, reps, seed, out_path,
                       threads);
    }
  } catch (const gog::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
