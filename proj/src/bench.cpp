#include "gog/bench.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "gog/config.hpp"

namespace gog {

namespace {

std::mt19937_64 stream_for(std::uint64_t seed, std::uint64_t tag,
                           std::uint64_t index) {
  std::seed_seq seq{seed, tag, index};
  return std::mt19937_64(seq);
}

Word random_word_over(const std::vector<GenId>& letters, std::mt19937_64& rng,
                      std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::size_t len = len_dist(rng);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(letters[pick(rng)]);
  return out;
}

}  // namespace

Word random_vertex_word(const GroupSchema& schema, std::uint64_t seed,
                        std::uint64_t index, std::size_t max_len) {
  std::vector<GenId> letters;
  for (VertexId v = 0; v < schema.vertex_count(); ++v) {
    const auto& ls = schema.vertex(v).letters;
    letters.insert(letters.end(), ls.begin(), ls.end());
  }
  auto rng = stream_for(seed, 0x1001, index);
  return random_word_over(letters, rng, max_len);
}

Word random_full_word(const GroupSchema& schema, std::uint64_t seed,
                      std::uint64_t index, std::size_t max_len) {
  std::vector<GenId> letters;
  for (VertexId v = 0; v < schema.vertex_count(); ++v) {
    const auto& ls = schema.vertex(v).letters;
    letters.insert(letters.end(), ls.begin(), ls.end());
  }
  for (EdgeId e = 0; e < schema.edge_count(); ++e) {
    if (!schema.edge(e).dummy) letters.push_back(schema.edge(e).letter);
  }
  auto rng = stream_for(seed, 0x1002, index);
  return random_word_over(letters, rng, max_len);
}

Word random_reduced_word(const Alphabet& alphabet,
                         const std::vector<GenId>& positive_letters,
                         std::uint64_t seed, std::uint64_t index,
                         std::size_t max_len) {
  std::vector<GenId> letters;
  for (GenId g : positive_letters) {
    letters.push_back(g);
    letters.push_back(alphabet.inverse(g));
  }
  auto rng = stream_for(seed, 0x1003, index);
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::size_t len = len_dist(rng);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word out;
  out.reserve(len);
  while (out.size() < len) {
    GenId g = letters[pick(rng)];
    if (!out.empty() && alphabet.inverse(out.back()) == g) continue;
    out.push_back(g);
  }
  return out;
}

GroupSchema make_zxz_schema() {
  return parse_schema(
      "[vertices]\n"
      "u\nv\nbase = u\n"
      "[edges]\n"
      "t : reverse = t', from = u, to = v, in_tree = yes\n"
      "t' : reverse = t, from = v, to = u, in_tree = yes\n"
      "[oracles]\n"
      "u = free(a)\n"
      "v = free(b)\n");
}

namespace {

BenchRecord run_cell(const GroupSchema& schema, const std::string& family,
                     std::int64_t size, const std::string& algorithm,
                     std::uint64_t seed) {
  Word w;
  if (family == "slow_many") {
    w = gen_slow_many(schema, size);
  } else if (family == "slow_one") {
    w = gen_slow_one(schema, size);
  } else if (family == "random") {
    // Repetitions re-measure the same drawn word, so charge stays constant
    // across reps and only wall_ns varies.
    w = random_vertex_word(schema, seed, static_cast<std::uint64_t>(size),
                           static_cast<std::size_t>(size));
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }

  BenchRecord rec;
  rec.family = family;
  rec.n = w.size();
  rec.algorithm = algorithm;

  auto t0 = std::chrono::steady_clock::now();
  Verdict verdict;
  if (algorithm == "many") {
    BaselineResult r = many_iterations(schema, w);
    verdict = r.verdict;
    rec.charge = r.charge;
    rec.iterations = r.rounds;
  } else if (algorithm == "one") {
    BaselineResult r = one_iteration(schema, w);
    verdict = r.verdict;
    rec.charge = r.charge;
    rec.iterations = r.rounds;
  } else if (algorithm == "middle") {
    SolveReport r = solve(schema, w, EngineKind::TrivialEdges);
    verdict = r.verdict;
    rec.charge = r.charge;
    rec.iterations = static_cast<std::int64_t>(r.iterations);
  } else {
    throw std::invalid_argument("unknown algorithm: " + algorithm);
  }
  auto t1 = std::chrono::steady_clock::now();
  rec.wall_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  rec.verdict = verdict == Verdict::Trivial ? "TRIVIAL" : "NONTRIVIAL";
  return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchPlan& plan) {
  GroupSchema schema = make_zxz_schema();

  struct Cell {
    std::string family;
    std::int64_t size;
    std::string algorithm;
    int rep;
  };
  std::vector<Cell> cells;
  for (const auto& family : plan.families) {
    for (std::int64_t size : plan.sizes) {
      for (const auto& algorithm : plan.algorithms) {
        for (int rep = 0; rep < plan.repetitions; ++rep) {
          cells.push_back(Cell{family, size, algorithm, rep});
        }
      }
    }
  }

  std::vector<BenchRecord> records(cells.size());
  const unsigned threads =
      std::max(1u, std::min<unsigned>(plan.threads,
                                      std::thread::hardware_concurrency()));
  if (threads <= 1 || cells.size() <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Cell& c = cells[i];
      records[i] = run_cell(schema, c.family, c.size, c.algorithm, plan.seed);
    }
    return records;
  }

  std::mutex mu;
  std::size_t next = 0;
  auto worker = [&]() {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= cells.size()) return;
        i = next++;
      }
      const Cell& c = cells[i];
      records[i] = run_cell(schema, c.family, c.size, c.algorithm, plan.seed);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "family,n,algorithm,charge,wall_ns,iterations,verdict\n";
  for (const BenchRecord& r : records) {
    out << r.family << ',' << r.n << ',' << r.algorithm << ',' << r.charge
        << ',' << r.wall_ns << ',' << r.iterations << ',' << r.verdict << '\n';
  }
  return out.str();
}

std::string bench_doubling_summary(const std::vector<BenchRecord>& records) {
  // First record per (family, algorithm, n) wins; repetitions have equal
  // charge by construction.
  std::map<std::pair<std::string, std::string>, std::map<std::size_t, std::int64_t>>
      by_cell;
  for (const BenchRecord& r : records) {
    by_cell[{r.family, r.algorithm}].emplace(r.n, r.charge);
  }
  std::ostringstream out;
  out << "doubling ratios charge(2n)/charge(n):\n";
  for (const auto& [key, sizes] : by_cell) {
    out << "  " << key.first << " / " << key.second << ":";
    bool any = false;
    for (const auto& [n, charge] : sizes) {
      auto twice = sizes.find(2 * n);
      if (twice == sizes.end() || charge <= 0) continue;
      double ratio = static_cast<double>(twice->second) /
                     static_cast<double>(charge);
      out << " n=" << n << ":" << ratio;
      any = true;
    }
    if (!any) out << " (need doubled sizes)";
    out << "\n";
  }
  return out.str();
}

}  // namespace gog
