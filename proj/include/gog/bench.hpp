#pragma once

#include <random>
#include <string>

#include "gog/baselines.hpp"
#include "gog/derivation.hpp"

namespace gog {

// Seeded word generators. The per-word stream is seeded from (seed, tag,
// index), so corpora are reproducible independent of drawing order.

// Uniform letters from the vertex alphabets, length uniform in [0, max_len].
Word random_vertex_word(const GroupSchema& schema, std::uint64_t seed,
                        std::uint64_t index, std::size_t max_len);

// As above but edge letters (excluding dummies) are drawn too.
Word random_full_word(const GroupSchema& schema, std::uint64_t seed,
                      std::uint64_t index, std::size_t max_len);

// Freely reduced word over one free-group alphabet.
Word random_reduced_word(const Alphabet& alphabet,
                         const std::vector<GenId>& positive_letters,
                         std::uint64_t seed, std::uint64_t index,
                         std::size_t max_len);

struct BenchRecord {
  std::string family;
  std::size_t n = 0;  // word length
  std::string algorithm;
  std::int64_t charge = 0;
  std::int64_t wall_ns = 0;
  std::int64_t iterations = 0;
  std::string verdict;
};

struct BenchPlan {
  std::vector<std::string> families;    // slow_many | slow_one | random
  std::vector<std::int64_t> sizes;      // k for the slow families, n for random
  std::vector<std::string> algorithms;  // many | one | middle
  int repetitions = 1;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

// Runs the matrix over the built-in two-factor free product. Cells are
// independent; rows come back in matrix order regardless of thread count.
std::vector<BenchRecord> run_bench(const BenchPlan& plan);

std::string bench_csv(const std::vector<BenchRecord>& records);

// charge(2n)/charge(n) per (family, algorithm), in size order.
std::string bench_doubling_summary(const std::vector<BenchRecord>& records);

// The two-factor free product the harness and the slow families live on.
GroupSchema make_zxz_schema();

}  // namespace gog
