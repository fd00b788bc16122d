#pragma once

#include <optional>

#include "gog/normal_form.hpp"

namespace gog {

// Bookkeeping for one derivation step, kept only when requested: the split
// sequence mapping output pieces to source positions, which output pieces
// were changed, and the positions where the counter schedule fired.
struct DerivationTrace {
  std::vector<std::size_t> split_sequence;                   // k_0 .. k_n
  std::vector<bool> changed;                                 // per output piece
  std::vector<std::size_t> reduction_starts;                 // instigators
  std::vector<std::pair<std::size_t, std::size_t>> capped;   // counter ran out
  std::vector<std::int64_t> counter_starts;                  // c at each start
};

struct EngineOptions {
  bool check_invariants = false;
  bool record_trace = false;
  // Doubling floor: every piece reduced at top level must carry at least this
  // derived length. The driver raises it by powers of two per iteration.
  std::int64_t min_reducible_length = 1;
};

struct DeriveStats {
  std::int64_t reductions = 0;    // AlgStep entries into the inner loop
  std::int64_t fast_merges = 0;   // both neighbours already in the edge group
  std::int64_t probe_merges = 0;  // merged through the central-free probe
  std::int64_t flushes = 0;
};

struct DeriveResult {
  NormalWord word;
  bool trivial_derivation = false;
  DeriveStats stats;
  std::optional<DerivationTrace> trace;
};

// One middle derivation for a schema with trivial edge groups. The input must
// be a non-sprawling derivation of some original word with its derived
// lengths on board; the output is again non-sprawling, with total derived
// length preserved. trivial_derivation reports that no reduction was found,
// i.e. the input was already shortened.
DeriveResult middle_derive_trivial_edges(const GroupSchema& schema,
                                         const NormalWord& w,
                                         ChargeMeter& meter,
                                         const EngineOptions& opts = {});

// One middle derivation for an admissible schema. The running reduction is
// carried as an edge normal form on the edge left of the current piece; inner
// steps use the fast both-in-edge-group path when the flanking edges of the
// source piece cancel, and otherwise the central-free membership probe.
DeriveResult middle_derive_admissible(const GroupSchema& schema,
                                      const NormalWord& w, ChargeMeter& meter,
                                      const EngineOptions& opts = {});

enum class EngineKind { TrivialEdges, Admissible };

struct IterationStats {
  std::int64_t derived_total = 0;
  std::size_t path_length = 0;
  bool non_sprawling = true;
  double max_ratio = 0.0;  // max |u_i| / derived length, advisory
};

struct SolveOptions {
  bool check_invariants = false;
};

struct SolveReport {
  Verdict verdict = Verdict::NonTrivial;
  std::size_t iterations = 0;       // middle derivations performed
  std::int64_t charge = 0;          // total oracle charge
  std::size_t normalized_length = 0;
  std::vector<IterationStats> invariant_log;
};

// Smallest p with 2^p >= n (n >= 1).
std::size_t ceil_log2(std::size_t n);

// Normalize, then run middle derivations until the word is a single piece
// (decided by the vertex oracle) or a derivation comes back trivial (the word
// is shortened with more than one piece, hence nontrivial). The iteration
// count never exceeds ceil_log2 of the normalized length.
SolveReport solve(const GroupSchema& schema, WordView w, EngineKind engine,
                  const SolveOptions& opts = {});

// Naive reference reducer: scan for any reducible piece and reduce it until
// none is left, then decide by the shortened criterion. Quadratic; exists as
// an independent check of the scheduled engine.
Verdict reference_reduce_verdict(const GroupSchema& schema, WordView w,
                                 ChargeMeter& meter);

}  // namespace gog
