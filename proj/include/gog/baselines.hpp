#pragma once

#include "gog/normal_form.hpp"
#include "gog/schema.hpp"

namespace gog {

// Maximal alternating decomposition of a free-product word into syllables,
// one per run of letters from the same vertex group. The decomposition is
// unique; inner syllables are nonempty by construction.
struct Syllable {
  VertexId vertex = kNoVertex;
  Word word;
};

std::vector<Syllable> syllable_decompose(const GroupSchema& schema, WordView w);

struct BaselineResult {
  Verdict verdict = Verdict::NonTrivial;
  std::int64_t charge = 0;
  std::int64_t rounds = 0;  // full passes for the round-based reducer
};

// Round-based reducer: test every syllable, drop the trivial ones, rebuild,
// and repeat until the word empties or a round removes nothing.
BaselineResult many_iterations(const GroupSchema& schema, WordView w);

// Single left-to-right pass with a merge-or-append accumulator. Merged
// syllables are stored reduced when the oracle offers a canonical form.
BaselineResult one_iteration(const GroupSchema& schema, WordView w);

// Syllable-reduction brute force: delete any trivial syllable, concatenate
// the exposed neighbours, repeat to a fixed point. Independent of the normal
// form machinery; used as the reference verdict for free products.
Verdict brute_force_verdict(const GroupSchema& schema, WordView w,
                            ChargeMeter& meter);

// (a b)^{2k} (b' a')^{2k}: trivial, length 8k, and quadratic for the
// round-based reducer.
Word gen_slow_many(const GroupSchema& schema, std::int64_t k);

// a^k (b b' a)^{k-1}: nontrivial with every prefix nontrivial, length 4k - 3,
// and quadratic for the single-pass reducer.
Word gen_slow_one(const GroupSchema& schema, std::int64_t k);

}  // namespace gog
