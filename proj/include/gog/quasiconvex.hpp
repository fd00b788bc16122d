#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gog/dehn.hpp"
#include "gog/words.hpp"

namespace gog {

// Finite-state membership automaton for a quasiconvex subgroup H of a
// hyperbolic group. States are ball elements near H with the identity as the
// initial and only accepting state; each transition emits a word over the
// subgroup generators. A missing transition means the word has left the
// tracked neighborhood of H, so the run rejects.
struct QuasiconvexAutomaton {
  std::uint32_t initial = 0;  // also the unique final state
  std::uint32_t num_states = 1;
  int lambda = 1;
  std::vector<std::string> state_names;

  struct Transition {
    std::uint32_t next = 0;
    Word output;
  };

  std::unordered_map<std::uint64_t, Transition> transitions;

  static std::uint64_t key(std::uint32_t state, GenId g) {
    return (static_cast<std::uint64_t>(state) << 32) | g;
  }

  void add_transition(std::uint32_t state, GenId g, std::uint32_t next,
                      Word output);
  const Transition* step(std::uint32_t state, GenId g) const;
};

struct QcResult {
  bool member = false;
  Word representative;  // concatenated transition outputs; quasi-geodesic
};

// Reduces w to a local-geodesic word first, then runs the automaton.
QcResult quasiconvex_membership(const QuasiconvexAutomaton& aut,
                                const DehnSystem& sys, WordView w,
                                ChargeMeter* meter = nullptr);

// Membership automaton for the cyclic subgroup generated by one free-group
// letter: a single state accepting exactly the reduced powers of that letter.
QuasiconvexAutomaton build_cyclic_automaton(const Alphabet& alphabet,
                                            GenId letter);

// Rank/index form: picks the index-th positive letter (1-based).
QuasiconvexAutomaton build_cyclic_automaton(
    const Alphabet& alphabet, const std::vector<GenId>& positive_letters,
    std::size_t index);

}  // namespace gog
