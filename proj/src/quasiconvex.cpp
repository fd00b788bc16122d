#include "gog/quasiconvex.hpp"

#include <stdexcept>

namespace gog {

void QuasiconvexAutomaton::add_transition(std::uint32_t state, GenId g,
                                          std::uint32_t next, Word output) {
  transitions[key(state, g)] = Transition{next, std::move(output)};
}

const QuasiconvexAutomaton::Transition* QuasiconvexAutomaton::step(
    std::uint32_t state, GenId g) const {
  auto it = transitions.find(key(state, g));
  return it == transitions.end() ? nullptr : &it->second;
}

QcResult quasiconvex_membership(const QuasiconvexAutomaton& aut,
                                const DehnSystem& sys, WordView w,
                                ChargeMeter* meter) {
  if (meter) meter->charge(w.size());
  Word reduced = dehn_reduce(sys, w);

  QcResult out;
  std::uint32_t state = aut.initial;
  for (GenId g : reduced) {
    const auto* t = aut.step(state, g);
    if (t == nullptr) return out;  // left the tracked neighborhood
    out.representative.insert(out.representative.end(), t->output.begin(),
                              t->output.end());
    state = t->next;
  }
  if (state != aut.initial) {
    out.representative.clear();
    return out;
  }
  out.member = true;
  return out;
}

QuasiconvexAutomaton build_cyclic_automaton(const Alphabet& alphabet,
                                            GenId letter) {
  GenId inv = alphabet.inverse(letter);
  if (inv == kNoGen) {
    throw WordError("cyclic automaton letter lacks an inverse: " +
                    alphabet.spell(letter));
  }
  QuasiconvexAutomaton aut;
  aut.num_states = 1;
  aut.state_names = {"1"};
  aut.add_transition(0, letter, 0, Word{letter});
  aut.add_transition(0, inv, 0, Word{inv});
  return aut;
}

QuasiconvexAutomaton build_cyclic_automaton(
    const Alphabet& alphabet, const std::vector<GenId>& positive_letters,
    std::size_t index) {
  if (index == 0 || index > positive_letters.size()) {
    throw std::out_of_range("cyclic automaton generator index out of range");
  }
  return build_cyclic_automaton(alphabet, positive_letters[index - 1]);
}

}  // namespace gog
