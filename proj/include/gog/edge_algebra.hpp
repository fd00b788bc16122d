#pragma once

#include <optional>
#include <vector>

#include "gog/central.hpp"
#include "gog/quasiconvex.hpp"
#include "gog/words.hpp"

namespace gog {

// Element c^k o^l h of an admissible edge group, with h the index of a coset
// representative (index 0 is the identity). Equal elements have equal
// components, so equality is componentwise.
struct EdgeNormalForm {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::uint32_t h = 0;

  friend bool operator==(const EdgeNormalForm&, const EdgeNormalForm&) = default;
};

// Per-edge structure of an admissible edge group: the central letter c, the
// transported-center letter o, the finite coset data for <c, o> inside the
// edge group, and the conjugation table across the edge.
struct EdgeFrame {
  EdgeId edge = kNoEdge;
  EdgeId reverse_edge = kNoEdge;
  GenId c_letter = kNoGen;
  GenId c_inverse = kNoGen;
  GenId o_letter = kNoGen;
  GenId o_inverse = kNoGen;

  // coset_letters[0] is the identity (no letter); others are vertex letters.
  std::vector<GenId> coset_letters = {kNoGen};

  // coset_mul[h][h'] = (k'', l'', h'') with h h' = c^k'' o^l'' h''.
  std::vector<std::vector<EdgeNormalForm>> coset_mul = {{EdgeNormalForm{}}};

  // conj[h] = (k', l', h') on the reverse edge, for t h t^-1.
  std::vector<EdgeNormalForm> conj = {EdgeNormalForm{}};

  std::int64_t K = 1;  // quasi-geodesy constant for words c^k o^l h

  std::size_t coset_count() const { return coset_letters.size(); }

  // Coset index of a letter; kNoGen-safe. Returns count() when absent.
  std::uint32_t coset_index(GenId g) const {
    for (std::uint32_t i = 1; i < coset_letters.size(); ++i) {
      if (coset_letters[i] == g) return i;
    }
    return static_cast<std::uint32_t>(coset_letters.size());
  }
};

// g g' on the same edge; O(1) with machine integers. Edge groups are abelian,
// so the product is symmetric up to the coset fold.
EdgeNormalForm enf_multiply(const EdgeFrame& frame, const EdgeNormalForm& g,
                            const EdgeNormalForm& g2);

// t g t^-1, expressed on the reverse edge. The c and o exponents swap roles
// and pick up the bounded correction from the conjugated coset.
EdgeNormalForm enf_conjugate_across(const EdgeFrame& frame,
                                    const EdgeNormalForm& g);

// The literal word c^k o^l h (inverse letters for negative exponents).
Word enf_to_word(const EdgeFrame& frame, const EdgeNormalForm& g);

// Membership in the edge group image inside the head vertex group, with the
// normal form as certificate. Projects to the base hyperbolic group, runs the
// quasiconvex automaton for <o>, then recovers the central exponent by
// resolving w against the returned representative. Linear in |w|.
class EdgeMembership {
 public:
  EdgeMembership(const EdgeFrame& frame, const CentralExtensionOracle& vertex,
                 QuasiconvexAutomaton automaton);

  std::optional<EdgeNormalForm> member(WordView w, ChargeMeter& meter) const;

  const EdgeFrame& frame() const { return *frame_; }
  const CentralExtensionOracle& vertex_oracle() const { return *vertex_; }

 private:
  const EdgeFrame* frame_;
  const CentralExtensionOracle* vertex_;
  QuasiconvexAutomaton automaton_;
};

}  // namespace gog
