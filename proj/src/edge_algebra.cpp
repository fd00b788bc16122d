#include "gog/edge_algebra.hpp"

#include <cstdlib>

namespace gog {

namespace {

void check_coset(const EdgeFrame& frame, std::uint32_t h) {
  if (h >= frame.coset_count()) {
    throw WordError("coset index out of range");
  }
}

}  // namespace

EdgeNormalForm enf_multiply(const EdgeFrame& frame, const EdgeNormalForm& g,
                            const EdgeNormalForm& g2) {
  check_coset(frame, g.h);
  check_coset(frame, g2.h);
  const EdgeNormalForm& fold = frame.coset_mul[g.h][g2.h];
  return EdgeNormalForm{
      checked_add(checked_add(g.k, g2.k), fold.k),
      checked_add(checked_add(g.l, g2.l), fold.l),
      fold.h,
  };
}

EdgeNormalForm enf_conjugate_across(const EdgeFrame& frame,
                                    const EdgeNormalForm& g) {
  check_coset(frame, g.h);
  const EdgeNormalForm& c = frame.conj[g.h];
  return EdgeNormalForm{
      checked_add(g.l, c.k),
      checked_add(g.k, c.l),
      c.h,
  };
}

Word enf_to_word(const EdgeFrame& frame, const EdgeNormalForm& g) {
  check_coset(frame, g.h);
  Word out;
  out.reserve(static_cast<std::size_t>(std::abs(g.k) + std::abs(g.l)) + 1);
  auto emit = [&](GenId pos, GenId neg, std::int64_t e) {
    GenId letter = e >= 0 ? pos : neg;
    for (std::int64_t i = 0; i < std::abs(e); ++i) out.push_back(letter);
  };
  emit(frame.c_letter, frame.c_inverse, g.k);
  emit(frame.o_letter, frame.o_inverse, g.l);
  if (g.h != 0) out.push_back(frame.coset_letters[g.h]);
  return out;
}

EdgeMembership::EdgeMembership(const EdgeFrame& frame,
                               const CentralExtensionOracle& vertex,
                               QuasiconvexAutomaton automaton)
    : frame_(&frame), vertex_(&vertex), automaton_(std::move(automaton)) {}

std::optional<EdgeNormalForm> EdgeMembership::member(WordView w,
                                                     ChargeMeter& meter) const {
  meter.charge(w.size());

  QcResult qc = quasiconvex_membership(automaton_, vertex_->base_system(),
                                       vertex_->project(w));
  if (!qc.member) return std::nullopt;

  // Fold the representative into an o-power and a single coset letter.
  EdgeNormalForm rep_form;
  for (GenId g : qc.representative) {
    if (g == frame_->o_letter) {
      rep_form.l = checked_add(rep_form.l, 1);
    } else if (g == frame_->o_inverse) {
      rep_form.l = checked_add(rep_form.l, -1);
    } else {
      std::uint32_t h = frame_->coset_index(g);
      if (h >= frame_->coset_count()) {
        throw WordError("automaton output letter is not an edge generator");
      }
      rep_form = enf_multiply(*frame_, rep_form, EdgeNormalForm{0, 0, h});
    }
  }

  // w equals c^k times the folded representative; the center recovers k.
  Word rep_word = enf_to_word(*frame_, rep_form);
  Word probe =
      concat(w, vertex_->base_system().alphabet().inverse_word(rep_word));
  ChargeMeter inner;  // covered by this call's single charge
  auto z = central_extension_resolve(vertex_->presentation(), probe, &inner);
  if (!z) {
    throw WordError("edge membership: projection matched but center did not");
  }
  return EdgeNormalForm{checked_add(*z, rep_form.k), rep_form.l, rep_form.h};
}

}  // namespace gog
