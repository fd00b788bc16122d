#include "gog/central.hpp"

namespace gog {

namespace {

// Central contribution of a window word: the cocycle folded along its
// letters. Windows are bounded, so this stays O(1) per rewrite.
std::int64_t word_z_value(const Cocycle& sigma, WordView w) {
  if (!sigma) return 0;
  std::int64_t n = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    n += sigma(w.subspan(0, i), w[i]);
  }
  return n;
}

}  // namespace

std::optional<std::int64_t> central_extension_resolve(
    const CentralExtensionPresentation& pres, WordView w, ChargeMeter* meter) {
  if (meter) meter->charge(w.size());

  Word base;
  base.reserve(w.size());
  std::int64_t n = 0;
  for (GenId g : w) {
    int s = pres.z_sign(g);
    if (s != 0) {
      n += s;
    } else {
      base.push_back(g);
    }
  }

  auto hook = [&](WordView lhs, WordView rhs) {
    if (pres.sigma) {
      n += word_z_value(pres.sigma, lhs) - word_z_value(pres.sigma, rhs);
    }
  };
  Word reduced = dehn_reduce(pres.base, base, nullptr,
                             pres.sigma ? RewriteHook(hook) : RewriteHook{});
  if (!reduced.empty()) return std::nullopt;
  return n;
}

Word CentralExtensionOracle::project(WordView w) const {
  Word out;
  out.reserve(w.size());
  for (GenId g : w) {
    if (!pres_.z_letter(g)) out.push_back(g);
  }
  return out;
}

std::int64_t CentralExtensionOracle::z_sum(WordView w) const {
  std::int64_t n = 0;
  for (GenId g : w) n += pres_.z_sign(g);
  return n;
}

std::optional<Word> CentralExtensionOracle::reduce(WordView w) const {
  auto z = central_extension_resolve(pres_, w);
  Word base = dehn_reduce(pres_.base, project(w));
  if (pres_.sigma) {
    // With a nontrivial cocycle the z-part of a non-central element is not
    // recoverable from projections alone; only reduce central elements.
    if (!z) return std::nullopt;
    base.clear();
  }
  std::int64_t n = z ? *z : z_sum(w);
  for (std::int64_t i = 0; i < std::abs(n); ++i) {
    base.push_back(n > 0 ? pres_.z_pos : pres_.z_neg);
  }
  return base;
}

}  // namespace gog
