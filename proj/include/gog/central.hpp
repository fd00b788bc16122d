#pragma once

#include <functional>
#include <optional>

#include "gog/dehn.hpp"
#include "gog/oracles.hpp"

namespace gog {

// Cocycle evaluator: sigma(u, v) for the twisted product
// (h, n)(h', m) = (hh', n + m + sigma(h, h')), with u, v words representing h
// and h'. The trivial cocycle (direct products) is the default; only windows
// of bounded length and their replacements are ever queried.
using Cocycle = std::function<std::int64_t(WordView, GenId)>;

// Z-central extension of a hyperbolic group, presented as the base group's
// Dehn system plus a designated central letter pair.
struct CentralExtensionPresentation {
  DehnSystem base;
  GenId z_pos = kNoGen;
  GenId z_neg = kNoGen;
  // sigma(prefix, next) for base words; unset means identically zero.
  Cocycle sigma;

  bool z_letter(GenId g) const { return g == z_pos || g == z_neg; }
  int z_sign(GenId g) const { return g == z_pos ? +1 : (g == z_neg ? -1 : 0); }
};

// Decides whether w represents an element of the central Z, and which one.
// Strips central letters first, then runs Dehn reduction on the base word
// while carrying the bounded cocycle correction for every window rewrite.
// Returns the integer for central elements, nullopt otherwise.
std::optional<std::int64_t> central_extension_resolve(
    const CentralExtensionPresentation& pres, WordView w,
    ChargeMeter* meter = nullptr);

class CentralExtensionOracle final : public VertexOracle {
 public:
  explicit CentralExtensionOracle(CentralExtensionPresentation pres)
      : pres_(std::move(pres)) {}

  bool is_trivial(WordView w, ChargeMeter& meter) const override {
    auto z = central_extension_resolve(pres_, w, &meter);
    return z.has_value() && *z == 0;
  }

  std::optional<Word> reduce(WordView w) const override;

  const CentralExtensionOracle* as_central_extension() const override {
    return this;
  }

  const CentralExtensionPresentation& presentation() const { return pres_; }
  const DehnSystem& base_system() const { return pres_.base; }

  // Projection to the base group: drops the central letters.
  Word project(WordView w) const;
  std::int64_t z_sum(WordView w) const;

 private:
  CentralExtensionPresentation pres_;
};

}  // namespace gog
