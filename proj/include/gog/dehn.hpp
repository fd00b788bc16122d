#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "gog/oracles.hpp"
#include "gog/words.hpp"

namespace gog {

// Rewriting system for Dehn's algorithm. Every rule replaces a non-geodesic
// window with a strictly shorter word representing the same group element.
// The free-group system (delta = 0) is built in: its only windows are the
// cancelling pairs s s'.
class DehnSystem {
 public:
  static DehnSystem free_group(const Alphabet& alphabet,
                               std::vector<GenId> positive_letters);
  static DehnSystem from_rules(const Alphabet& alphabet, int delta,
                               std::vector<GenId> positive_letters,
                               std::vector<std::pair<Word, Word>> rules);

  bool free_mode() const { return free_mode_; }
  int delta() const { return delta_; }
  std::size_t window() const { return window_; }
  const Alphabet& alphabet() const { return *alphabet_; }
  const std::vector<GenId>& positive_letters() const { return letters_; }

  // The replacement for a non-geodesic window, or nullptr when the window is
  // geodesic. Only meaningful for words no longer than window().
  const Word* shorten(const Word& window) const;

 private:
  const Alphabet* alphabet_ = nullptr;
  bool free_mode_ = false;
  int delta_ = 0;
  std::size_t window_ = 2;
  std::vector<GenId> letters_;
  std::unordered_map<Word, Word, WordHash> rules_;
};

struct DehnStats {
  // One inspection per letter admitted into the confirmed prefix; the
  // two-zone schedule keeps this linear in the input length.
  std::int64_t window_inspections = 0;
  std::int64_t rewrites = 0;
};

// Called for every window replacement b -> b'.
using RewriteHook = std::function<void(WordView lhs, WordView rhs)>;

// Reduces w to a word with no non-geodesic window, equal to w in the group.
// Follows the confirmed-prefix/unscanned-suffix schedule: the prefix never
// contains a rule left-hand side, each new letter costs one window
// inspection, and each rewrite strictly shrinks the remaining work.
Word dehn_reduce(const DehnSystem& sys, WordView w, DehnStats* stats = nullptr,
                 const RewriteHook& hook = {});

// Vertex oracle backed by a Dehn rewriting system.
class DehnOracle final : public VertexOracle {
 public:
  explicit DehnOracle(DehnSystem sys) : sys_(std::move(sys)) {}

  bool is_trivial(WordView w, ChargeMeter& meter) const override {
    meter.charge(w.size());
    return dehn_reduce(sys_, w).empty();
  }

  std::optional<Word> reduce(WordView w) const override {
    return dehn_reduce(sys_, w);
  }

  const DehnSystem& system() const { return sys_; }

 private:
  DehnSystem sys_;
};

}  // namespace gog
