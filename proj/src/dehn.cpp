#include "gog/dehn.hpp"

#include <algorithm>

namespace gog {

DehnSystem DehnSystem::free_group(const Alphabet& alphabet,
                                  std::vector<GenId> positive_letters) {
  DehnSystem sys;
  sys.alphabet_ = &alphabet;
  sys.free_mode_ = true;
  sys.delta_ = 0;
  sys.window_ = 2;
  sys.letters_ = std::move(positive_letters);
  return sys;
}

DehnSystem DehnSystem::from_rules(const Alphabet& alphabet, int delta,
                                  std::vector<GenId> positive_letters,
                                  std::vector<std::pair<Word, Word>> rules) {
  DehnSystem sys;
  sys.alphabet_ = &alphabet;
  sys.free_mode_ = false;
  sys.delta_ = delta;
  sys.letters_ = std::move(positive_letters);
  sys.window_ = 2;
  for (auto& [lhs, rhs] : rules) {
    if (rhs.size() >= lhs.size()) {
      throw WordError("shorten rule must strictly decrease length");
    }
    sys.window_ = std::max(sys.window_, lhs.size());
    sys.rules_.emplace(std::move(lhs), std::move(rhs));
  }
  if (sys.window_ > static_cast<std::size_t>(9 * std::max(delta, 1))) {
    throw WordError("rule window exceeds 9*delta");
  }
  return sys;
}

const Word* DehnSystem::shorten(const Word& window) const {
  if (free_mode_) {
    static const Word kEmpty;
    if (window.size() == 2 && alphabet_->inverse(window[0]) == window[1]) {
      return &kEmpty;
    }
    return nullptr;
  }
  auto it = rules_.find(window);
  return it == rules_.end() ? nullptr : &it->second;
}

Word dehn_reduce(const DehnSystem& sys, WordView w, DehnStats* stats,
                 const RewriteHook& hook) {
  Word prefix;
  prefix.reserve(w.size());
  // Unscanned suffix kept reversed so the next letter is at the back.
  Word pending(w.rbegin(), w.rend());

  DehnStats local;
  DehnStats& st = stats ? *stats : local;

  const std::size_t window = sys.window();
  Word probe;

  while (!pending.empty()) {
    GenId s = pending.back();
    pending.pop_back();
    ++st.window_inspections;

    if (sys.free_mode()) {
      if (!prefix.empty() && prefix.back() == sys.alphabet().inverse(s)) {
        if (hook) {
          Word lhs{prefix.back(), s};
          hook(lhs, {});
        }
        prefix.pop_back();
        ++st.rewrites;
      } else {
        prefix.push_back(s);
      }
      continue;
    }

    prefix.push_back(s);
    const std::size_t maxlen = std::min(prefix.size(), window);
    bool rewritten = false;
    for (std::size_t len = maxlen; len >= 2 && !rewritten; --len) {
      probe.assign(prefix.end() - len, prefix.end());
      if (const Word* rhs = sys.shorten(probe)) {
        if (hook) hook(probe, *rhs);
        prefix.resize(prefix.size() - len);
        // Replacement re-enters through the unscanned zone.
        for (auto it = rhs->rbegin(); it != rhs->rend(); ++it) {
          pending.push_back(*it);
        }
        ++st.rewrites;
        rewritten = true;
      }
    }
  }
  return prefix;
}

}  // namespace gog
