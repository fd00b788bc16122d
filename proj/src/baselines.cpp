#include "gog/baselines.hpp"

#include <list>

namespace gog {

namespace {

VertexId letter_vertex(const GroupSchema& schema, GenId g) {
  const GeneratorInfo& gi = schema.alphabet().info(g);
  if (gi.kind != GenKind::VertexLetter) {
    throw WordError("edge letter in a free-product word: " + gi.name);
  }
  return gi.vertex;
}

}  // namespace

std::vector<Syllable> syllable_decompose(const GroupSchema& schema,
                                         WordView w) {
  std::vector<Syllable> out;
  for (GenId g : w) {
    VertexId v = letter_vertex(schema, g);
    if (out.empty() || out.back().vertex != v) {
      out.push_back(Syllable{v, {}});
    }
    out.back().word.push_back(g);
  }
  return out;
}

BaselineResult many_iterations(const GroupSchema& schema, WordView w) {
  BaselineResult res;
  ChargeMeter meter;
  Word current(w.begin(), w.end());

  for (;;) {
    ++res.rounds;
    auto syllables = syllable_decompose(schema, current);
    Word next;
    std::size_t kept = 0;
    for (const Syllable& s : syllables) {
      if (schema.oracle(s.vertex).is_trivial(s.word, meter)) continue;
      next.insert(next.end(), s.word.begin(), s.word.end());
      ++kept;
    }
    if (next.empty()) {
      res.verdict = Verdict::Trivial;
      break;
    }
    if (kept == syllables.size()) {
      res.verdict = Verdict::NonTrivial;
      break;
    }
    current = std::move(next);
  }
  res.charge = meter.total;
  return res;
}

BaselineResult one_iteration(const GroupSchema& schema, WordView w) {
  BaselineResult res;
  res.rounds = 1;
  ChargeMeter meter;

  std::vector<Syllable> stack;
  for (Syllable& s : syllable_decompose(schema, w)) {
    if (!stack.empty() && stack.back().vertex == s.vertex) {
      Word joined = concat(stack.back().word, s.word);
      if (schema.oracle(s.vertex).is_trivial(joined, meter)) {
        stack.pop_back();
      } else if (auto reduced = schema.oracle(s.vertex).reduce(joined)) {
        stack.back().word = std::move(*reduced);
      } else {
        stack.back().word = std::move(joined);
      }
    } else {
      if (!schema.oracle(s.vertex).is_trivial(s.word, meter)) {
        stack.push_back(std::move(s));
      }
    }
  }
  res.verdict = stack.empty() ? Verdict::Trivial : Verdict::NonTrivial;
  res.charge = meter.total;
  return res;
}

Verdict brute_force_verdict(const GroupSchema& schema, WordView w,
                            ChargeMeter& meter) {
  std::list<Syllable> syllables;
  for (Syllable& s : syllable_decompose(schema, w)) {
    syllables.push_back(std::move(s));
  }

  // Deleting a syllable only changes the status of the merged neighbour, so
  // the scan resumes there instead of restarting.
  auto it = syllables.begin();
  while (it != syllables.end()) {
    if (!schema.oracle(it->vertex).is_trivial(it->word, meter)) {
      ++it;
      continue;
    }
    auto prev = it == syllables.begin() ? syllables.end() : std::prev(it);
    auto next = std::next(it);
    syllables.erase(it);
    if (prev != syllables.end() && next != syllables.end() &&
        prev->vertex == next->vertex) {
      prev->word.insert(prev->word.end(), next->word.begin(),
                        next->word.end());
      syllables.erase(next);
    }
    it = prev != syllables.end() ? prev : syllables.begin();
  }
  return syllables.empty() ? Verdict::Trivial : Verdict::NonTrivial;
}

namespace {

std::pair<GenId, GenId> two_factor_letters(const GroupSchema& schema) {
  if (schema.vertex_count() < 2) {
    throw SchemaError("slow families need a two-factor free product");
  }
  const auto& a_letters = schema.vertex(0).letters;
  const auto& b_letters = schema.vertex(1).letters;
  if (a_letters.empty() || b_letters.empty()) {
    throw SchemaError("factor vertex has no letters");
  }
  return {a_letters.front(), b_letters.front()};
}

}  // namespace

Word gen_slow_many(const GroupSchema& schema, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  auto [a, b] = two_factor_letters(schema);
  GenId ai = schema.alphabet().inverse(a);
  GenId bi = schema.alphabet().inverse(b);
  Word out;
  out.reserve(static_cast<std::size_t>(8 * k));
  for (std::int64_t j = 0; j < 2 * k; ++j) {
    out.push_back(a);
    out.push_back(b);
  }
  for (std::int64_t j = 0; j < 2 * k; ++j) {
    out.push_back(bi);
    out.push_back(ai);
  }
  return out;
}

Word gen_slow_one(const GroupSchema& schema, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  auto [a, b] = two_factor_letters(schema);
  GenId bi = schema.alphabet().inverse(b);
  Word out;
  out.reserve(static_cast<std::size_t>(4 * k - 3));
  for (std::int64_t j = 0; j < k; ++j) out.push_back(a);
  for (std::int64_t j = 1; j < k; ++j) {
    out.push_back(b);
    out.push_back(bi);
    out.push_back(a);
  }
  return out;
}

}  // namespace gog
