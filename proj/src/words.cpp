#include "gog/words.hpp"

#include <limits>
#include <sstream>

namespace gog {

GenId Alphabet::intern(std::string name, GenKind kind) {
  if (name.empty()) {
    throw WordError("generator name must not be empty");
  }
  auto it = by_name_.find(name);
  if (it != by_name_.end()) {
    throw WordError("duplicate generator name: " + name);
  }
  GenId id = static_cast<GenId>(gens_.size());
  GeneratorInfo gi;
  gi.name = name;
  gi.kind = kind;
  gens_.push_back(std::move(gi));
  by_name_.emplace(std::move(name), id);
  return id;
}

std::pair<GenId, GenId> Alphabet::intern_inverse_pair(const std::string& name,
                                                      VertexId vertex) {
  GenId a = intern(name, GenKind::VertexLetter);
  GenId b = intern(name + "'", GenKind::VertexLetter);
  set_inverse(a, b);
  set_vertex(a, vertex);
  set_vertex(b, vertex);
  return {a, b};
}

void Alphabet::set_inverse(GenId a, GenId b) {
  gens_.at(a).inverse = b;
  gens_.at(b).inverse = a;
}

void Alphabet::set_vertex(GenId g, VertexId v) { gens_.at(g).vertex = v; }

void Alphabet::set_edge(GenId g, EdgeId e) { gens_.at(g).edge = e; }

GenId Alphabet::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  return it == by_name_.end() ? kNoGen : it->second;
}

GenId Alphabet::require(std::string_view name) const {
  GenId g = find(name);
  if (g == kNoGen) {
    throw WordError("unknown letter: " + std::string(name));
  }
  return g;
}

const GeneratorInfo& Alphabet::info(GenId g) const {
  if (g >= gens_.size()) {
    throw WordError("letter id out of range");
  }
  return gens_[g];
}

Word Alphabet::inverse_word(WordView w) const {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    GenId inv = inverse(*it);
    if (inv == kNoGen) {
      throw WordError("letter has no inverse: " + spell(*it));
    }
    out.push_back(inv);
  }
  return out;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    out.push_back(require(tok));
  }
  return out;
}

std::string Alphabet::spell(WordView w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += info(w[i]).name;
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in exponent arithmetic");
  }
  return r;
}

}  // namespace gog
