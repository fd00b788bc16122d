#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gog {

using GenId = std::uint32_t;
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr GenId kNoGen = static_cast<GenId>(-1);
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

// A word is a flat sequence of interned letters. All algorithms here only
// append or truncate at the ends, so a plain vector is the right shape.
using Word = std::vector<GenId>;
using WordView = std::span<const GenId>;

enum class GenKind : std::uint8_t { VertexLetter, EdgeLetter };

struct GeneratorInfo {
  std::string name;
  GenKind kind = GenKind::VertexLetter;
  GenId inverse = kNoGen;
  VertexId vertex = kNoVertex;  // owning vertex for vertex letters
  EdgeId edge = kNoEdge;        // edge for edge letters
};

class WordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Interned symbol table. Letter equality is integer equality; names are kept
// for parsing and diagnostics only.
class Alphabet {
 public:
  GenId intern(std::string name, GenKind kind);

  // Interns `name` and `name'` as a formal inverse pair of vertex letters.
  std::pair<GenId, GenId> intern_inverse_pair(const std::string& name,
                                              VertexId vertex);

  void set_inverse(GenId a, GenId b);
  void set_vertex(GenId g, VertexId v);
  void set_edge(GenId g, EdgeId e);

  GenId find(std::string_view name) const;  // kNoGen if absent
  GenId require(std::string_view name) const;

  GenId inverse(GenId g) const { return info(g).inverse; }
  const GeneratorInfo& info(GenId g) const;
  std::size_t size() const { return gens_.size(); }
  bool contains(GenId g) const { return g < gens_.size(); }

  Word inverse_word(WordView w) const;

  // Whitespace separated letter names, e.g. "a b b' a'".
  Word parse_word(std::string_view text) const;
  std::string spell(WordView w) const;
  std::string spell(GenId g) const { return info(g).name; }

 private:
  std::vector<GeneratorInfo> gens_;
  std::unordered_map<std::string, GenId> by_name_;
};

inline Word concat(WordView a, WordView b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Addition that refuses to wrap; exponent arithmetic is bounded by the input
// length in every intended use, so an overflow always means a logic bug.
std::int64_t checked_add(std::int64_t a, std::int64_t b);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (GenId g : w) {
      h ^= g + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace gog
