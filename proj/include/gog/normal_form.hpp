#pragma once

#include <optional>
#include <string>

#include "gog/schema.hpp"

namespace gog {

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Normal word: * u_1 t_1 u_2 t_2 ... u_n * with the corner edges the dummy
// loop, consecutive edges forming a path, and each piece a word in the vertex
// group where the path currently sits. Derived lengths ride along as the
// third band; for a freshly normalized word they are |u_i| + 1.
struct NormalWord {
  std::vector<Word> pieces;             // u_1 .. u_n
  std::vector<EdgeId> edges;            // t_0 .. t_n
  std::vector<std::int64_t> lengths;    // derived lengths of the pieces

  std::size_t path_length() const { return pieces.size(); }
  bool full() const { return edges.size() == pieces.size() + 1; }

  // Total letter count of the word the bands spell.
  std::size_t letter_length() const;
  std::int64_t derived_total() const;

  // The flat word: t_0 u_1 t_1 ... u_n t_n.
  Word flatten(const GroupSchema& schema) const;

  const Word& piece(std::size_t i) const { return pieces.at(i - 1); }  // 1-based
  std::int64_t length(std::size_t i) const { return lengths.at(i - 1); }
  EdgeId left_edge(std::size_t i) const { return edges.at(i - 1); }
  EdgeId right_edge(std::size_t i) const { return edges.at(i); }
};

// The vertex group a piece lives in.
VertexId piece_vertex(const GroupSchema& schema, const NormalWord& w,
                      std::size_t i);

// Throws InvariantError when the band structure is not a normal word over
// the schema (used after every mutation in checked runs).
void check_normal_word(const GroupSchema& schema, const NormalWord& w);

// Single pass with precomputed spanning-tree geodesics inserted at vertex
// changes, closing the loop back at the base vertex; dummy letters in the
// input are skipped. Derived lengths start at |u_i| + 1.
NormalWord normalize(const GroupSchema& schema, WordView w);

struct ReducibilityVerdict {
  bool reducible = false;
  // Membership certificate on the left edge for admissible schemas; empty
  // for trivial edge groups, where reducibility means the piece is trivial.
  std::optional<EdgeNormalForm> witness;
};

// A piece is reducible when its flanking edges are mutually inverse and the
// piece lies in the corresponding edge group.
ReducibilityVerdict is_reducible(const GroupSchema& schema, const NormalWord& w,
                                 std::size_t i, ChargeMeter& meter);

enum class Verdict { Trivial, NonTrivial };

// Triviality of a shortened word: path length one and a trivial single piece.
// The caller guarantees shortenedness; pieces beyond the first are not
// consulted and cost no oracle charge.
Verdict shortened_verdict(const GroupSchema& schema, const NormalWord& w,
                          ChargeMeter& meter);

// Three-line band dump for eyeballing: word band, edge band, length band.
std::string debug_dump(const GroupSchema& schema, const NormalWord& w);

}  // namespace gog
