#include "gog/normal_form.hpp"

#include <cassert>
#include <numeric>
#include <sstream>

namespace gog {

std::size_t NormalWord::letter_length() const {
  std::size_t n = edges.size();
  for (const Word& u : pieces) n += u.size();
  return n;
}

std::int64_t NormalWord::derived_total() const {
  return std::accumulate(lengths.begin(), lengths.end(), std::int64_t{0});
}

Word NormalWord::flatten(const GroupSchema& schema) const {
  Word out;
  out.reserve(letter_length());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    out.push_back(schema.edge(edges[i]).letter);
    out.insert(out.end(), pieces[i].begin(), pieces[i].end());
  }
  out.push_back(schema.edge(edges.back()).letter);
  return out;
}

VertexId piece_vertex(const GroupSchema& schema, const NormalWord& w,
                      std::size_t i) {
  return schema.edge(w.left_edge(i)).to;
}

void check_normal_word(const GroupSchema& schema, const NormalWord& w) {
  const std::size_t n = w.path_length();
  if (n < 1) throw InvariantError("normal word has no pieces");
  if (w.edges.size() != n + 1 || w.lengths.size() != n) {
    throw InvariantError("normal word bands disagree on path length");
  }
  if (w.edges.front() != schema.dummy_edge() ||
      w.edges.back() != schema.dummy_edge()) {
    throw InvariantError("normal word corners are not the dummy edge");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (schema.is_dummy(w.edges[i])) {
      throw InvariantError("dummy edge inside a normal word");
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const Edge& left = schema.edge(w.left_edge(i));
    const Edge& right = schema.edge(w.right_edge(i));
    if (left.to != right.from) {
      throw InvariantError("edge band is not a path");
    }
    for (GenId g : w.piece(i)) {
      const GeneratorInfo& gi = schema.alphabet().info(g);
      if (gi.kind != GenKind::VertexLetter || gi.vertex != left.to) {
        throw InvariantError("piece letter outside its vertex group");
      }
    }
    if (w.length(i) < 1) throw InvariantError("derived length below one");
  }
}

NormalWord normalize(const GroupSchema& schema, WordView w) {
  if (!schema.finalized()) throw SchemaError("schema not finalized");

  NormalWord out;
  out.edges.push_back(schema.dummy_edge());
  Word piece;
  VertexId at = schema.base_vertex();

  auto close_piece = [&](EdgeId next_edge) {
    out.pieces.push_back(std::move(piece));
    piece = Word{};
    out.edges.push_back(next_edge);
  };
  auto walk_to = [&](VertexId target) {
    for (EdgeId t : schema.tree_path(at, target)) close_piece(t);
    at = target;
  };

  for (GenId g : w) {
    if (!schema.alphabet().contains(g)) {
      throw WordError("letter not in schema");
    }
    const GeneratorInfo& gi = schema.alphabet().info(g);
    if (gi.kind == GenKind::EdgeLetter) {
      const Edge& e = schema.edge(gi.edge);
      if (e.dummy) continue;  // dummies are trivial by definition
      walk_to(e.from);
      close_piece(gi.edge);
      at = e.to;
    } else {
      walk_to(gi.vertex);
      piece.push_back(g);
    }
  }
  walk_to(schema.base_vertex());
  out.pieces.push_back(std::move(piece));
  out.edges.push_back(schema.dummy_edge());

  out.lengths.reserve(out.pieces.size());
  for (const Word& u : out.pieces) {
    out.lengths.push_back(static_cast<std::int64_t>(u.size()) + 1);
  }
  return out;
}

ReducibilityVerdict is_reducible(const GroupSchema& schema, const NormalWord& w,
                                 std::size_t i, ChargeMeter& meter) {
  ReducibilityVerdict out;
  EdgeId left = w.left_edge(i);
  EdgeId right = w.right_edge(i);
  if (left != schema.reverse(right)) return out;

  if (const EdgeMembership* mem = schema.membership(left)) {
    auto enf = mem->member(w.piece(i), meter);
    if (enf.has_value()) {
      out.reducible = true;
      out.witness = *enf;
    }
    return out;
  }
  if (schema.frame(left) != nullptr) {
    throw SchemaError("edge has a frame but no membership algorithm");
  }
  // Trivial edge group: membership in the image means the piece is trivial.
  VertexId v = piece_vertex(schema, w, i);
  out.reducible = schema.oracle(v).is_trivial(w.piece(i), meter);
  return out;
}

Verdict shortened_verdict(const GroupSchema& schema, const NormalWord& w,
                          ChargeMeter& meter) {
#ifndef NDEBUG
  for (std::size_t i = 1; i <= w.path_length(); ++i) {
    ChargeMeter scratch;
    assert(!is_reducible(schema, w, i, scratch).reducible &&
           "shortened_verdict needs a shortened word");
  }
#endif
  if (w.path_length() != 1) return Verdict::NonTrivial;
  VertexId v = piece_vertex(schema, w, 1);
  return schema.oracle(v).is_trivial(w.piece(1), meter) ? Verdict::Trivial
                                                        : Verdict::NonTrivial;
}

std::string debug_dump(const GroupSchema& schema, const NormalWord& w) {
  std::ostringstream out;
  out << '*';
  for (std::size_t i = 1; i <= w.path_length(); ++i) {
    if (i > 1) out << '#';
    out << schema.alphabet().spell(w.piece(i));
  }
  out << "*\n";
  for (EdgeId e : w.edges) out << schema.edge(e).name << ' ';
  out << '\n';
  for (std::size_t i = 1; i <= w.path_length(); ++i) {
    if (i > 1) out << ' ';
    out << w.length(i);
  }
  out << '\n';
  return out.str();
}

}  // namespace gog
