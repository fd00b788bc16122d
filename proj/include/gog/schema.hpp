#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gog/edge_algebra.hpp"
#include "gog/oracles.hpp"
#include "gog/words.hpp"

namespace gog {

struct Vertex {
  std::string name;
  std::shared_ptr<const VertexOracle> oracle;
  std::string oracle_spec;       // config-level description, for serialization
  std::vector<GenId> letters;    // S_v, symmetric
};

struct Edge {
  std::string name;
  GenId letter = kNoGen;
  VertexId from = kNoVertex;  // tail
  VertexId to = kNoVertex;    // head
  EdgeId reverse = kNoEdge;
  bool in_tree = false;
  bool dummy = false;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph of groups: vertices carrying oracles, an involutive edge set with a
// spanning tree, a base vertex, and the dummy loop pair used as word corners.
// Immutable and shareable once finalize() has run.
class GroupSchema {
 public:
  GroupSchema();
  GroupSchema(const GroupSchema&) = delete;
  GroupSchema& operator=(const GroupSchema&) = delete;
  GroupSchema(GroupSchema&&) = default;
  GroupSchema& operator=(GroupSchema&&) = default;

  // --- construction (before finalize) ---
  VertexId add_vertex(std::string name);
  void set_base(VertexId v);
  void set_oracle(VertexId v, std::shared_ptr<const VertexOracle> oracle,
                  std::string spec_text);
  std::pair<GenId, GenId> add_vertex_letter_pair(VertexId v,
                                                 const std::string& name);
  // Letters owned by a vertex but kept out of S_v (inner alphabets of
  // transfer oracles); word generators never draw them.
  std::pair<GenId, GenId> add_auxiliary_letter_pair(VertexId v,
                                                    const std::string& name);
  EdgeId add_edge(std::string name, VertexId from, VertexId to, bool in_tree);
  void link_reverse(EdgeId a, EdgeId b);
  void set_frame(EdgeId e, EdgeFrame frame);
  void set_edge_automaton(EdgeId e, QuasiconvexAutomaton aut);

  // Interns the dummy loop pair, computes tree geodesics, and assembles the
  // per-edge membership algorithms where the vertex structure allows it.
  void finalize();
  bool finalized() const { return finalized_; }

  // --- accessors ---
  const Alphabet& alphabet() const { return *alphabet_; }
  Alphabet& alphabet_mut();

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }  // includes dummies
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  VertexId vertex_by_name(std::string_view name) const;  // kNoVertex if absent
  EdgeId edge_by_name(std::string_view name) const;

  VertexId base_vertex() const { return base_; }
  EdgeId dummy_edge() const { return dummy_; }
  EdgeId dummy_reverse() const { return dummy_rev_; }
  bool is_dummy(EdgeId e) const { return edge(e).dummy; }
  EdgeId reverse(EdgeId e) const { return edge(e).reverse; }

  const VertexOracle& oracle(VertexId v) const;
  const EdgeFrame* frame(EdgeId e) const;
  const EdgeMembership* membership(EdgeId e) const;
  bool admissible() const;  // every non-dummy edge carries a frame
  std::int64_t sprawl_constant() const;  // max frame K, 1 when none

  // Geodesic in the spanning tree between two vertices.
  const std::vector<EdgeId>& tree_path(VertexId from, VertexId to) const;

  // Structural invariants as data; empty report means the schema is sound.
  ValidationReport validate() const;

 private:
  void require_finalized() const;
  void require_open() const;

  std::unique_ptr<Alphabet> alphabet_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::optional<EdgeFrame>> frames_;
  std::vector<std::optional<QuasiconvexAutomaton>> automata_;
  std::vector<std::unique_ptr<EdgeMembership>> memberships_;
  std::vector<std::vector<std::vector<EdgeId>>> tree_paths_;
  VertexId base_ = kNoVertex;
  EdgeId dummy_ = kNoEdge;
  EdgeId dummy_rev_ = kNoEdge;
  bool finalized_ = false;
};

ValidationReport validate_schema(const GroupSchema& schema);

}  // namespace gog
