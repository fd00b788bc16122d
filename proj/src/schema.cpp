#include "gog/schema.hpp"

#include <algorithm>
#include <deque>

namespace gog {

GroupSchema::GroupSchema() : alphabet_(std::make_unique<Alphabet>()) {}

void GroupSchema::require_finalized() const {
  if (!finalized_) throw SchemaError("schema not finalized");
}

void GroupSchema::require_open() const {
  if (finalized_) throw SchemaError("schema already finalized");
}

Alphabet& GroupSchema::alphabet_mut() {
  require_open();
  return *alphabet_;
}

VertexId GroupSchema::add_vertex(std::string name) {
  require_open();
  if (vertex_by_name(name) != kNoVertex) {
    throw SchemaError("duplicate vertex: " + name);
  }
  vertices_.push_back(Vertex{std::move(name), nullptr, {}, {}});
  if (base_ == kNoVertex) base_ = static_cast<VertexId>(vertices_.size() - 1);
  return static_cast<VertexId>(vertices_.size() - 1);
}

void GroupSchema::set_base(VertexId v) {
  require_open();
  if (v >= vertices_.size()) throw SchemaError("base vertex out of range");
  base_ = v;
}

void GroupSchema::set_oracle(VertexId v,
                             std::shared_ptr<const VertexOracle> oracle,
                             std::string spec_text) {
  require_open();
  vertices_.at(v).oracle = std::move(oracle);
  vertices_.at(v).oracle_spec = std::move(spec_text);
}

std::pair<GenId, GenId> GroupSchema::add_vertex_letter_pair(
    VertexId v, const std::string& name) {
  require_open();
  auto pair = alphabet_->intern_inverse_pair(name, v);
  vertices_.at(v).letters.push_back(pair.first);
  vertices_.at(v).letters.push_back(pair.second);
  return pair;
}

std::pair<GenId, GenId> GroupSchema::add_auxiliary_letter_pair(
    VertexId v, const std::string& name) {
  require_open();
  return alphabet_->intern_inverse_pair(name, v);
}

EdgeId GroupSchema::add_edge(std::string name, VertexId from, VertexId to,
                             bool in_tree) {
  require_open();
  if (from >= vertices_.size() || to >= vertices_.size()) {
    throw SchemaError("edge endpoint out of range: " + name);
  }
  EdgeId id = static_cast<EdgeId>(edges_.size());
  GenId letter = alphabet_->intern(name, GenKind::EdgeLetter);
  alphabet_->set_edge(letter, id);
  edges_.push_back(Edge{std::move(name), letter, from, to, kNoEdge, in_tree,
                        /*dummy=*/false});
  frames_.emplace_back();
  automata_.emplace_back();
  return id;
}

void GroupSchema::link_reverse(EdgeId a, EdgeId b) {
  require_open();
  edges_.at(a).reverse = b;
  edges_.at(b).reverse = a;
  alphabet_->set_inverse(edges_[a].letter, edges_[b].letter);
}

void GroupSchema::set_frame(EdgeId e, EdgeFrame frame) {
  require_open();
  frame.edge = e;
  frame.reverse_edge = edges_.at(e).reverse;
  frame.c_inverse = alphabet_->inverse(frame.c_letter);
  frame.o_inverse = alphabet_->inverse(frame.o_letter);
  frames_.at(e) = std::move(frame);
}

void GroupSchema::set_edge_automaton(EdgeId e, QuasiconvexAutomaton aut) {
  require_open();
  automata_.at(e) = std::move(aut);
}

void GroupSchema::finalize() {
  require_open();
  if (vertices_.empty()) throw SchemaError("schema has no vertices");
  if (base_ == kNoVertex) throw SchemaError("schema has no base vertex");

  // Dummy loop pair at the base vertex; these are real edge letters so no
  // code path needs corner special cases.
  dummy_ = static_cast<EdgeId>(edges_.size());
  {
    GenId letter = alphabet_->intern("*", GenKind::EdgeLetter);
    alphabet_->set_edge(letter, dummy_);
    edges_.push_back(Edge{"*", letter, base_, base_, kNoEdge, false, true});
    frames_.emplace_back();
    automata_.emplace_back();
  }
  dummy_rev_ = static_cast<EdgeId>(edges_.size());
  {
    GenId letter = alphabet_->intern("*'", GenKind::EdgeLetter);
    alphabet_->set_edge(letter, dummy_rev_);
    edges_.push_back(Edge{"*'", letter, base_, base_, kNoEdge, false, true});
    frames_.emplace_back();
    automata_.emplace_back();
  }
  edges_[dummy_].reverse = dummy_rev_;
  edges_[dummy_rev_].reverse = dummy_;
  alphabet_->set_inverse(edges_[dummy_].letter, edges_[dummy_rev_].letter);

  // All-pairs geodesics in the spanning tree (BFS per source).
  const std::size_t nv = vertices_.size();
  tree_paths_.assign(nv, std::vector<std::vector<EdgeId>>(nv));
  for (VertexId src = 0; src < nv; ++src) {
    std::vector<EdgeId> via(nv, kNoEdge);
    std::vector<bool> seen(nv, false);
    std::deque<VertexId> queue{src};
    seen[src] = true;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (!ed.in_tree || ed.from != v || seen[ed.to]) continue;
        seen[ed.to] = true;
        via[ed.to] = e;
        queue.push_back(ed.to);
      }
    }
    for (VertexId dst = 0; dst < nv; ++dst) {
      if (!seen[dst]) continue;  // disconnection is reported by validate()
      std::vector<EdgeId> path;
      for (VertexId v = dst; v != src; v = edges_[via[v]].from) {
        path.push_back(via[v]);
      }
      std::reverse(path.begin(), path.end());
      tree_paths_[src][dst] = std::move(path);
    }
  }

  // Edge membership algorithms where the head vertex exposes the central
  // extension structure. The automaton comes from config data or, when the
  // o-letter projects to a single base letter, is built directly.
  memberships_.resize(edges_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (!frames_[e].has_value()) continue;
    const Vertex& head = vertices_[edges_[e].to];
    if (!head.oracle) continue;
    const CentralExtensionOracle* ce = head.oracle->as_central_extension();
    if (ce == nullptr) continue;
    std::optional<QuasiconvexAutomaton> aut = automata_[e];
    if (!aut.has_value()) {
      GenId o = frames_[e]->o_letter;
      if (ce->presentation().z_letter(o)) continue;  // no base direction
      aut = build_cyclic_automaton(*alphabet_, o);
    }
    memberships_[e] = std::make_unique<EdgeMembership>(*frames_[e], *ce,
                                                       std::move(*aut));
  }

  finalized_ = true;
}

VertexId GroupSchema::vertex_by_name(std::string_view name) const {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].name == name) return v;
  }
  return kNoVertex;
}

EdgeId GroupSchema::edge_by_name(std::string_view name) const {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].name == name) return e;
  }
  return kNoEdge;
}

const VertexOracle& GroupSchema::oracle(VertexId v) const {
  const auto& ptr = vertices_.at(v).oracle;
  if (!ptr) throw SchemaError("vertex has no oracle: " + vertices_.at(v).name);
  return *ptr;
}

const EdgeFrame* GroupSchema::frame(EdgeId e) const {
  const auto& f = frames_.at(e);
  return f.has_value() ? &*f : nullptr;
}

const EdgeMembership* GroupSchema::membership(EdgeId e) const {
  require_finalized();
  return memberships_.at(e).get();
}

bool GroupSchema::admissible() const {
  bool any = false;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].dummy) continue;
    if (frames_[e].has_value()) {
      any = true;
    } else {
      return false;
    }
  }
  return any;
}

std::int64_t GroupSchema::sprawl_constant() const {
  std::int64_t k = 1;
  for (const auto& f : frames_) {
    if (f.has_value()) k = std::max(k, f->K);
  }
  return k;
}

const std::vector<EdgeId>& GroupSchema::tree_path(VertexId from,
                                                  VertexId to) const {
  require_finalized();
  return tree_paths_.at(from).at(to);
}

ValidationReport GroupSchema::validate() const {
  ValidationReport rep;
  auto issue = [&rep](std::string msg) { rep.issues.push_back(std::move(msg)); };

  if (base_ == kNoVertex || base_ >= vertices_.size()) {
    issue("base vertex missing");
    return rep;
  }

  std::size_t real_edges = 0;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (!ed.dummy) ++real_edges;
    if (ed.reverse == kNoEdge || ed.reverse >= edges_.size()) {
      issue("edge involution/endpoint mismatch: " + ed.name +
            " has no reverse");
      continue;
    }
    const Edge& rev = edges_[ed.reverse];
    if (rev.reverse != e || ed.reverse == e) {
      issue("edge involution/endpoint mismatch: " + ed.name);
    }
    if (rev.from != ed.to || rev.to != ed.from) {
      issue("edge involution/endpoint mismatch: " + ed.name + " / " + rev.name);
    }
    if (rev.in_tree != ed.in_tree) {
      issue("tree flag differs between " + ed.name + " and " + rev.name);
    }
    if (ed.dummy != rev.dummy) {
      issue("dummy pairing broken: " + ed.name);
    }
  }
  if (real_edges == 0) issue("graph has no edge");

  // Connectivity over all real edges, and the spanning property of the tree.
  auto reachable = [&](bool tree_only) {
    std::vector<bool> seen(vertices_.size(), false);
    std::deque<VertexId> queue{base_};
    seen[base_] = true;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (const Edge& ed : edges_) {
        if (ed.dummy || ed.from != v || (tree_only && !ed.in_tree)) continue;
        if (!seen[ed.to]) {
          seen[ed.to] = true;
          queue.push_back(ed.to);
        }
      }
    }
    return seen;
  };
  auto all_seen = [](const std::vector<bool>& seen) {
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  if (!all_seen(reachable(false))) issue("graph is not connected");
  if (!all_seen(reachable(true))) issue("spanning tree does not span");
  std::size_t tree_pairs = 0;
  for (const Edge& ed : edges_) {
    if (ed.in_tree && !ed.dummy) ++tree_pairs;
  }
  if (all_seen(reachable(true)) && tree_pairs != 2 * (vertices_.size() - 1)) {
    issue("spanning tree has a cycle");
  }

  for (VertexId v = 0; v < vertices_.size(); ++v) {
    const Vertex& vx = vertices_[v];
    if (!vx.oracle) issue("vertex has no oracle: " + vx.name);
    for (GenId g : vx.letters) {
      const GeneratorInfo& gi = alphabet_->info(g);
      if (gi.vertex != v) {
        issue("letter " + gi.name + " not owned by vertex " + vx.name);
      }
      if (gi.inverse == kNoGen ||
          alphabet_->info(gi.inverse).vertex != v) {
        issue("letter " + gi.name + " lacks an inverse in " + vx.name);
      }
    }
  }

  // Admissible data, when present.
  bool any_frame = false, all_frames = true;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].dummy) continue;
    if (frames_[e].has_value()) {
      any_frame = true;
    } else {
      all_frames = false;
    }
  }
  if (any_frame && !all_frames) issue("admissible data incomplete");

  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (!frames_[e].has_value()) continue;
    const EdgeFrame& f = *frames_[e];
    const Edge& ed = edges_[e];
    auto check_vertex_letter = [&](GenId g, const char* what) {
      if (g == kNoGen) {
        issue(std::string("frame of ") + ed.name + " missing " + what);
        return;
      }
      const GeneratorInfo& gi = alphabet_->info(g);
      if (gi.kind != GenKind::VertexLetter || gi.vertex != ed.to) {
        issue(std::string("frame of ") + ed.name + ": " + what +
              " letter is not in the head vertex alphabet");
      }
    };
    check_vertex_letter(f.c_letter, "c");
    check_vertex_letter(f.o_letter, "o");
    for (std::uint32_t h = 1; h < f.coset_count(); ++h) {
      check_vertex_letter(f.coset_letters[h], "coset");
    }
    if (f.K < 1) issue("frame of " + ed.name + " has K < 1");
    if (f.coset_mul.size() != f.coset_count() ||
        f.conj.size() != f.coset_count()) {
      issue("frame of " + ed.name + " has inconsistent table sizes");
      continue;
    }
    for (std::uint32_t h = 0; h < f.coset_count(); ++h) {
      if (f.coset_mul[h].size() != f.coset_count()) {
        issue("frame of " + ed.name + " has a ragged coset table");
        continue;
      }
      if (!(f.coset_mul[0][h] == EdgeNormalForm{0, 0, h}) ||
          !(f.coset_mul[h][0] == EdgeNormalForm{0, 0, h})) {
        issue("frame of " + ed.name + ": identity coset row is not neutral");
      }
    }
    if (!(f.conj[0] == EdgeNormalForm{0, 0, 0})) {
      issue("frame of " + ed.name + ": conjugate of identity coset not identity");
    }

    const EdgeId r = ed.reverse;
    if (r == kNoEdge || !frames_.at(r).has_value()) {
      issue("frame of " + ed.name + " has no paired frame");
      continue;
    }
    const EdgeFrame& rf = *frames_[r];
    if (rf.coset_count() != f.coset_count()) {
      issue("frames of " + ed.name + " and its reverse disagree on cosets");
      continue;
    }
    // Conjugating across the edge and back must undo itself.
    for (std::uint32_t h = 0; h < f.coset_count(); ++h) {
      const EdgeNormalForm& fwd = f.conj[h];
      const EdgeNormalForm& back = rf.conj[fwd.h];
      if (!(back == EdgeNormalForm{-fwd.l, -fwd.k, h})) {
        issue("conjugation tables of " + ed.name +
              " and its reverse do not compose to the identity");
      }
    }
  }

  // Edges sharing a head vertex share the central letter.
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (!frames_[e].has_value()) continue;
    for (EdgeId e2 = e + 1; e2 < edges_.size(); ++e2) {
      if (!frames_[e2].has_value()) continue;
      if (edges_[e].to == edges_[e2].to &&
          frames_[e]->c_letter != frames_[e2]->c_letter) {
        issue("edges " + edges_[e].name + " and " + edges_[e2].name +
              " share a vertex but not the central letter");
      }
    }
  }

  if (finalized_ && any_frame && all_frames) {
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      if (edges_[e].dummy || memberships_[e]) continue;
      issue("edge " + edges_[e].name +
            " has no membership algorithm (vertex oracle is not a central "
            "extension or no automaton is available)");
    }
  }

  return rep;
}

ValidationReport validate_schema(const GroupSchema& schema) {
  return schema.validate();
}

}  // namespace gog
