#include "gog/derivation.hpp"

#include <algorithm>
#include <limits>

namespace gog {

namespace {

// Assembles the output word left to right. The last piece is the only
// mutable position: flushes extend it, merges drop it.
struct Builder {
  NormalWord a;
  bool record = false;
  DerivationTrace trace;

  Builder(EdgeId t0, bool record_) : record(record_) {
    a.edges.push_back(t0);
    if (record) trace.split_sequence.push_back(0);
  }

  void append_unchanged(const Word& u, std::int64_t len, EdgeId t,
                        std::size_t k) {
    a.pieces.push_back(u);
    a.lengths.push_back(len);
    a.edges.push_back(t);
    if (record) {
      trace.split_sequence.push_back(k);
      trace.changed.push_back(false);
    }
  }

  void pop_edge() { a.edges.pop_back(); }

  void flush(const Word& wcur_word, std::int64_t wcur_len, const Word& u,
             std::int64_t len, EdgeId t, std::size_t k) {
    Word& back = a.pieces.back();
    back.insert(back.end(), wcur_word.begin(), wcur_word.end());
    back.insert(back.end(), u.begin(), u.end());
    a.lengths.back() = checked_add(a.lengths.back(), checked_add(wcur_len, len));
    a.edges.push_back(t);
    if (record) {
      trace.split_sequence.back() = k;
      trace.changed.back() = true;
    }
  }

  std::int64_t pop_piece_edge() {
    std::int64_t len = a.lengths.back();
    a.pieces.pop_back();
    a.lengths.pop_back();
    a.edges.pop_back();
    if (record) {
      trace.split_sequence.pop_back();
      trace.changed.pop_back();
    }
    return len;
  }

  const Word& last_piece() const { return a.pieces.back(); }
  std::int64_t last_length() const { return a.lengths.back(); }
  EdgeId last_edge() const { return a.edges.back(); }
};

void check_derivation_output(const GroupSchema& schema, const NormalWord& in,
                             const NormalWord& out, std::int64_t K) {
  if (out.derived_total() != in.derived_total()) {
    throw InvariantError("derived length ledger changed across a derivation");
  }
  for (std::size_t i = 1; i <= out.path_length(); ++i) {
    if (static_cast<std::int64_t>(out.piece(i).size()) > K * out.length(i)) {
      throw InvariantError("sprawling piece after a derivation");
    }
  }
  check_normal_word(schema, out);
}

}  // namespace

DeriveResult middle_derive_trivial_edges(const GroupSchema& schema,
                                         const NormalWord& w,
                                         ChargeMeter& meter,
                                         const EngineOptions& opts) {
  const std::size_t n = w.path_length();
  Builder b(w.edges.front(), opts.record_trace);
  DeriveStats stats;

  std::size_t i = 0;
  for (;;) {
    ++i;
    if (i == n + 1) break;

    auto verdict = is_reducible(schema, w, i, meter);
    if (!verdict.reducible) {
      b.append_unchanged(w.piece(i), w.length(i), w.right_edge(i), i);
      continue;
    }

    ++stats.reductions;
    if (opts.check_invariants && w.length(i) < opts.min_reducible_length) {
      throw InvariantError("reduced piece below the doubling floor");
    }
    const std::size_t i_start = i;
    std::int64_t c = w.length(i);
    std::int64_t wcur_len = w.length(i);
    if (opts.record_trace) {
      b.trace.reduction_starts.push_back(i_start);
      b.trace.counter_starts.push_back(c);
    }
    b.pop_edge();

    for (;;) {
      ++i;
      if (i > n) throw InvariantError("inner step ran past the last piece");
      const std::int64_t cdif =
          std::min(w.length(i) + b.last_length(), c + 1);
      c -= cdif;
      if (c < 0) {
        b.flush({}, wcur_len, w.piece(i), w.length(i), w.right_edge(i), i);
        ++stats.flushes;
        if (opts.record_trace) b.trace.capped.emplace_back(i_start, i);
        break;
      }
      bool mergeable = false;
      if (b.last_edge() == schema.reverse(w.right_edge(i))) {
        Word cand = concat(b.last_piece(), w.piece(i));
        VertexId v = schema.edge(w.right_edge(i)).from;
        mergeable = schema.oracle(v).is_trivial(cand, meter);
      }
      if (mergeable) {
        ++stats.fast_merges;
        wcur_len =
            checked_add(wcur_len, checked_add(b.pop_piece_edge(), w.length(i)));
      } else {
        b.flush({}, wcur_len, w.piece(i), w.length(i), w.right_edge(i), i);
        ++stats.flushes;
        break;
      }
    }
  }

  DeriveResult out;
  out.word = std::move(b.a);
  out.trivial_derivation = stats.reductions == 0;
  out.stats = stats;
  if (opts.record_trace) out.trace = std::move(b.trace);
  if (opts.check_invariants) {
    check_derivation_output(schema, w, out.word, 1);
  }
  return out;
}

DeriveResult middle_derive_admissible(const GroupSchema& schema,
                                      const NormalWord& w, ChargeMeter& meter,
                                      const EngineOptions& opts) {
  if (!schema.admissible()) {
    throw SchemaError("admissible engine requires frames on every edge");
  }
  const std::size_t n = w.path_length();
  const std::int64_t K = schema.sprawl_constant();
  Builder b(w.edges.front(), opts.record_trace);
  DeriveStats stats;

  std::size_t i = 0;
  for (;;) {
    ++i;
    if (i == n + 1) break;

    auto verdict = is_reducible(schema, w, i, meter);
    if (!verdict.reducible) {
      b.append_unchanged(w.piece(i), w.length(i), w.right_edge(i), i);
      continue;
    }

    ++stats.reductions;
    if (opts.check_invariants && w.length(i) < opts.min_reducible_length) {
      throw InvariantError("reduced piece below the doubling floor");
    }
    const std::size_t i_start = i;
    std::int64_t c = w.length(i);
    std::int64_t wcur_len = w.length(i);
    if (opts.record_trace) {
      b.trace.reduction_starts.push_back(i_start);
      b.trace.counter_starts.push_back(c);
    }

    // The running reduction t_a u_i t_a^-1, as a normal form on the edge to
    // the right of the reduced piece.
    const EdgeFrame* left_frame = schema.frame(w.left_edge(i));
    EdgeNormalForm wcur = enf_conjugate_across(*left_frame, *verdict.witness);
    EdgeId wcur_edge = schema.reverse(w.left_edge(i));
    b.pop_edge();

    for (;;) {
      ++i;
      if (i > n) throw InvariantError("inner step ran past the last piece");
      const EdgeId right = w.right_edge(i);
      if (opts.check_invariants && wcur_edge != w.left_edge(i)) {
        throw InvariantError("running reduction sits on the wrong edge");
      }
      const EdgeFrame* gamma = schema.frame(wcur_edge);
      const std::int64_t cdif =
          std::min(w.length(i) + b.last_length(), c + 1);
      c -= cdif;

      auto flush_wcur = [&]() {
        Word wcur_word = enf_to_word(*gamma, wcur);
        if (opts.check_invariants &&
            static_cast<std::int64_t>(wcur_word.size()) > K * wcur_len) {
          throw InvariantError("running reduction word outgrew its ledger");
        }
        b.flush(wcur_word, wcur_len, w.piece(i), w.length(i), right, i);
        ++stats.flushes;
      };

      if (c < 0) {
        flush_wcur();
        if (opts.record_trace) b.trace.capped.emplace_back(i_start, i);
        break;
      }
      if (b.last_edge() != schema.reverse(right)) {
        flush_wcur();
        break;
      }

      const EdgeId beta = b.last_edge();
      const EdgeFrame* beta_frame = schema.frame(beta);
      const EdgeMembership* mem = schema.membership(beta);
      if (mem == nullptr) {
        throw SchemaError("edge lacks a membership algorithm: " +
                          schema.edge(beta).name);
      }

      bool merged = false;
      bool via_fast_path = false;
      EdgeNormalForm next{};

      if (w.left_edge(i) == schema.reverse(right)) {
        // Fast path: the source flanks cancel, so both neighbours can be
        // folded entirely inside one edge group.
        auto ma = mem->member(b.last_piece(), meter);
        if (ma.has_value()) {
          auto mu = mem->member(w.piece(i), meter);
          if (mu.has_value()) {
            EdgeNormalForm all = enf_multiply(
                *beta_frame, enf_multiply(*beta_frame, *ma, wcur), *mu);
            next = enf_conjugate_across(*beta_frame, all);
            merged = true;
            via_fast_path = true;
            if (opts.check_invariants) {
              // The probe route must agree with the folded route.
              Word probe = b.last_piece();
              Word mid = enf_to_word(*gamma, EdgeNormalForm{0, wcur.l, wcur.h});
              probe.insert(probe.end(), mid.begin(), mid.end());
              probe.insert(probe.end(), w.piece(i).begin(), w.piece(i).end());
              ChargeMeter scratch;
              auto cross = mem->member(probe, scratch);
              if (!cross.has_value() ||
                  !(enf_conjugate_across(
                        *beta_frame,
                        EdgeNormalForm{checked_add(cross->k, wcur.k), cross->l,
                                       cross->h}) == next)) {
                throw InvariantError(
                    "fast path and probe disagree on the running reduction");
              }
            }
          }
        }
      }
      if (!merged) {
        // Central-free probe: the c-power of the running reduction commutes
        // and stays central, so membership only needs the o-power and coset.
        Word probe = b.last_piece();
        Word mid = enf_to_word(*gamma, EdgeNormalForm{0, wcur.l, wcur.h});
        probe.insert(probe.end(), mid.begin(), mid.end());
        probe.insert(probe.end(), w.piece(i).begin(), w.piece(i).end());
        auto m = mem->member(probe, meter);
        if (m.has_value()) {
          EdgeNormalForm g{checked_add(m->k, wcur.k), m->l, m->h};
          next = enf_conjugate_across(*beta_frame, g);
          merged = true;
        }
      }

      if (merged) {
        if (via_fast_path) {
          ++stats.fast_merges;
        } else {
          ++stats.probe_merges;
        }
        wcur = next;
        wcur_edge = schema.reverse(beta);
        wcur_len =
            checked_add(wcur_len, checked_add(b.pop_piece_edge(), w.length(i)));
      } else {
        flush_wcur();
        break;
      }
    }
  }

  DeriveResult out;
  out.word = std::move(b.a);
  out.trivial_derivation = stats.reductions == 0;
  out.stats = stats;
  if (opts.record_trace) out.trace = std::move(b.trace);
  if (opts.check_invariants) {
    check_derivation_output(schema, w, out.word, K);
  }
  return out;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t p = 0;
  std::size_t v = 1;
  while (v < n) {
    v <<= 1;
    ++p;
  }
  return p;
}

namespace {

bool only_dummy_letters(const GroupSchema& schema, WordView w) {
  for (GenId g : w) {
    const GeneratorInfo& gi = schema.alphabet().info(g);
    if (gi.kind != GenKind::EdgeLetter || !schema.edge(gi.edge).dummy) {
      return false;
    }
  }
  return true;
}

}  // namespace

SolveReport solve(const GroupSchema& schema, WordView w, EngineKind engine,
                  const SolveOptions& opts) {
  if (!schema.finalized()) throw SchemaError("schema not finalized");
  const bool adm = schema.admissible();
  if (engine == EngineKind::Admissible && !adm) {
    throw SchemaError("admissible engine on a non-admissible schema");
  }
  if (engine == EngineKind::TrivialEdges && adm) {
    throw SchemaError("trivial-edges engine on an admissible schema");
  }

  SolveReport rep;
  if (w.empty() || only_dummy_letters(schema, w)) {
    rep.verdict = Verdict::Trivial;
    return rep;
  }

  ChargeMeter meter;
  NormalWord cur = normalize(schema, w);
  rep.normalized_length = cur.letter_length();
  const std::int64_t ledger = cur.derived_total();
  const std::int64_t K =
      engine == EngineKind::Admissible ? schema.sprawl_constant() : 1;
  const std::size_t max_iters = ceil_log2(rep.normalized_length);

  for (;;) {
    if (cur.path_length() == 1) {
      rep.verdict = shortened_verdict(schema, cur, meter);
      break;
    }
    EngineOptions eo;
    eo.check_invariants = opts.check_invariants;
    eo.min_reducible_length =
        rep.iterations < 62 ? (std::int64_t{1} << rep.iterations)
                            : std::numeric_limits<std::int64_t>::max();
    DeriveResult res =
        engine == EngineKind::TrivialEdges
            ? middle_derive_trivial_edges(schema, cur, meter, eo)
            : middle_derive_admissible(schema, cur, meter, eo);
    ++rep.iterations;

    IterationStats st;
    st.derived_total = res.word.derived_total();
    st.path_length = res.word.path_length();
    for (std::size_t i = 1; i <= res.word.path_length(); ++i) {
      const auto len = static_cast<double>(res.word.length(i));
      const auto sz = static_cast<double>(res.word.piece(i).size());
      st.max_ratio = std::max(st.max_ratio, len > 0 ? sz / len : 0.0);
      if (static_cast<std::int64_t>(res.word.piece(i).size()) >
          K * res.word.length(i)) {
        st.non_sprawling = false;
      }
    }
    rep.invariant_log.push_back(st);

    if (opts.check_invariants) {
      if (st.derived_total != ledger) {
        throw InvariantError("derived length ledger drifted");
      }
      if (!st.non_sprawling) throw InvariantError("sprawling piece");
      if (rep.iterations > max_iters) {
        throw InvariantError("iteration bound exceeded");
      }
    }
    if (res.trivial_derivation) {
      rep.verdict = Verdict::NonTrivial;
      break;
    }
    cur = std::move(res.word);
  }
  rep.charge = meter.total;
  return rep;
}

Verdict reference_reduce_verdict(const GroupSchema& schema, WordView w,
                                 ChargeMeter& meter) {
  if (w.empty() || only_dummy_letters(schema, w)) return Verdict::Trivial;
  NormalWord cur = normalize(schema, w);

  // Corners are never reducible, so a reducible position always has both
  // neighbours. After a reduction only the merged piece needs rechecking.
  std::size_t i = 1;
  while (i <= cur.path_length()) {
    auto verdict = is_reducible(schema, cur, i, meter);
    if (!verdict.reducible) {
      ++i;
      continue;
    }
    Word middle;
    if (verdict.witness.has_value()) {
      const EdgeFrame* f = schema.frame(cur.left_edge(i));
      EdgeNormalForm conj = enf_conjugate_across(*f, *verdict.witness);
      middle = enf_to_word(*schema.frame(f->reverse_edge), conj);
    }
    // Replace u_{i-1} t_{i-1} u_i t_i u_{i+1} by the single merged piece.
    Word& target = cur.pieces[i - 2];
    target.insert(target.end(), middle.begin(), middle.end());
    target.insert(target.end(), cur.pieces[i].begin(), cur.pieces[i].end());
    cur.lengths[i - 2] =
        checked_add(cur.lengths[i - 2],
                    checked_add(cur.lengths[i - 1], cur.lengths[i]));
    cur.pieces.erase(cur.pieces.begin() + (i - 1), cur.pieces.begin() + (i + 1));
    cur.lengths.erase(cur.lengths.begin() + (i - 1),
                      cur.lengths.begin() + (i + 1));
    cur.edges.erase(cur.edges.begin() + (i - 1), cur.edges.begin() + (i + 1));
    i = i >= 2 ? i - 1 : 1;
  }
  return shortened_verdict(schema, cur, meter);
}

}  // namespace gog
