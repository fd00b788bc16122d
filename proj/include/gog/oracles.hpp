#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gog/words.hpp"

namespace gog {

// Machine-independent cost meter. Every triviality or membership query
// reports the length of its input here, so benchmark columns measure oracle
// work rather than wall time.
struct ChargeMeter {
  std::int64_t total = 0;
  std::int64_t calls = 0;

  void charge(std::size_t n) {
    total += static_cast<std::int64_t>(n);
    ++calls;
  }
};

enum class CostClass { Linear, Convex };

class CentralExtensionOracle;

// Triviality oracle for one vertex group.
class VertexOracle {
 public:
  virtual ~VertexOracle() = default;

  virtual bool is_trivial(WordView w, ChargeMeter& meter) const = 0;

  // Canonical representative of the element, when the oracle knows one.
  virtual std::optional<Word> reduce(WordView) const { return std::nullopt; }

  virtual CostClass cost_class() const { return CostClass::Linear; }

  // Non-null when this oracle is a central extension of a hyperbolic group;
  // the admissible engine needs that structure for edge membership.
  virtual const CentralExtensionOracle* as_central_extension() const {
    return nullptr;
  }
};

// Free group on an explicit symmetric letter set; decides by stack
// cancellation in one pass.
class FreeOracle final : public VertexOracle {
 public:
  FreeOracle(const Alphabet& alphabet, std::vector<GenId> positive_letters);

  bool is_trivial(WordView w, ChargeMeter& meter) const override;
  std::optional<Word> reduce(WordView w) const override;

  Word free_reduce(WordView w) const;
  const std::vector<GenId>& positive_letters() const { return letters_; }

 private:
  const Alphabet* alphabet_;
  std::vector<GenId> letters_;
};

// Free abelian group; a word is trivial iff every coordinate sums to zero.
class AbelianOracle final : public VertexOracle {
 public:
  AbelianOracle(const Alphabet& alphabet, std::vector<GenId> positive_letters);

  bool is_trivial(WordView w, ChargeMeter& meter) const override;
  std::optional<Word> reduce(WordView w) const override;

  const std::vector<GenId>& positive_letters() const { return letters_; }

 private:
  std::vector<std::int64_t> exponents(WordView w) const;

  const Alphabet* alphabet_;
  std::vector<GenId> letters_;
  std::unordered_map<GenId, std::pair<std::size_t, int>> coord_;
};

// Direct product over disjoint alphabets: trivial iff both projections are.
class ProductOracle final : public VertexOracle {
 public:
  ProductOracle(std::shared_ptr<const VertexOracle> left,
                std::vector<GenId> left_letters,
                std::shared_ptr<const VertexOracle> right,
                std::vector<GenId> right_letters);

  bool is_trivial(WordView w, ChargeMeter& meter) const override;
  std::optional<Word> reduce(WordView w) const override;

 private:
  std::pair<Word, Word> split(WordView w) const;

  std::shared_ptr<const VertexOracle> left_, right_;
  std::unordered_map<GenId, bool> is_left_;
};

// --- Finite index transfer -------------------------------------------------

// Right coset table for a finite index subgroup H <= G. Cosets are indexed
// with 0 as the coset H itself. Each (coset, ambient letter) cell holds the
// next coset and the subgroup word for the corresponding Schreier generator.
struct CosetTable {
  std::vector<std::string> coset_names;  // [0] is the identity coset

  struct Cell {
    std::uint32_t next = 0;
    Word inner;  // expression of the Schreier generator in the inner alphabet
  };

  std::unordered_map<std::uint64_t, Cell> cells;

  static std::uint64_t key(std::uint32_t coset, GenId g) {
    return (static_cast<std::uint64_t>(coset) << 32) | g;
  }

  void set(std::uint32_t coset, GenId g, std::uint32_t next, Word inner);
  const Cell& at(std::uint32_t coset, GenId g) const;
  bool defined(std::uint32_t coset, GenId g) const;
};

// One Schreier generator, identified by the table cell that produced it.
struct SchreierLetter {
  std::uint32_t coset;
  GenId gen;
};

struct MembershipResult {
  bool in_subgroup = false;
  std::vector<SchreierLetter> schreier_word;  // one letter per input letter
  Word inner_word;                            // same element over the inner alphabet
};

// Single left-to-right pass; tracks the coset of every prefix and emits one
// Schreier letter per input letter. Membership holds iff the walk returns to
// the identity coset.
MembershipResult finite_index_rewrite(const CosetTable& table, WordView w);

// Ambient-group oracle assembled from a coset table and a subgroup oracle;
// inherits the inner oracle's cost class.
class FiniteIndexOracle final : public VertexOracle {
 public:
  FiniteIndexOracle(CosetTable table, std::shared_ptr<const VertexOracle> inner);

  bool is_trivial(WordView w, ChargeMeter& meter) const override;
  CostClass cost_class() const override { return inner_->cost_class(); }

  const CosetTable& table() const { return table_; }

 private:
  CosetTable table_;
  std::shared_ptr<const VertexOracle> inner_;
};

}  // namespace gog
