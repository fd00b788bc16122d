#include "gog/oracles.hpp"

#include <algorithm>

namespace gog {

// --- FreeOracle --------------------------------------------------------------

FreeOracle::FreeOracle(const Alphabet& alphabet,
                       std::vector<GenId> positive_letters)
    : alphabet_(&alphabet), letters_(std::move(positive_letters)) {
  for (GenId g : letters_) {
    if (alphabet_->inverse(g) == kNoGen) {
      throw WordError("free oracle letter lacks an inverse: " +
                      alphabet_->spell(g));
    }
  }
}

Word FreeOracle::free_reduce(WordView w) const {
  Word stack;
  stack.reserve(w.size());
  for (GenId g : w) {
    if (!stack.empty() && stack.back() == alphabet_->inverse(g)) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return stack;
}

bool FreeOracle::is_trivial(WordView w, ChargeMeter& meter) const {
  meter.charge(w.size());
  return free_reduce(w).empty();
}

std::optional<Word> FreeOracle::reduce(WordView w) const {
  return free_reduce(w);
}

// --- AbelianOracle -----------------------------------------------------------

AbelianOracle::AbelianOracle(const Alphabet& alphabet,
                             std::vector<GenId> positive_letters)
    : alphabet_(&alphabet), letters_(std::move(positive_letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    GenId g = letters_[i];
    GenId inv = alphabet_->inverse(g);
    if (inv == kNoGen) {
      throw WordError("abelian oracle letter lacks an inverse: " +
                      alphabet_->spell(g));
    }
    coord_.emplace(g, std::make_pair(i, +1));
    coord_.emplace(inv, std::make_pair(i, -1));
  }
}

std::vector<std::int64_t> AbelianOracle::exponents(WordView w) const {
  std::vector<std::int64_t> sums(letters_.size(), 0);
  for (GenId g : w) {
    auto it = coord_.find(g);
    if (it == coord_.end()) {
      throw WordError("letter outside abelian alphabet: " +
                      alphabet_->spell(g));
    }
    sums[it->second.first] += it->second.second;
  }
  return sums;
}

bool AbelianOracle::is_trivial(WordView w, ChargeMeter& meter) const {
  meter.charge(w.size());
  auto sums = exponents(w);
  return std::all_of(sums.begin(), sums.end(),
                     [](std::int64_t s) { return s == 0; });
}

std::optional<Word> AbelianOracle::reduce(WordView w) const {
  auto sums = exponents(w);
  Word out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    GenId g = sums[i] >= 0 ? letters_[i] : alphabet_->inverse(letters_[i]);
    for (std::int64_t j = 0; j < std::abs(sums[i]); ++j) out.push_back(g);
  }
  return out;
}

// --- ProductOracle -----------------------------------------------------------

ProductOracle::ProductOracle(std::shared_ptr<const VertexOracle> left,
                             std::vector<GenId> left_letters,
                             std::shared_ptr<const VertexOracle> right,
                             std::vector<GenId> right_letters)
    : left_(std::move(left)), right_(std::move(right)) {
  for (GenId g : left_letters) is_left_.emplace(g, true);
  for (GenId g : right_letters) {
    if (is_left_.count(g)) {
      throw WordError("product oracle factors must have disjoint alphabets");
    }
    is_left_.emplace(g, false);
  }
}

std::pair<Word, Word> ProductOracle::split(WordView w) const {
  Word a, b;
  for (GenId g : w) {
    auto it = is_left_.find(g);
    if (it == is_left_.end()) {
      throw WordError("letter outside product alphabet");
    }
    (it->second ? a : b).push_back(g);
  }
  return {std::move(a), std::move(b)};
}

bool ProductOracle::is_trivial(WordView w, ChargeMeter& meter) const {
  meter.charge(w.size());
  auto [a, b] = split(w);
  ChargeMeter inner;  // factor charges are covered by this oracle's own charge
  return left_->is_trivial(a, inner) && right_->is_trivial(b, inner);
}

std::optional<Word> ProductOracle::reduce(WordView w) const {
  auto [a, b] = split(w);
  auto ra = left_->reduce(a);
  auto rb = right_->reduce(b);
  if (!ra || !rb) return std::nullopt;
  return concat(*ra, *rb);
}

// --- CosetTable --------------------------------------------------------------

void CosetTable::set(std::uint32_t coset, GenId g, std::uint32_t next,
                     Word inner) {
  cells[key(coset, g)] = Cell{next, std::move(inner)};
}

bool CosetTable::defined(std::uint32_t coset, GenId g) const {
  return cells.count(key(coset, g)) != 0;
}

const CosetTable::Cell& CosetTable::at(std::uint32_t coset, GenId g) const {
  auto it = cells.find(key(coset, g));
  if (it == cells.end()) {
    throw WordError("coset table has no transition for (" +
                    std::to_string(coset) + ", letter " + std::to_string(g) +
                    ")");
  }
  return it->second;
}

MembershipResult finite_index_rewrite(const CosetTable& table, WordView w) {
  MembershipResult out;
  std::uint32_t coset = 0;
  for (GenId g : w) {
    const auto& cell = table.at(coset, g);
    out.schreier_word.push_back(SchreierLetter{coset, g});
    out.inner_word.insert(out.inner_word.end(), cell.inner.begin(),
                          cell.inner.end());
    coset = cell.next;
  }
  out.in_subgroup = (coset == 0);
  if (!out.in_subgroup) {
    out.schreier_word.clear();
    out.inner_word.clear();
  }
  return out;
}

FiniteIndexOracle::FiniteIndexOracle(CosetTable table,
                                     std::shared_ptr<const VertexOracle> inner)
    : table_(std::move(table)), inner_(std::move(inner)) {}

bool FiniteIndexOracle::is_trivial(WordView w, ChargeMeter& meter) const {
  meter.charge(w.size());
  auto res = finite_index_rewrite(table_, w);
  if (!res.in_subgroup) return false;
  ChargeMeter inner;
  return inner_->is_trivial(res.inner_word, inner);
}

}  // namespace gog
