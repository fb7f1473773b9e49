#pragma once

#include <string>
#include <vector>

#include "complicial/twocat.hpp"

namespace complicial {

// The walking chain [m] = {0 < 1 < ... < m} as a locally discrete 2-category.
// m = -1 gives the empty 2-category.
FiniteTwoCategory chain(int m);
// The free isomorphism f: x ⇄ y: g as a locally discrete 2-category.
FiniteTwoCategory free_isomorphism();
// Suspension of the free isomorphism: α: f ⇄ g: β in hom(x, y).
FiniteTwoCategory suspended_isomorphism();
// Suspension of [1]: a single non-invertible 2-cell.
FiniteTwoCategory suspended_arrow();
// Suspension of the parallel pair u, v: a ⇉ b.
FiniteTwoCategory free_parallel_pair();
// The 2-simplex with its top 2-cell inverted.
FiniteTwoCategory inverted_triangle();
// One object, one 1-cell, 2-cells {1, σ} with σ∘σ = 1.
FiniteTwoCategory z2_two_cell();

struct NamedCategory {
  std::string name;
  std::string description;
  FiniteTwoCategory category;
};

// Every bundled example.
const std::vector<NamedCategory>& standard_examples();
// The ten categories exercised by the test and acceptance suites.
std::vector<NamedCategory> test_catalog();
// Throws InputError for an unknown name.
const FiniteTwoCategory& example(const std::string& name);

// A 2-category presented by normal forms and a 2-cell existence oracle.
class EffectiveTwoCategory {
 public:
  struct Generator {
    std::string name;
    Id src;
    Id tgt;
  };

  virtual ~EffectiveTwoCategory() = default;
  virtual std::vector<std::string> objects() const = 0;
  virtual std::vector<Generator> generators() const = 0;
  // Normal form of a composable word; throws InputError if not composable.
  virtual Word normalize(const Word& w) const = 0;
  // g∘f on normal forms.
  Word compose(const Word& g, const Word& f) const;
  // Normal forms of 1-cells x → y with at most max_length letters.
  virtual std::vector<Word> one_cells(Id x, Id y, std::size_t max_length) const = 0;
  virtual bool has_two_cell(const Word& a, const Word& b) const = 0;
  virtual bool two_cell_unique(const Word& a, const Word& b) const = 0;
  std::string render(const Word& w) const;
};

// The free adjoint equivalence: objects x, y; generators f: x → y, g: y → x.
// 1-cells are alternating words and every hom-category is contractible.
class FreeAdjointEquivalence final : public EffectiveTwoCategory {
 public:
  static constexpr Id kX = 0, kY = 1, kF = 0, kG = 1;
  std::vector<std::string> objects() const override { return {"x", "y"}; }
  std::vector<Generator> generators() const override { return {{"f", kX, kY}, {"g", kY, kX}}; }
  Word normalize(const Word& w) const override;
  std::vector<Word> one_cells(Id x, Id y, std::size_t max_length) const override;
  bool has_two_cell(const Word& a, const Word& b) const override;
  bool two_cell_unique(const Word& a, const Word& b) const override;
};

}  // namespace complicial
