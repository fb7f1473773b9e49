#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "complicial/search.hpp"
#include "complicial/tdelta.hpp"

namespace complicial {

enum class AnodyneClass { Horn, Thinness, Triviality, Saturation };
inline constexpr std::array<AnodyneClass, 4> kAnodyneClasses = {AnodyneClass::Horn, AnodyneClass::Thinness,
                                                                 AnodyneClass::Triviality, AnodyneClass::Saturation};
std::string class_name(AnodyneClass c);

struct AnodyneExtension {
  AnodyneClass cls = AnodyneClass::Horn;
  int m = -1;  // horn, thinness
  int k = -1;  // horn, thinness
  int l = -2;  // triviality, saturation (-1: no join factor)
  std::string name;
  TDeltaSet source;
  TDeltaSet target;
  TDeltaMap inclusion;
};

// Horn Λᵏ[m] → Δᵏ[m] (1 ≤ m ≤ dim), thinness Δᵏ[m]′ → Δᵏ[m]″ (2 ≤ m ≤ dim),
// triviality Δ[l] → Δ[l]_t (n < l ≤ dim), saturation
// Δ[l]⋆Δ[3]_eq → Δ[l]⋆Δ[3]♯ (-1 ≤ l ≤ dim - 4). Everything is truncated at dim.
std::vector<AnodyneExtension> anodyne_library(int n, int dim);
AnodyneExtension saturation_extension(int l, int dim);
AnodyneExtension thinness_extension(int m, int k, int dim);

enum class LiftStatus { Found, NoLift, BudgetExceeded };

struct LiftResult {
  LiftStatus status = LiftStatus::NoLift;
  std::optional<TDeltaMap> lift;
  std::uint64_t nodes = 0;
};

// Searches for B → X restricting to f along the inclusion. The first lift in
// search order is returned; reverse flips the candidate order.
LiftResult find_lift(const AnodyneExtension& e, const TDeltaSet& x, const TDeltaMap& f, SearchBudget budget = {},
                     bool reverse = false);

struct ExtensionResult {
  std::string name;
  AnodyneClass cls = AnodyneClass::Horn;
  std::uint64_t maps = 0;             // maps A → X examined
  std::uint64_t failures = 0;         // maps with no lift
  std::uint64_t budget_failures = 0;  // maps whose lift search ran out of budget
  bool enumeration_exhausted = true;  // false if listing A → X ran out of budget
  std::optional<TDeltaMap> witness;   // the failing map A → X with the lowest index
  bool passed() const { return failures == 0 && budget_failures == 0 && enumeration_exhausted; }
};

struct ClassTally {
  std::uint64_t extensions = 0;
  std::uint64_t passed = 0;
  std::uint64_t maps = 0;
  std::uint64_t failures = 0;
  std::uint64_t budget_failures = 0;
};

struct FibrancyReport {
  int n = 2;
  int dim = 5;
  std::vector<ExtensionResult> results;
  std::array<ClassTally, 4> tallies{};
  bool passed() const;
  bool budget_exceeded() const;
  const ExtensionResult* first_failure() const;
  const ExtensionResult* find(const std::string& name) const;
};

// Checks one extension against X. threads <= 0 uses the OpenMP default; the
// result does not depend on the thread count.
ExtensionResult check_extension(const AnodyneExtension& e, const TDeltaSet& x, SearchBudget budget = {},
                                int threads = 0);
// Single-threaded reference with the same output.
ExtensionResult check_extension_serial(const AnodyneExtension& e, const TDeltaSet& x, SearchBudget budget = {});

FibrancyReport is_precomplicial(const TDeltaSet& x, int n, int dim, SearchBudget budget = {}, int threads = 0);
FibrancyReport is_precomplicial(const TDeltaSet& x, const std::vector<AnodyneExtension>& library, int n,
                                SearchBudget budget = {}, int threads = 0);
FibrancyReport is_precomplicial_serial(const TDeltaSet& x, const std::vector<AnodyneExtension>& library, int n,
                                       SearchBudget budget = {});

}  // namespace complicial
