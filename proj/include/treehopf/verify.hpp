#pragma once

#include "treehopf/hopf.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace treehopf {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Outcome of one family of identities checked over all cases in range.
struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  /// First failing case, if any.
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample; }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  /// One line per check: `PASS name (cases)` or `FAIL name: counterexample`.
  std::string to_string() const;
};

/// Exhaustive check of the bialgebra and Hopf axioms on all forests with at
/// most `max_degree` vertices: coassociativity, counit, grading,
/// multiplicativity, the two sigma conditions, the defining square
/// Delta o lambda = (sigma_1, sigma_2) o Delta^n, and S * id = id * S = u o eps.
/// With symbolic entries a seeded specialization check is added.
VerificationReport verify_bialgebra(const HopfContext& ctx, std::size_t max_degree,
                                    std::uint64_t seed = kDefaultSeed);

/// Same checks for an arbitrary coproduct on basis forests (mutation testing).
VerificationReport verify_bialgebra(const HopfContext& ctx, std::size_t max_degree, const CoproductFn& delta);

/// All forests with at most `max_degree` vertices, by degree then canonical order.
std::vector<Forest> forests_up_to(int n, std::size_t max_degree);

/// All n-tuples of forests whose total vertex count is at most `max_degree`.
std::vector<std::vector<Forest>> forest_tuples(int n, std::size_t max_degree);

} // namespace treehopf
