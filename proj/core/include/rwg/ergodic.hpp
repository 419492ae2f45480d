#pragma once

#include <optional>
#include <string>

#include "rwg/group.hpp"

namespace rwg {

/// Outcome of the ergodicity criterion for a support set.
///
/// When the walk is not ergodic exactly one witness is populated:
///  - `subgroup`: the proper subgroup <support> that contains the support, or
///  - `normal_subgroup` + `coset`: a proper normal subgroup H and the coset
///    H x containing the support (the walk is periodic with `period` classes).
/// When ergodic, `power` is the least m with every entry of P^m positive.
struct ErgodicityReport {
  bool ergodic = false;
  std::size_t period = 0;
  std::optional<SupportSet> subgroup;
  std::optional<SupportSet> normal_subgroup;
  std::optional<SupportSet> coset;
  std::optional<std::size_t> power;
  /// Set when the matrix-power route ran (|G| <= kMatrixErgodicLimit).
  std::optional<bool> matrix_test;

  std::string describe(const Group& g) const;
};

inline constexpr std::size_t kMatrixErgodicLimit = 200;

/// Cayley-digraph test: generation plus gcd of closed-walk lengths through e.
ErgodicityReport digraph_ergodicity(const Group& g, const SupportSet& support);

/// Boolean matrix test: is some power P^m, m <= |G|^2, strictly positive?
bool matrix_ergodicity(const Group& g, const SupportSet& support);

/// Runs the digraph test, and the matrix test when |G| <= 200. Throws
/// ErrorCode::kNumeric if the two routes disagree.
ErgodicityReport is_ergodic(const Group& g, const SupportSet& support);

}  // namespace rwg
