#pragma once

#include <optional>
#include <vector>

#include "rwg/measure.hpp"
#include "rwg/spectral.hpp"

namespace rwg {

/// Factors in written order: {f0, f1, ..., fm} means f0 * f1 * ... * fm,
/// so the last factor is applied first.
struct FactorizationCheck {
  bool exact = false;       // deviation <= 1e-12
  double deviation = 0.0;   // l-inf distance of the product to uniform
  Measure product;
};
FactorizationCheck check_factorization(const std::vector<Measure>& factors);

/// Urban's transposition factors nu_{n-1}, ..., nu_1 in written order.
std::vector<Measure> urban_factors(int n);

/// nu_p(1) = p, nu_p(-1) = 1-p on the n-cycle.
struct CirclePq {
  StochasticOperator op;
  InvertibilityReport invertibility;
};
CirclePq circle_pq_operator(int n, double p);

/// Solves u P = target: LU when P is invertible, otherwise a rank-revealing
/// least-squares solve with the shared rank threshold.
struct ChargeSolveResult {
  bool exists = false;         // residual <= 1e-9
  bool unique = false;         // P numerically invertible
  double residual = 0.0;       // ||u P - target||_inf
  std::optional<Measure> solution;
  std::size_t negative_entries = 0;
  double min_entry = 0.0;
};
ChargeSolveResult charge_preimage(const StochasticOperator& op, const Measure& target);

/// Evidence that nu^{*k} never equals uniform, for symmetric nu != uniform.
struct NoPowerCertificate {
  bool certified = false;       // both checks below hold
  bool spectral = false;        // some weighted eigenvalue is nonzero
  bool direct = false;          // nu^{*k} != pi for every k checked
  std::size_t checked_up_to = 0;
  double witness_eigenvalue = 0.0;
  double witness_weight = 0.0;
};
/// The direct check stops where the distance falls below float resolution.
NoPowerCertificate no_finite_power_reaches_pi(const Measure& nu, std::size_t k_budget = 500);

}  // namespace rwg
