#pragma once

#include <complex>
#include <functional>
#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "rwg/measure.hpp"

namespace rwg {

/// Dense operators are refused above this order.
inline constexpr std::size_t kDenseOperatorLimit = 4096;

/// The |G| x |G| matrix p(s,t) = nu(t s^-1) of a walk driven by nu, acting on
/// row vectors: mu P = nu * mu.
class StochasticOperator {
 public:
  /// Requires a probability measure.
  static StochasticOperator from_measure(const Measure& nu);
  /// Same construction for a charge; the result is a signed operator.
  static StochasticOperator from_charge(const Measure& u);
  /// Wraps an arbitrary matrix (e.g. the uniform projection U).
  static StochasticOperator from_matrix(GroupPtr group, Eigen::MatrixXd matrix);

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }

  bool is_symmetric(double tolerance = 0.0) const;
  /// mu P as a measure of the same kind as mu.
  Measure apply(const Measure& mu) const;
  /// delta^e P^k.
  Measure identity_orbit(std::size_t k) const;
  /// Max deviation of row sums and column sums from 1.
  double stochastic_defect() const;

 private:
  StochasticOperator(GroupPtr group, Eigen::MatrixXd matrix)
      : group_(std::move(group)), matrix_(std::move(matrix)) {}

  GroupPtr group_;
  Eigen::MatrixXd matrix_;
};

struct Spectrum {
  /// Sorted by descending real part (then imaginary part).
  std::vector<std::complex<double>> eigenvalues;
  bool real = false;  // symmetric operator
  double lambda_star = 0.0;
  /// Second largest real eigenvalue (symmetric case; NaN otherwise).
  double lambda_2 = 0.0;
  std::size_t multiplicity_of_one = 0;

  double mean_real() const;
};

/// Eigenvalues of P: self-adjoint solver when symmetric, general complex
/// solver otherwise. Throws ErrorCode::kNumeric on solver failure.
Spectrum spectrum(const StochasticOperator& op, double unit_tolerance = 1e-9);

/// CSV `re,im,abs`.
void write_spectrum_csv(std::ostream& os, const Spectrum& s);
/// Dense CSV of the matrix; refuses orders above `size_limit`.
void write_operator_csv(std::ostream& os, const StochasticOperator& op, std::size_t size_limit);

struct SpectralVariationBounds {
  double exact_l2_squared = 0.0;  // ||nu^{*k} - pi||_2^2 from the eigen expansion
  double upper_bound_lemma = 0.0; // 1/4 sum_{t != 1} v_t(e)^2 lambda_t^{2k}
  double crude = 0.0;             // (|G|-1)/4 lambda_star^{2k}
};

/// Eigenbasis expansion of a symmetric walk, reusable across k.
class SymmetricExpansion {
 public:
  /// Requires a symmetric, ergodic measure.
  explicit SymmetricExpansion(const Measure& nu);

  SpectralVariationBounds bounds(std::size_t k) const;
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  /// Squared weight of delta^e on each eigenvector, |G|-normalized, with the
  /// trivial eigenvector removed; aligned with `eigenvalues()`.
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }

 private:
  std::size_t order_;
  Spectrum spectrum_;
  std::vector<double> eigenvalues_;
  std::vector<double> coefficients_;
};

SpectralVariationBounds spectral_variation_bounds(const Measure& nu, std::size_t k);

struct GershgorinReport {
  double disc_center = 0.0;
  double disc_radius = 0.0;
  double lower_eigenvalue = 0.0;     // -1 + 2 nu(e), valid in the symmetric case
  bool invertible_certificate = false;  // nu(e) > 1/2
};

GershgorinReport gershgorin(const StochasticOperator& op);

/// Lower-bound curve k -> 1/2 ||u||_1 |lambda|^k from a real left eigenvector
/// u of `lambda`, scaled by the largest c with pi + c u >= 0.
class EigenvectorLowerBound {
 public:
  EigenvectorLowerBound(const StochasticOperator& op, double lambda,
                        double match_tolerance = 1e-8);

  double operator()(std::size_t k) const;
  double eigenvalue() const noexcept { return lambda_; }
  double scaled_l1() const noexcept { return scaled_l1_; }
  const Eigen::VectorXd& eigenvector() const noexcept { return vector_; }

 private:
  double lambda_;
  double scaled_l1_;
  Eigen::VectorXd vector_;
};

/// 1 - |Sigma|^k / |G|, floored at zero.
double support_lower_bound(std::size_t sigma_size, std::size_t group_order, std::size_t k);

struct InvertibilityReport {
  bool invertible = false;
  /// Smallest singular value within a factor 10 of the threshold.
  bool borderline = false;
  double smallest_singular_value = 0.0;
  double threshold = 0.0;
  double abs_determinant = 0.0;
  /// Dimension of {u : u P = 0}; u P = pi has a unique solution iff 0.
  std::size_t nullity = 0;
  std::size_t rank = 0;
};

/// Singular-value rank test with threshold 1e-10 |G|.
InvertibilityReport is_invertible(const StochasticOperator& op);

inline double rank_threshold(std::size_t order) { return 1e-10 * static_cast<double>(order); }

}  // namespace rwg
