#include "rwg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rwg/csv.hpp"
#include "rwg/ergodic.hpp"
#include "rwg/error.hpp"

namespace rwg {

namespace {

Eigen::MatrixXd build_matrix(const Measure& nu) {
  const Group& g = nu.group();
  const std::size_t n = g.order();
  if (n > kDenseOperatorLimit) {
    fail(ErrorCode::kBudget, "dense operator limited to |G| <= " +
                                 std::to_string(kDenseOperatorLimit) + ", got " +
                                 std::to_string(n));
  }
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (Element r = 0; r < n; ++r) {
    const double w = nu[r];
    if (w == 0.0) continue;
    // p(s, t) = nu(t s^-1) with t = r s.
    for (Element s = 0; s < n; ++s) p(s, g.mul(r, s)) = w;
  }
  return p;
}

bool complex_descending(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

}  // namespace

StochasticOperator StochasticOperator::from_measure(const Measure& nu) {
  if (!nu.is_probability()) {
    fail(ErrorCode::kUsage, "stochastic operator needs a probability; use from_charge");
  }
  return StochasticOperator(nu.group_ptr(), build_matrix(nu));
}

StochasticOperator StochasticOperator::from_charge(const Measure& u) {
  return StochasticOperator(u.group_ptr(), build_matrix(u));
}

StochasticOperator StochasticOperator::from_matrix(GroupPtr group, Eigen::MatrixXd matrix) {
  const auto n = static_cast<Eigen::Index>(group->order());
  if (matrix.rows() != n || matrix.cols() != n) {
    fail(ErrorCode::kUsage, "operator matrix does not match the group order");
  }
  return StochasticOperator(std::move(group), std::move(matrix));
}

bool StochasticOperator::is_symmetric(double tolerance) const {
  return (matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff() <= tolerance;
}

Measure StochasticOperator::apply(const Measure& mu) const {
  if (mu.group().descriptor() != group_->descriptor()) {
    fail(ErrorCode::kUsage, "measure and operator live on different groups");
  }
  Eigen::Map<const Eigen::RowVectorXd> row(mu.weights().data(),
                                           static_cast<Eigen::Index>(mu.size()));
  const Eigen::RowVectorXd out = row * matrix_;
  return make_unchecked(group_, std::vector<double>(out.data(), out.data() + out.size()),
                        mu.kind());
}

Measure StochasticOperator::identity_orbit(std::size_t k) const {
  Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(matrix_.rows());
  row(group_->identity()) = 1.0;
  for (std::size_t i = 0; i < k; ++i) row = row * matrix_;
  return make_unchecked(group_, std::vector<double>(row.data(), row.data() + row.size()),
                        MeasureKind::kProbability);
}

double StochasticOperator::stochastic_defect() const {
  const double rows = (matrix_.rowwise().sum().array() - 1.0).abs().maxCoeff();
  const double cols = (matrix_.colwise().sum().array() - 1.0).abs().maxCoeff();
  return std::max(rows, cols);
}

double Spectrum::mean_real() const {
  double sum = 0.0;
  for (const auto& z : eigenvalues) sum += z.real();
  return sum / static_cast<double>(eigenvalues.size());
}

Spectrum spectrum(const StochasticOperator& op, double unit_tolerance) {
  Spectrum out;
  out.real = op.is_symmetric();
  if (out.real) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      fail(ErrorCode::kNumeric, "self-adjoint eigensolver did not converge");
    }
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
      out.eigenvalues.emplace_back(solver.eigenvalues()(i), 0.0);
    }
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(op.matrix(), false);
    if (solver.info() != Eigen::Success) {
      fail(ErrorCode::kNumeric, "general eigensolver did not converge");
    }
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
      out.eigenvalues.push_back(solver.eigenvalues()(i));
    }
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), complex_descending);

  // Drop one copy of the eigenvalue nearest 1 to get lambda_star.
  std::size_t unit_index = 0;
  double nearest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < out.eigenvalues.size(); ++i) {
    const double d = std::abs(out.eigenvalues[i] - 1.0);
    if (d < nearest) {
      nearest = d;
      unit_index = i;
    }
    if (d <= unit_tolerance) ++out.multiplicity_of_one;
  }
  out.lambda_star = 0.0;
  for (std::size_t i = 0; i < out.eigenvalues.size(); ++i) {
    if (i != unit_index) out.lambda_star = std::max(out.lambda_star, std::abs(out.eigenvalues[i]));
  }
  out.lambda_2 = out.real && out.eigenvalues.size() > 1 ? out.eigenvalues[1].real()
                                                        : std::numeric_limits<double>::quiet_NaN();
  return out;
}

void write_spectrum_csv(std::ostream& os, const Spectrum& s) {
  csv::row(os, {"re", "im", "abs"});
  for (const auto& z : s.eigenvalues) {
    csv::row(os, {csv::number(z.real()), csv::number(z.imag()), csv::number(std::abs(z))});
  }
}

void write_operator_csv(std::ostream& os, const StochasticOperator& op, std::size_t size_limit) {
  if (op.size() > size_limit) {
    fail(ErrorCode::kBudget, "operator of order " + std::to_string(op.size()) +
                                 " exceeds the CSV size limit " + std::to_string(size_limit));
  }
  const auto& m = op.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<std::string> cells;
    cells.reserve(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) cells.push_back(csv::number(m(i, j)));
    csv::row(os, cells);
  }
}

SymmetricExpansion::SymmetricExpansion(const Measure& nu) : order_(nu.size()) {
  if (!nu.is_symmetric(1e-15)) {
    fail(ErrorCode::kUsage, "spectral variation bounds need a symmetric measure");
  }
  if (!digraph_ergodicity(nu.group(), nu.support()).ergodic) {
    fail(ErrorCode::kNonErgodic, "spectral variation bounds need an ergodic walk");
  }
  const StochasticOperator op = StochasticOperator::from_measure(nu);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.matrix());
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::kNumeric, "self-adjoint eigensolver did not converge");
  }
  const auto& values = solver.eigenvalues();  // ascending
  const auto& vectors = solver.eigenvectors();
  const Eigen::Index top = values.size() - 1;
  const double n = static_cast<double>(order_);
  for (Eigen::Index t = 0; t < top; ++t) {
    eigenvalues_.push_back(values(t));
    const double v = vectors(static_cast<Eigen::Index>(nu.group().identity()), t);
    coefficients_.push_back(n * v * v);
  }
  spectrum_ = rwg::spectrum(op);
}

SpectralVariationBounds SymmetricExpansion::bounds(std::size_t k) const {
  SpectralVariationBounds b;
  const double two_k = 2.0 * static_cast<double>(k);
  double sum = 0.0;
  for (std::size_t t = 0; t < eigenvalues_.size(); ++t) {
    sum += coefficients_[t] * std::pow(eigenvalues_[t], two_k);
  }
  const double n = static_cast<double>(order_);
  b.exact_l2_squared = sum / n;
  b.upper_bound_lemma = 0.25 * sum;
  b.crude = 0.25 * (n - 1.0) * std::pow(spectrum_.lambda_star, two_k);
  return b;
}

SpectralVariationBounds spectral_variation_bounds(const Measure& nu, std::size_t k) {
  return SymmetricExpansion(nu).bounds(k);
}

GershgorinReport gershgorin(const StochasticOperator& op) {
  const auto& m = op.matrix();
  GershgorinReport r;
  r.disc_center = m(0, 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    r.disc_radius = std::max(r.disc_radius, m.row(i).cwiseAbs().sum() - std::abs(m(i, i)));
  }
  r.lower_eigenvalue = -1.0 + 2.0 * r.disc_center;
  r.invertible_certificate = r.disc_center > 0.5;
  return r;
}

EigenvectorLowerBound::EigenvectorLowerBound(const StochasticOperator& op, double lambda,
                                             double match_tolerance)
    : lambda_(lambda), scaled_l1_(0.0) {
  if (std::abs(lambda - 1.0) <= match_tolerance) {
    fail(ErrorCode::kUsage, "eigenvector lower bound needs an eigenvalue other than 1");
  }
  const Eigen::MatrixXd left = op.matrix().transpose();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(left, true);
  if (solver.info() != Eigen::Success) fail(ErrorCode::kNumeric, "eigensolver did not converge");

  Eigen::Index best = -1;
  double best_gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const auto z = solver.eigenvalues()(i);
    const double gap = std::abs(z - std::complex<double>(lambda, 0.0));
    if (std::abs(z.imag()) <= match_tolerance && gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  if (best < 0 || best_gap > match_tolerance) {
    fail(ErrorCode::kUsage, "no real eigenvalue matches " + csv::number(lambda));
  }
  const Eigen::VectorXcd z = solver.eigenvectors().col(best);
  vector_ = z.real().norm() >= z.imag().norm() ? Eigen::VectorXd(z.real())
                                               : Eigen::VectorXd(z.imag());
  vector_ /= vector_.norm();

  const double pi = 1.0 / static_cast<double>(vector_.size());
  double scale = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < vector_.size(); ++i) {
    if (vector_(i) < 0.0) scale = std::min(scale, pi / -vector_(i));
  }
  if (!std::isfinite(scale)) fail(ErrorCode::kNumeric, "eigenvector has no negative entry");
  scaled_l1_ = scale * vector_.cwiseAbs().sum();
}

double EigenvectorLowerBound::operator()(std::size_t k) const {
  return 0.5 * scaled_l1_ * std::pow(std::abs(lambda_), static_cast<double>(k));
}

double support_lower_bound(std::size_t sigma_size, std::size_t group_order, std::size_t k) {
  if (sigma_size == 0 || group_order == 0) fail(ErrorCode::kUsage, "sizes must be positive");
  const double log_reach = static_cast<double>(k) * std::log(static_cast<double>(sigma_size));
  const double log_order = std::log(static_cast<double>(group_order));
  if (log_reach >= log_order) return 0.0;
  return std::max(0.0, 1.0 - std::exp(log_reach - log_order));
}

InvertibilityReport is_invertible(const StochasticOperator& op) {
  InvertibilityReport r;
  const auto& m = op.matrix();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  r.threshold = rank_threshold(op.size());
  r.smallest_singular_value = sv(sv.size() - 1);
  for (Eigen::Index i = 0; i < sv.size(); ++i) r.rank += sv(i) > r.threshold ? 1 : 0;
  r.nullity = op.size() - r.rank;
  r.invertible = r.smallest_singular_value > r.threshold;
  r.borderline = r.smallest_singular_value > r.threshold / 10.0 &&
                 r.smallest_singular_value < r.threshold * 10.0;
  r.abs_determinant = std::abs(Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant());
  return r;
}

}  // namespace rwg
