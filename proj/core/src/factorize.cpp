#include "rwg/factorize.hpp"

#include <algorithm>
#include <cmath>

#include "rwg/error.hpp"
#include "rwg/walks.hpp"

namespace rwg {

FactorizationCheck check_factorization(const std::vector<Measure>& factors) {
  if (factors.empty()) fail(ErrorCode::kUsage, "factorization needs at least one factor");
  for (const auto& f : factors) {
    if (!same_group(f, factors.front())) fail(ErrorCode::kUsage, "factors live on different groups");
  }
  Measure product = factors.back();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) product = convolve(*it, product);
  const double dev = lp_distance(product, uniform(product.group_ptr()), kInfinity);
  return FactorizationCheck{dev <= 1e-12, dev, std::move(product)};
}

std::vector<Measure> urban_factors(int n) {
  if (n < 2) fail(ErrorCode::kUsage, "Urban factorization needs n >= 2");
  const GroupPtr g = Group::build(GroupDescriptor{GroupKind::kSymmetric, n});
  std::vector<Measure> out;
  for (int i = n - 1; i >= 1; --i) out.push_back(driving_measure(WalkSpec{WalkName::kUrbanStep, n, i}, g));
  return out;
}

CirclePq circle_pq_operator(int n, double p) {
  if (n < 3) fail(ErrorCode::kUsage, "circle P_p needs n >= 3");
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::kUsage, "circle P_p needs p in (0,1)");
  const GroupPtr g = Group::build(GroupDescriptor{GroupKind::kCyclic, n});
  std::vector<double> w(g->order(), 0.0);
  w[1] = p;
  w[static_cast<std::size_t>(n - 1)] = 1.0 - p;
  StochasticOperator op = StochasticOperator::from_measure(Measure::probability(g, std::move(w)));
  InvertibilityReport inv = is_invertible(op);
  return CirclePq{std::move(op), inv};
}

ChargeSolveResult charge_preimage(const StochasticOperator& op, const Measure& target) {
  if (target.group().descriptor() != op.group().descriptor()) {
    fail(ErrorCode::kUsage, "target and operator live on different groups");
  }
  const auto n = static_cast<Eigen::Index>(op.size());
  Eigen::Map<const Eigen::VectorXd> rhs(target.weights().data(), n);
  // u P = target  <=>  P^T u^T = target^T.
  const Eigen::MatrixXd pt = op.matrix().transpose();
  ChargeSolveResult r;
  r.unique = is_invertible(op).invertible;
  Eigen::VectorXd u;
  if (r.unique) {
    u = pt.partialPivLu().solve(rhs);
  } else {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
    cod.setThreshold(rank_threshold(op.size()) / std::max(pt.cwiseAbs().maxCoeff(), 1e-300));
    u = cod.compute(pt).solve(rhs);
  }
  r.residual = (pt * u - rhs).cwiseAbs().maxCoeff();
  r.exists = r.residual <= 1e-9;
  if (r.exists) {
    std::vector<double> w(u.data(), u.data() + u.size());
    r.negative_entries = static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [](double x) { return x < -1e-12; }));
    r.min_entry = *std::min_element(w.begin(), w.end());
    r.solution = make_unchecked(op.group_ptr(), std::move(w), MeasureKind::kCharge);
  }
  return r;
}

NoPowerCertificate no_finite_power_reaches_pi(const Measure& nu, std::size_t k_budget) {
  if (!nu.is_symmetric(1e-15)) fail(ErrorCode::kUsage, "certificate needs a symmetric measure");
  const Measure pi = uniform(nu.group_ptr());
  if (lp_distance(nu, pi, kInfinity) <= 1e-15) {
    fail(ErrorCode::kUsage, "certificate needs nu != uniform");
  }
  NoPowerCertificate c;

  // nu^{*k} = pi for some k would force every eigenvalue carrying weight at e
  // to vanish. Weights are summed within clusters so the basis choice in a
  // repeated eigenspace does not matter.
  const SymmetricExpansion expansion(nu);
  const auto& lambda = expansion.eigenvalues();  // ascending
  const auto& coeff = expansion.coefficients();
  for (std::size_t t = 0; t < lambda.size();) {
    std::size_t u = t;
    double weight = 0.0;
    while (u < lambda.size() && lambda[u] - lambda[t] <= 1e-9) weight += coeff[u++];
    const double mid = lambda[(t + u - 1) / 2];
    if (weight > 1e-12 && std::abs(mid) > 1e-9 && std::abs(mid) > std::abs(c.witness_eigenvalue)) {
      c.spectral = true;
      c.witness_eigenvalue = mid;
      c.witness_weight = weight;
    }
    t = u;
  }

  // Direct check while the expected deviation stays well above rounding.
  std::size_t horizon = k_budget;
  if (c.spectral && std::abs(c.witness_eigenvalue) < 1.0) {
    const double resolvable = std::log(1e-10) / std::log(std::abs(c.witness_eigenvalue));
    horizon = std::min<std::size_t>(k_budget, static_cast<std::size_t>(std::max(1.0, resolvable)));
  }
  c.direct = true;
  Measure current = nu;
  for (std::size_t k = 1; k <= horizon; ++k) {
    if (k > 1) current = convolve(nu, current);
    if (lp_distance(current, pi, kInfinity) <= 1e-14) {
      c.direct = false;
      break;
    }
    c.checked_up_to = k;
  }
  c.certified = c.spectral && c.direct;
  return c;
}

}  // namespace rwg
