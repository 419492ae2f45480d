#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <thread>

#include "rwg/bounds.hpp"
#include "rwg/csv.hpp"
#include "rwg/cutoff.hpp"
#include "rwg/ergodic.hpp"
#include "rwg/error.hpp"
#include "rwg/factorize.hpp"
#include "rwg/fourier.hpp"
#include "rwg/simulate.hpp"
#include "rwg/spectral.hpp"
#include "rwg/walks.hpp"
#include "run_config.hpp"

namespace rwg::cli {
namespace {

constexpr std::size_t kDefaultTrials = 100000;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

SimulationOptions simulation_options(const RunConfig& c, std::ostream& err) {
  SimulationOptions o;
  if (c.seed) {
    o.seed = *c.seed;
  } else {
    std::random_device rd;
    o.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    err << "seed: " << o.seed << "\n";
  }
  o.threads = c.threads.value_or(std::max(1u, std::thread::hardware_concurrency()));
  return o;
}

std::ofstream open_secondary(const std::string& path) {
  std::ofstream f(path);
  if (!f) fail(ErrorCode::kUsage, "cannot open " + path);
  return f;
}

void cmd_walk(const RunConfig& c, std::ostream& out) {
  const auto curve = distance_curve(WalkSpec::parse(c.walk), c.k_max.value_or(100));
  csv::row(out, {"k", "distance", "separation", "entropy_gap"});
  for (std::size_t k = 0; k <= curve.k_max(); ++k) {
    csv::row(out, {std::to_string(k), csv::number(curve.variation[k]), csv::number(curve.separation[k]),
                   csv::number(curve.entropy_gap[k])});
  }
}

std::vector<double> c_grid(const RunConfig& c) {
  return c.c.empty() ? std::vector<double>{0.5, 1.0, 2.0, 4.0} : c.c;
}

// Rows keyed by k so bounds evaluated at the same step share a line.
std::vector<BoundRow> merge_rows(const std::map<std::size_t, BoundRow>& rows) {
  std::vector<BoundRow> out;
  for (const auto& [k, r] : rows) out.push_back(r);
  return out;
}

void cmd_bounds(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const WalkSpec spec = WalkSpec::parse(c.walk);
  const int n = spec.n;
  std::vector<BoundRow> rows;

  if (spec.name == WalkName::kSimpleCircle) {
    if (n % 2 == 0) fail(ErrorCode::kUnsupported, "circle bounds need odd n");
    const auto curve = distance_curve(spec, c.k_max.value_or(2 * static_cast<std::size_t>(n * n)));
    for (std::size_t k = 0; k <= curve.k_max(); ++k) {
      const auto b = circle_bounds(n, static_cast<double>(k));
      rows.push_back({k, curve.variation[k], b.upper, b.lower});
    }
  } else if (spec.name == WalkName::kCubeNearestNeighbour) {
    std::map<std::size_t, BoundRow> at;
    std::size_t K = c.k_max.value_or(0);
    for (double cc : c_grid(c)) K = std::max(K, static_cast<std::size_t>(std::ceil(cube_upper(n, cc).k)));
    const auto curve = distance_curve(spec, K);
    for (double cc : c_grid(c)) {
      const auto u = cube_upper(n, cc);
      const auto ku = static_cast<std::size_t>(std::ceil(u.k));
      at.try_emplace(ku, BoundRow{ku, curve.variation[ku], {}, {}}).first->second.upper = std::sqrt(u.bound);
      const auto l = cube_lower(n, cc);
      if (l.k >= 0.0) {
        const auto kl = static_cast<std::size_t>(std::floor(l.k));
        at.try_emplace(kl, BoundRow{kl, curve.variation[kl], {}, {}}).first->second.lower =
            std::max(0.0, l.bound);
      }
    }
    err << "note: the cube lower bound is asymptotic in n\n";
    rows = merge_rows(at);
  } else if (spec.name == WalkName::kHeisenbergGenerators) {
    const Measure nu = driving_measure(spec);
    const auto profile = growth_profile(nu.group(), nu.support(), nu);
    const double A = c.growth_a.value_or(48.0), d = c.growth_d.value_or(3.0);
    if (!moderate_growth_certificate(profile, A, d)) {
      fail(ErrorCode::kUnsupported, "moderate growth not certified for A=" + format_double(A) +
                                        ", d=" + format_double(d));
    }
    const auto delta = static_cast<double>(profile.diameter);
    std::map<std::size_t, BoundRow> at;
    std::size_t K = c.k_max.value_or(0);
    for (double cc : c_grid(c)) {
      K = std::max(K, static_cast<std::size_t>(
                          std::ceil(moderate_growth_bounds(A, d, delta, profile.min_weight, cc).upper_k)));
    }
    const auto curve = distance_curve(spec, K);
    for (double cc : c_grid(c)) {
      const auto m = moderate_growth_bounds(A, d, delta, profile.min_weight, cc);
      const auto ku = static_cast<std::size_t>(std::ceil(m.upper_k));
      at.try_emplace(ku, BoundRow{ku, curve.variation[ku], {}, {}}).first->second.upper = m.upper;
      const auto kl = static_cast<std::size_t>(std::floor(m.lower_k));
      at.try_emplace(kl, BoundRow{kl, curve.variation[kl], {}, {}}).first->second.lower = m.lower;
    }
    err << "diameter " << profile.diameter << ", L " << csv::number(profile.min_weight) << "\n";
    rows = merge_rows(at);
  } else {
    const Measure nu = driving_measure(spec);
    if (!has_irrep_catalog(nu.group())) {
      fail(ErrorCode::kUnsupported, "no bound is available for " + c.walk);
    }
    const UpperBoundLemma ubl(nu, irrep_catalog(nu.group_ptr()));
    const auto curve = distance_curve(nu, spec, c.k_max.value_or(100));
    const std::size_t support = nu.support().size();
    for (std::size_t k = 0; k <= curve.k_max(); ++k) {
      rows.push_back({k, curve.variation[k], std::sqrt(ubl(k)), support_lower_bound(support, nu.size(), k)});
    }
  }
  write_bound_csv(out, rows);
}

double family_time(const std::string& family, int n) {
  const double x = n, lx = std::log(x);
  if (family == "cube-nn") return x * lx / 4.0;
  if (family == "cube-loops") return x * lx / 2.0;
  if (family == "simple-circle" || family == "heisenberg-gen") return x * x;
  if (family == "random-transpositions") return x * lx / 2.0;
  if (family == "random-to-top" || family == "top-to-random") return x * lx;
  fail(ErrorCode::kUsage, "no cut-off family named " + family);
}

void cmd_cutoff(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.ns.empty()) fail(ErrorCode::kUsage, "cutoff needs at least one n");
  const std::string family = c.family;
  const auto spec_of = [&](int n) { return WalkSpec::parse(family + ":" + std::to_string(n)); };
  const auto t = [&](int n) { return family_time(family, n); };
  const std::vector<double> eps = c.eps.empty() ? std::vector<double>{0.5} : c.eps;
  const double a = c.a.value_or(default_epsilon()), b = c.b.value_or(default_epsilon());

  const auto verdict = cutoff_scan(spec_of, c.ns, t, eps);
  for (std::size_t j = 0; j < eps.size(); ++j) {
    err << "eps " << format_double(eps[j]) << ": post strictly decreasing "
        << yes_no(verdict.post_strictly_decreasing[j]) << ", pre strictly increasing "
        << yes_no(verdict.pre_strictly_increasing[j]) << ", post spread " << csv::number(verdict.post_spread[j], 6)
        << ", pre spread " << csv::number(verdict.pre_spread[j], 6) << "\n";
  }

  std::vector<CutoffSummaryRow> summary;
  std::vector<DistanceCurve> curves;
  for (int n : c.ns) {
    // Extend the horizon until the curve falls below b.
    auto K = std::max<std::size_t>(c.k_max.value_or(0), static_cast<std::size_t>(std::ceil(2.0 * t(n))) + 10);
    DistanceCurve curve = distance_curve(spec_of(n), K);
    while (curve.variation.back() >= b) curve = distance_curve(spec_of(n), K *= 2);
    summary.push_back({n, mixing_time(curve.variation, {}).tau_default, finitary_cutoff(curve.variation, a, b)});
    curves.push_back(std::move(curve));
  }
  write_cutoff_summary_csv(out, summary);
  if (!c.long_out.empty()) {
    auto f = open_secondary(c.long_out);
    write_curve_csv(f, curves);
  }
}

std::size_t estimator_horizon(const RunConfig& c, const StoppingTimeSample& s) {
  if (c.k_max) return *c.k_max;
  std::uint64_t m = 0;
  for (auto t : s.times) {
    if (t != kCensored) m = std::max(m, t);
  }
  return static_cast<std::size_t>(m);
}

void cmd_simulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto opts = simulation_options(c, err);
  const std::size_t trials = c.trials.value_or(kDefaultTrials);
  if (trials == 0) fail(ErrorCode::kUsage, "trials must be positive");
  if (c.mode == "sut") {
    const auto s = random_to_top_sut(*c.n, trials, opts);
    write_estimator_csv(out, s.time, estimator_horizon(c, s.time));
  } else if (c.mode == "coupling") {
    const auto s = cube_coupling(*c.n, trials, opts, c.k.value_or(5));
    if (s.dof > 0) {
      err << "marginal at k=" << s.check_k << ": chi-square " << csv::number(s.chi_square, 6) << " on " << s.dof
          << " dof, p " << csv::number(s.p_value, 6) << "\n";
    }
    write_estimator_csv(out, s.time, estimator_horizon(c, s.time));
  } else if (c.mode == "coupon") {
    const auto s = coupon_collector(*c.n, trials, opts);
    write_estimator_csv(out, s, estimator_horizon(c, s));
  } else if (c.mode == "switzer") {
    const Measure nu = driving_measure(WalkSpec::parse(c.walk));
    const auto r = switzer_game(convolution_power(nu, c.k.value_or(1)), uniform(nu.group_ptr()), trials, opts);
    out << "win_rate " << csv::number(r.win_rate) << "\nstderr " << csv::number(r.stderr_) << "\npredicted "
        << csv::number(r.predicted) << "\ntrials " << r.trials << "\n";
  } else if (c.mode == "visits") {
    const Measure nu = driving_measure(WalkSpec::parse(c.walk));
    const auto target = nu.group().find(c.target);
    if (!target) fail(ErrorCode::kUsage, "no element labelled " + c.target);
    const auto v = visits_before_return(nu, *target, trials, opts);
    out << "mean_visits " << csv::number(v.mean_visits) << "\nmean_return_time " << csv::number(v.mean_return_time)
        << "\nratio " << csv::number(v.ratio) << "\npredicted_ratio " << csv::number(1.0 / nu.size())
        << "\ndiff_mean " << csv::number(v.diff_mean) << "\ndiff_stderr " << csv::number(v.diff_stderr)
        << "\ntrials " << v.trials << "\ncensored " << v.censored << "\n";
  }
}

void cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const auto op = StochasticOperator::from_measure(driving_measure(WalkSpec::parse(c.walk)));
  const auto s = spectrum(op);
  if (!c.report) {
    write_spectrum_csv(out, s);
    return;
  }
  const auto inv = is_invertible(op);
  const auto g = gershgorin(op);
  out << "order " << op.size() << "\nsymmetric " << yes_no(s.real) << "\nlambda_star " << csv::number(s.lambda_star)
      << "\nlambda_2 " << csv::number(s.lambda_2) << "\nmultiplicity_of_one " << s.multiplicity_of_one
      << "\neigenvalue_mean " << csv::number(s.mean_real()) << "\ninvertible " << yes_no(inv.invertible)
      << (inv.borderline ? " (borderline)" : "") << "\nsmallest_singular_value "
      << csv::number(inv.smallest_singular_value) << "\nrank " << inv.rank << "\nnullity " << inv.nullity
      << "\ngershgorin_center " << csv::number(g.disc_center) << "\ngershgorin_radius " << csv::number(g.disc_radius)
      << "\ngershgorin_certificate " << yes_no(g.invertible_certificate) << "\n";
}

void cmd_factorize(const RunConfig& c, std::ostream& out) {
  if (c.mode == "urban") {
    auto factors = urban_factors(*c.n);
    const auto forward = check_factorization(factors);
    std::size_t singular = 0;
    for (const auto& f : factors) singular += is_invertible(StochasticOperator::from_measure(f)).invertible ? 0 : 1;
    std::reverse(factors.begin(), factors.end());
    const auto reversed = check_factorization(factors);
    out << "group symmetric:" << *c.n << "\nfactors " << factors.size() << "\nexact " << yes_no(forward.exact)
        << "\ndeviation " << csv::number(forward.deviation) << "\nsingular_factors " << singular
        << "\nreversed_exact " << yes_no(reversed.exact) << "\nreversed_deviation "
        << csv::number(reversed.deviation) << "\n";
  } else if (c.mode == "circle-pq") {
    std::vector<double> ps = c.p;
    if (ps.empty()) {
      for (int i = 1; i <= 9; ++i) ps.push_back(i / 10.0);
    }
    csv::row(out, {"n", "p", "invertible", "smallest_singular_value"});
    for (int n : c.ns) {
      for (double p : ps) {
        const auto r = circle_pq_operator(n, p);
        csv::row(out, {std::to_string(n), csv::number(p), r.invertibility.invertible ? "1" : "0",
                       csv::number(r.invertibility.smallest_singular_value)});
      }
    }
  } else if (c.mode == "charge") {
    const Measure nu = driving_measure(WalkSpec::parse(c.walk));
    Measure target = uniform(nu.group_ptr());
    if (c.target == "identity") {
      target = dirac(nu.group_ptr(), 0);
    } else if (c.target != "uniform") {
      fail(ErrorCode::kUsage, "target must be identity or uniform");
    }
    const auto r = charge_preimage(StochasticOperator::from_measure(nu), target);
    out << "exists " << yes_no(r.exists) << "\nunique " << yes_no(r.unique) << "\nresidual "
        << csv::number(r.residual) << "\n";
    if (r.exists) {
      out << "negative_entries " << r.negative_entries << "\nmin_entry " << csv::number(r.min_entry) << "\n";
      if (!c.long_out.empty()) {
        auto f = open_secondary(c.long_out);
        write_measure_csv(f, *r.solution);
      }
    }
  } else if (c.mode == "no-power") {
    const auto r = no_finite_power_reaches_pi(driving_measure(WalkSpec::parse(c.walk)), c.k_max.value_or(500));
    out << "certified " << yes_no(r.certified) << "\nspectral " << yes_no(r.spectral) << "\ndirect "
        << yes_no(r.direct) << "\nchecked_up_to " << r.checked_up_to << "\nwitness_eigenvalue "
        << csv::number(r.witness_eigenvalue) << "\nwitness_weight " << csv::number(r.witness_weight) << "\n";
  }
}

void cmd_ergodic(const RunConfig& c, std::ostream& out) {
  GroupPtr g;
  std::vector<Element> support;
  if (!c.walk.empty()) {
    const Measure nu = driving_measure(WalkSpec::parse(c.walk));
    g = nu.group_ptr();
    support = nu.support().elements();
  } else {
    if (c.group.empty() || c.support.empty()) fail(ErrorCode::kUsage, "ergodic needs --walk or --group with --support");
    g = Group::build(c.group);
    for (const auto& label : c.support) {
      const auto e = g->find(label);
      if (!e) fail(ErrorCode::kUsage, "no element labelled " + label + " in " + c.group);
      support.push_back(*e);
    }
  }
  out << is_ergodic(*g, SupportSet(support)).describe(*g) << "\n";
}

}  // namespace

void run(RunConfig config, std::ostream& out, std::ostream& err) {
  const std::string& cmd = config.command;
  if (cmd == "walk") {
    cmd_walk(config, out);
  } else if (cmd == "bounds") {
    cmd_bounds(config, out, err);
  } else if (cmd == "cutoff") {
    cmd_cutoff(config, out, err);
  } else if (cmd == "simulate") {
    cmd_simulate(config, out, err);
  } else if (cmd == "spectrum") {
    cmd_spectrum(config, out);
  } else if (cmd == "fourier") {
    write_character_table_csv(out, irrep_catalog(Group::build(config.group)));
  } else if (cmd == "factorize") {
    cmd_factorize(config, out);
  } else if (cmd == "ergodic") {
    cmd_ergodic(config, out);
  } else {
    fail(ErrorCode::kUsage, "unknown command " + cmd);
  }
}

}  // namespace rwg::cli
