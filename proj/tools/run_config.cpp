#include "run_config.hpp"

#include <charconv>

#include "CLI11.hpp"

namespace rwg::cli {

std::string format_double(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

namespace {

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += ',';
    if constexpr (std::is_same_v<T, double>) {
      s += format_double(x);
    } else if constexpr (std::is_same_v<T, std::string>) {
      s += x;
    } else {
      s += std::to_string(x);
    }
  }
  return s;
}

bool takes_n_list(const RunConfig& c) {
  return c.command == "cutoff" || (c.command == "factorize" && c.mode == "circle-pq");
}

// Options are registered per subcommand so `--help` stays relevant; all of
// them write into the one config.
struct Builder {
  RunConfig& c;

  void walk(CLI::App* s, bool required = true) {
    s->add_option("--walk", c.walk, "walk descriptor, e.g. simple-circle:11")->required(required);
  }
  void k_max(CLI::App* s) { s->add_option("--kmax", c.k_max, "largest step count"); }
  void single_n(CLI::App* s) { s->add_option("--n", c.n, "size parameter")->required(); }
  void trials(CLI::App* s) { s->add_option("--trials", c.trials, "independent trials (default 100000)"); }
};

}  // namespace

std::vector<std::string> RunConfig::to_args() const {
  std::vector<std::string> a{command};
  if (!mode.empty()) a.push_back(mode);
  const auto put = [&](const char* flag, const std::string& v) {
    if (!v.empty()) {
      a.emplace_back(flag);
      a.push_back(v);
    }
  };
  put("--walk", walk);
  put("--group", group);
  put("--family", family);
  put("--target", target);
  put("--support", join(support));
  if (k_max) put("--kmax", std::to_string(*k_max));
  if (k) put("--k", std::to_string(*k));
  if (takes_n_list(*this)) {
    put("--n", join(ns));
  } else if (n) {
    put("--n", std::to_string(*n));
  }
  put("--eps", join(eps));
  put("--c", join(c));
  put("--p", join(p));
  if (this->a) put("--a", format_double(*this->a));
  if (b) put("--b", format_double(*b));
  if (growth_a) put("--A", format_double(*growth_a));
  if (growth_d) put("--d", format_double(*growth_d));
  if (trials) put("--trials", std::to_string(*trials));
  if (report) a.emplace_back("--report");
  put("--long", long_out);
  put("--out", out);
  if (seed) put("--seed", std::to_string(*seed));
  if (threads) put("--threads", std::to_string(*threads));
  return a;
}

ParseOutcome parse_command_line(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Random walks on finite groups: exact distances, bounds, cut-off and simulation", "rwg"};
  app.require_subcommand(1);
  app.add_option("--out", c.out, "output path (default stdout)");
  app.add_option("--seed", c.seed, "master seed for simulations");
  app.add_option("--threads", c.threads, "worker threads; results do not depend on it")
      ->check(CLI::PositiveNumber);
  Builder b{c};

  auto* walk = app.add_subcommand("walk", "exact distance curves: k,distance,separation,entropy_gap");
  b.walk(walk);
  b.k_max(walk);

  auto* bounds = app.add_subcommand("bounds", "exact distance beside the bounds: k,exact,upper,lower");
  b.walk(bounds);
  b.k_max(bounds);
  bounds->add_option("--c", c.c, "c grid for cube and moderate growth bounds")->delimiter(',');
  bounds->add_option("--A", c.growth_a, "moderate growth constant A (default 48)");
  bounds->add_option("--d", c.growth_d, "moderate growth exponent d (default 3)");

  auto* cutoff = app.add_subcommand("cutoff", "family scan: n,tau,q,A_size,B_size");
  cutoff->add_option("--family", c.family, "walk family, e.g. cube-nn")->required();
  cutoff->add_option("--n", c.ns, "family sizes")->delimiter(',')->required();
  cutoff->add_option("--eps", c.eps, "eps values for the pre/post times")->delimiter(',');
  cutoff->add_option("--a", c.a, "finitary cut-off a (default 1/2e)");
  cutoff->add_option("--b", c.b, "finitary cut-off b (default 1/2e)");
  b.k_max(cutoff);
  cutoff->add_option("--long", c.long_out, "path for the long n,k,distance CSV");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimators");
  simulate->require_subcommand(1);
  auto* sut = simulate->add_subcommand("sut", "random-to-top strong uniform time: k,p_exceed,stderr");
  auto* coupling = simulate->add_subcommand("coupling", "cube-loops coupling time: k,p_exceed,stderr");
  auto* coupon = simulate->add_subcommand("coupon", "coupon-collector time: k,p_exceed,stderr");
  for (auto* s : {sut, coupling, coupon}) {
    b.single_n(s);
    b.trials(s);
    b.k_max(s);
  }
  coupling->add_option("--k", c.k, "step at which the marginal law is tested (default 5)");
  auto* switzer = simulate->add_subcommand("switzer", "guessing game between nu^k and uniform");
  b.walk(switzer);
  switzer->add_option("--k", c.k, "power of the walk (default 1)");
  b.trials(switzer);
  auto* visits = simulate->add_subcommand("visits", "visits to a target before the first return");
  b.walk(visits);
  visits->add_option("--target", c.target, "element label")->required();
  b.trials(visits);

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the stochastic operator");
  b.walk(spectrum);
  spectrum->add_flag("--report", c.report, "plain-text invertibility and Gershgorin report");

  auto* fourier = app.add_subcommand("fourier", "character table of a supported group");
  fourier->add_option("--group", c.group, "group descriptor")->required();

  auto* factorize = app.add_subcommand("factorize", "invertibility and factorization reports");
  factorize->require_subcommand(1);
  auto* urban = factorize->add_subcommand("urban", "Urban's factorization of uniform on S_n");
  b.single_n(urban);
  auto* pq = factorize->add_subcommand("circle-pq", "invertibility of P_p on odd cycles");
  pq->add_option("--n", c.ns, "cycle lengths")->delimiter(',')->required();
  pq->add_option("--p", c.p, "p grid (default 0.1,...,0.9)")->delimiter(',');
  auto* charge = factorize->add_subcommand("charge", "solve u P = target");
  b.walk(charge);
  charge->add_option("--target", c.target, "identity or uniform")->required();
  charge->add_option("--long", c.long_out, "path for the solved charge as CSV");
  auto* no_power = factorize->add_subcommand("no-power", "certify nu^k != uniform for all k");
  b.walk(no_power);
  b.k_max(no_power);

  auto* ergodic = app.add_subcommand("ergodic", "ergodicity of a walk or support set");
  b.walk(ergodic, false);
  ergodic->add_option("--group", c.group, "group descriptor, with --support");
  ergodic->add_option("--support", c.support, "element labels")->delimiter(',');

  for (auto* s : {walk, bounds, cutoff, simulate, sut, coupling, coupon, switzer, visits, spectrum,
                  fourier, factorize, urban, pq, charge, no_power, ergodic}) {
    s->fallthrough();
  }

  std::vector<std::string> storage{"rwg"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, 0, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {std::nullopt, 0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, 1, std::string(e.what()) + "\nRun with --help for usage.\n"};
  }

  const auto* cmd = app.get_subcommands().front();
  c.command = cmd->get_name();
  if (!cmd->get_subcommands().empty()) c.mode = cmd->get_subcommands().front()->get_name();
  return {c, 0, {}};
}

}  // namespace rwg::cli
