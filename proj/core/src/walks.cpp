#include "rwg/walks.hpp"

#include <bit>
#include <charconv>
#include <numeric>
#include <vector>

#include "rwg/error.hpp"

namespace rwg {

namespace {

struct NameEntry {
  std::string_view text;
  WalkName name;
};

constexpr NameEntry kNames[] = {
    {"simple-circle", WalkName::kSimpleCircle},
    {"cube-nn", WalkName::kCubeNearestNeighbour},
    {"cube-loops", WalkName::kCubeLoops},
    {"random-transpositions", WalkName::kRandomTranspositions},
    {"random-to-top", WalkName::kRandomToTop},
    {"top-to-random", WalkName::kTopToRandom},
    {"heisenberg-gen", WalkName::kHeisenbergGenerators},
    {"urban-step", WalkName::kUrbanStep},
};

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    fail(ErrorCode::kUsage, "malformed walk descriptor '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

WalkSpec WalkSpec::parse(std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) {
    fail(ErrorCode::kUsage, "walk descriptor '" + std::string(text) + "' needs a size");
  }
  const std::string_view name = text.substr(0, first);
  WalkSpec spec;
  bool known = false;
  for (const auto& entry : kNames) {
    if (entry.text == name) {
      spec.name = entry.name;
      known = true;
    }
  }
  if (!known) fail(ErrorCode::kUnsupported, "unknown walk '" + std::string(name) + "'");

  std::string_view rest = text.substr(first + 1);
  const auto second = rest.find(':');
  if (spec.name == WalkName::kUrbanStep) {
    if (second == std::string_view::npos) {
      fail(ErrorCode::kUsage, "urban-step needs n and i, e.g. urban-step:4:2");
    }
    spec.n = parse_int(rest.substr(0, second), text);
    spec.step = parse_int(rest.substr(second + 1), text);
    if (spec.step < 1 || spec.step > spec.n) {
      fail(ErrorCode::kUsage, "urban-step:n:i requires 1 <= i <= n");
    }
  } else {
    if (second != std::string_view::npos) {
      fail(ErrorCode::kUsage, "walk descriptor '" + std::string(text) + "' has extra fields");
    }
    spec.n = parse_int(rest, text);
  }
  // Validate the size through the group constraints.
  (void)GroupDescriptor::parse(spec.group_descriptor().to_string());
  return spec;
}

std::string WalkSpec::to_string() const {
  for (const auto& entry : kNames) {
    if (entry.name == name) {
      std::string out = std::string(entry.text) + ":" + std::to_string(n);
      if (name == WalkName::kUrbanStep) out += ":" + std::to_string(step);
      return out;
    }
  }
  return {};
}

GroupDescriptor WalkSpec::group_descriptor() const {
  switch (name) {
    case WalkName::kSimpleCircle: return {GroupKind::kCyclic, n};
    case WalkName::kCubeNearestNeighbour:
    case WalkName::kCubeLoops: return {GroupKind::kCube, n};
    case WalkName::kRandomTranspositions:
    case WalkName::kRandomToTop:
    case WalkName::kTopToRandom:
    case WalkName::kUrbanStep: return {GroupKind::kSymmetric, n};
    case WalkName::kHeisenbergGenerators: return {GroupKind::kHeisenberg, n};
  }
  return {};
}

int weight(const Group& cube, Element s) { return std::popcount(cube.bits(s)); }

Measure driving_measure(const WalkSpec& spec) {
  return driving_measure(spec, Group::build(spec.group_descriptor()));
}

Measure driving_measure(const WalkSpec& spec, const GroupPtr& group) {
  if (!(group->descriptor() == spec.group_descriptor())) {
    fail(ErrorCode::kUsage, "walk " + spec.to_string() + " does not live on " +
                                group->descriptor().to_string());
  }
  const Group& g = *group;
  const int n = spec.n;
  const double dn = static_cast<double>(n);
  std::vector<double> w(g.order(), 0.0);

  switch (spec.name) {
    case WalkName::kSimpleCircle:
      w[1 % n] += 0.5;
      w[(n - 1) % n] += 0.5;
      break;
    case WalkName::kCubeNearestNeighbour:
      w[g.identity()] = 1.0 / (dn + 1.0);
      for (Element gen : g.generators()) w[gen] = 1.0 / (dn + 1.0);
      break;
    case WalkName::kCubeLoops:
      w[g.identity()] = 0.5;
      for (Element gen : g.generators()) w[gen] = 1.0 / (2.0 * dn);
      break;
    case WalkName::kRandomTranspositions: {
      w[g.identity()] = 1.0 / dn;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          auto p = identity_permutation(n);
          std::swap(p[i], p[j]);
          w[g.from_permutation(p)] = 2.0 / (dn * dn);
        }
      }
      break;
    }
    case WalkName::kTopToRandom:
    case WalkName::kRandomToTop: {
      for (int m = 1; m <= n; ++m) {
        auto p = identity_permutation(n);
        if (spec.name == WalkName::kTopToRandom) {
          // (1 m m-1 ... 2): the top card moves to position m.
          p[0] = m - 1;
          for (int j = 1; j < m; ++j) p[j] = j - 1;
        } else {
          // (1 2 ... m): the card at position m moves to the top.
          for (int j = 0; j + 1 < m; ++j) p[j] = j + 1;
          p[m - 1] = 0;
        }
        w[g.from_permutation(p)] += 1.0 / dn;
      }
      break;
    }
    case WalkName::kHeisenbergGenerators: {
      const auto idx = [n](int a, int b, int c) {
        const auto mod = [n](int x) { return ((x % n) + n) % n; };
        return static_cast<Element>((mod(a) * n + mod(b)) * n + mod(c));
      };
      for (Element s : {idx(1, 0, 0), idx(-1, 0, 0), idx(0, 0, 1), idx(0, 0, -1), idx(0, 0, 0)}) {
        w[s] += 0.2;
      }
      break;
    }
    case WalkName::kUrbanStep: {
      // Uniform on {(i,i), (i,i+1), ..., (i,n)}, (i,i) being the identity.
      const int i = spec.step - 1;
      const double mass = 1.0 / static_cast<double>(n - i);
      for (int j = i; j < n; ++j) {
        auto p = identity_permutation(n);
        std::swap(p[i], p[j]);
        w[g.from_permutation(p)] += mass;
      }
      break;
    }
  }
  return Measure::probability(group, std::move(w));
}

}  // namespace rwg
