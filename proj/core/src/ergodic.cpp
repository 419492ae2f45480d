#include "rwg/ergodic.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "rwg/error.hpp"

namespace rwg {

namespace {

constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

std::string join_labels(const Group& g, const SupportSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " ";
    out += g.label(s.elements()[i]);
  }
  return out + "}";
}

// Square boolean matrix with 64-bit packed rows.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), data_(n * words_, 0) {}

  void set(std::size_t i, std::size_t j) { data_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  bool get(std::size_t i, std::size_t j) const {
    return (data_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }

  BitMatrix operator*(const BitMatrix& rhs) const {
    BitMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint64_t* dst = &out.data_[i * words_];
      for (std::size_t k = 0; k < n_; ++k) {
        if (!get(i, k)) continue;
        const std::uint64_t* src = &rhs.data_[k * words_];
        for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
      }
    }
    return out;
  }

  bool all_set() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!get(i, j)) return false;
      }
    }
    return true;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

}  // namespace

std::string ErgodicityReport::describe(const Group& g) const {
  std::ostringstream os;
  if (ergodic) {
    os << "ergodic: P^" << power.value_or(0) << " is strictly positive";
  } else if (subgroup) {
    os << "not ergodic: support lies in the proper subgroup " << join_labels(g, *subgroup);
  } else if (coset && normal_subgroup) {
    os << "not ergodic: support lies in the coset " << join_labels(g, *coset)
       << " of the proper normal subgroup " << join_labels(g, *normal_subgroup) << " (period "
       << period << ")";
  } else {
    os << "not ergodic";
  }
  return os.str();
}

ErgodicityReport digraph_ergodicity(const Group& g, const SupportSet& support) {
  if (support.empty()) fail(ErrorCode::kUsage, "ergodicity needs a nonempty support");
  const std::size_t order = g.order();

  // BFS depths from e along edges u -> sigma u.
  std::vector<std::size_t> depth(order, kUnreached);
  std::deque<Element> queue{g.identity()};
  depth[g.identity()] = 0;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Element u = queue.front();
    queue.pop_front();
    for (Element sigma : support.elements()) {
      const Element v = g.mul(sigma, u);
      if (depth[v] == kUnreached) {
        depth[v] = depth[u] + 1;
        ++reached;
        queue.push_back(v);
      }
    }
  }

  ErgodicityReport report;
  if (reached < order) {
    report.subgroup = generated_subgroup(g, support);
    return report;
  }

  std::size_t period = 0;
  for (Element u = 0; u < order; ++u) {
    for (Element sigma : support.elements()) {
      const Element v = g.mul(sigma, u);
      const auto lhs = static_cast<long long>(depth[u] + 1);
      const auto rhs = static_cast<long long>(depth[v]);
      period = std::gcd(period, static_cast<std::size_t>(lhs > rhs ? lhs - rhs : rhs - lhs));
    }
  }
  report.period = period;

  if (period > 1) {
    std::vector<Element> kernel, coset;
    for (Element u = 0; u < order; ++u) {
      if (depth[u] % period == 0) kernel.push_back(u);
      if (depth[u] % period == 1) coset.push_back(u);
    }
    report.normal_subgroup = SupportSet(std::move(kernel));
    report.coset = SupportSet(std::move(coset));
    return report;
  }

  // Least m with support^m = G.
  report.ergodic = true;
  std::vector<bool> current(order, false);
  current[g.identity()] = true;
  std::size_t m = 0;
  std::size_t count = 1;
  while (count < order) {
    std::vector<bool> next(order, false);
    count = 0;
    for (Element u = 0; u < order; ++u) {
      if (!current[u]) continue;
      for (Element sigma : support.elements()) {
        const Element v = g.mul(sigma, u);
        if (!next[v]) {
          next[v] = true;
          ++count;
        }
      }
    }
    current = std::move(next);
    ++m;
  }
  report.power = m;
  return report;
}

bool matrix_ergodicity(const Group& g, const SupportSet& support) {
  const std::size_t order = g.order();
  BitMatrix step(order);
  for (Element s = 0; s < order; ++s) {
    for (Element t = 0; t < order; ++t) {
      if (support.contains(g.mul(t, g.inv(s)))) step.set(s, t);
    }
  }
  // Positivity is preserved by further steps, so P^(|G|^2) decides.
  std::size_t exponent = order * order;
  BitMatrix result(order);
  for (std::size_t i = 0; i < order; ++i) result.set(i, i);
  BitMatrix base = step;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result.all_set();
}

ErgodicityReport is_ergodic(const Group& g, const SupportSet& support) {
  ErgodicityReport report = digraph_ergodicity(g, support);
  if (g.order() <= kMatrixErgodicLimit) {
    report.matrix_test = matrix_ergodicity(g, support);
    if (*report.matrix_test != report.ergodic) {
      fail(ErrorCode::kNumeric, "ergodicity routes disagree for " + g.descriptor().to_string());
    }
  }
  return report;
}

}  // namespace rwg
