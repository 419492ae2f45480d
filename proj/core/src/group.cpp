#include "rwg/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <random>

#include "rwg/error.hpp"

namespace rwg {

namespace {

constexpr int kMaxCubeDimension = 24;
constexpr int kMaxHeisenbergModulus = 64;

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    fail(ErrorCode::kUsage, "malformed group descriptor '" + std::string(whole) + "'");
  }
  return value;
}

// Quaternion index = 2 * unit + negative, unit in {1, i, j, k}.
constexpr int kUnitProduct[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
constexpr bool kUnitSign[4][4] = {
    {false, false, false, false},
    {false, true, false, true},   // i*i=-1, i*j=k, i*k=-j
    {false, true, true, false},   // j*i=-k, j*j=-1, j*k=i
    {false, false, true, true},   // k*i=j, k*j=-i, k*k=-1
};

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const bool has_arg = colon != std::string_view::npos;
  const auto arg = [&] {
    if (!has_arg) fail(ErrorCode::kUsage, "group descriptor '" + std::string(text) + "' needs a size");
    return parse_int(text.substr(colon + 1), text);
  };

  GroupDescriptor d;
  if (name == "cyclic") {
    d = {GroupKind::kCyclic, arg()};
    if (d.n < 2) fail(ErrorCode::kUnsupported, "cyclic:n requires n >= 2");
  } else if (name == "cube") {
    d = {GroupKind::kCube, arg()};
    if (d.n < 1) fail(ErrorCode::kUnsupported, "cube:n requires n >= 1");
    if (d.n > kMaxCubeDimension) fail(ErrorCode::kBudget, "cube:n limited to n <= 24");
  } else if (name == "symmetric") {
    d = {GroupKind::kSymmetric, arg()};
    if (d.n < 2) fail(ErrorCode::kUnsupported, "symmetric:n requires n >= 2");
    if (d.n > kMaxSymmetricDegree) {
      fail(ErrorCode::kBudget, "symmetric:n limited to n <= 8 (memory guard)");
    }
  } else if (name == "dihedral") {
    d = {GroupKind::kDihedral, arg()};
    if (d.n != 4) fail(ErrorCode::kUnsupported, "only dihedral:4 is supported");
  } else if (name == "quaternion") {
    if (has_arg) fail(ErrorCode::kUsage, "quaternion takes no size");
    d = {GroupKind::kQuaternion, 8};
  } else if (name == "heisenberg") {
    d = {GroupKind::kHeisenberg, arg()};
    if (d.n < 2) fail(ErrorCode::kUnsupported, "heisenberg:n requires n >= 2");
    if (d.n > kMaxHeisenbergModulus) fail(ErrorCode::kBudget, "heisenberg:n limited to n <= 64");
  } else {
    fail(ErrorCode::kUnsupported, "unsupported group descriptor '" + std::string(text) + "'");
  }
  return d;
}

std::string GroupDescriptor::to_string() const {
  switch (kind) {
    case GroupKind::kCyclic: return "cyclic:" + std::to_string(n);
    case GroupKind::kCube: return "cube:" + std::to_string(n);
    case GroupKind::kSymmetric: return "symmetric:" + std::to_string(n);
    case GroupKind::kDihedral: return "dihedral:" + std::to_string(n);
    case GroupKind::kQuaternion: return "quaternion";
    case GroupKind::kHeisenberg: return "heisenberg:" + std::to_string(n);
  }
  return {};
}

std::uint64_t permutation_rank(std::span<const int> one_line) {
  const int n = static_cast<int>(one_line.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += one_line[j] < one_line[i] ? 1 : 0;
    rank += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return rank;
}

std::vector<int> permutation_unrank(std::uint64_t rank, int n) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const auto pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

Group::Group(GroupDescriptor descriptor, std::size_t order)
    : descriptor_(descriptor), order_(order) {}

std::shared_ptr<const Group> Group::build(std::string_view descriptor) {
  return build(GroupDescriptor::parse(descriptor));
}

std::shared_ptr<const Group> Group::build(const GroupDescriptor& d) {
  std::size_t order = 0;
  switch (d.kind) {
    case GroupKind::kCyclic: order = static_cast<std::size_t>(d.n); break;
    case GroupKind::kCube: order = std::size_t{1} << d.n; break;
    case GroupKind::kSymmetric: order = factorial(d.n); break;
    case GroupKind::kDihedral: order = 8; break;
    case GroupKind::kQuaternion: order = 8; break;
    case GroupKind::kHeisenberg: order = static_cast<std::size_t>(d.n) * d.n * d.n; break;
  }
  std::shared_ptr<Group> g(new Group(d, order));
  g->finish();
  return g;
}

Element Group::rule_mul(Element a, Element b) const {
  const int n = descriptor_.n;
  switch (descriptor_.kind) {
    case GroupKind::kCyclic:
      return static_cast<Element>((a + b) % static_cast<Element>(n));
    case GroupKind::kCube:
      return a ^ b;
    case GroupKind::kSymmetric: {
      const auto sa = permutation_unrank(a, n);
      const auto sb = permutation_unrank(b, n);
      std::vector<int> c(n);
      for (int p = 0; p < n; ++p) c[p] = sa[sb[p]];
      return static_cast<Element>(permutation_rank(c));
    }
    case GroupKind::kDihedral: {
      const Element ra = a % 4, fa = a / 4, rb = b % 4, fb = b / 4;
      const Element rot = fa == 0 ? (ra + rb) % 4 : (ra + 4 - rb) % 4;
      return rot + 4 * ((fa + fb) % 2);
    }
    case GroupKind::kQuaternion: {
      const int ua = static_cast<int>(a / 2), ub = static_cast<int>(b / 2);
      const bool neg = ((a % 2) != 0) ^ ((b % 2) != 0) ^ kUnitSign[ua][ub];
      return static_cast<Element>(2 * kUnitProduct[ua][ub] + (neg ? 1 : 0));
    }
    case GroupKind::kHeisenberg: {
      const auto [a1, b1, c1] = heisenberg_triple(a);
      const auto [a2, b2, c2] = heisenberg_triple(b);
      const int x = (a1 + a2) % n;
      const int y = (b1 + b2 + a1 * c2) % n;
      const int z = (c1 + c2) % n;
      return static_cast<Element>((x * n + y) * n + z);
    }
  }
  return 0;
}

void Group::finish() {
  const int n = descriptor_.n;
  labels_.resize(order_);
  inverse_.resize(order_);

  switch (descriptor_.kind) {
    case GroupKind::kCyclic:
      for (Element a = 0; a < order_; ++a) {
        labels_[a] = std::to_string(a);
        inverse_[a] = static_cast<Element>((n - static_cast<int>(a)) % n);
      }
      generators_ = {1};
      break;
    case GroupKind::kCube:
      for (Element a = 0; a < order_; ++a) {
        std::string s(static_cast<std::size_t>(n), '0');
        for (int i = 0; i < n; ++i) {
          if ((a >> (n - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
        }
        labels_[a] = std::move(s);
        inverse_[a] = a;
      }
      for (int i = 0; i < n; ++i) generators_.push_back(Element{1} << (n - 1 - i));
      break;
    case GroupKind::kSymmetric: {
      for (Element a = 0; a < order_; ++a) {
        const auto p = permutation_unrank(a, n);
        std::string s;
        std::vector<int> q(n);
        for (int i = 0; i < n; ++i) {
          s += static_cast<char>('1' + p[i]);
          q[p[i]] = i;
        }
        labels_[a] = std::move(s);
        inverse_[a] = static_cast<Element>(permutation_rank(q));
      }
      std::vector<int> swap01(n), cycle(n);
      std::iota(swap01.begin(), swap01.end(), 0);
      std::swap(swap01[0], swap01[1]);
      for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
      generators_ = {static_cast<Element>(permutation_rank(swap01)),
                     static_cast<Element>(permutation_rank(cycle))};
      break;
    }
    case GroupKind::kDihedral:
      for (Element a = 0; a < 8; ++a) {
        labels_[a] = "r" + std::to_string(a % 4) + (a >= 4 ? "s" : "");
        inverse_[a] = a < 4 ? (4 - a) % 4 : a;
      }
      generators_ = {1, 4};
      break;
    case GroupKind::kQuaternion: {
      static const char* const names[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
      for (Element a = 0; a < 8; ++a) {
        labels_[a] = names[a];
        // 1 and -1 are self-inverse; the other units invert by sign.
        inverse_[a] = a < 2 ? a : (a ^ 1u);
      }
      generators_ = {2, 4};
      break;
    }
    case GroupKind::kHeisenberg:
      for (Element a = 0; a < order_; ++a) {
        const auto [x, y, z] = heisenberg_triple(a);
        labels_[a] = std::to_string(x) + "." + std::to_string(y) + "." + std::to_string(z);
        const int ix = (n - x) % n;
        const int iy = ((x * z - y) % n + n) % n;
        const int iz = (n - z) % n;
        inverse_[a] = static_cast<Element>((ix * n + iy) * n + iz);
      }
      generators_ = {static_cast<Element>(n * n), 1};  // (1,0,0) and (0,0,1)
      break;
  }

  if (order_ <= kTableOrderLimit) {
    table_.resize(order_ * order_);
    for (Element a = 0; a < order_; ++a) {
      for (Element b = 0; b < order_; ++b) table_[a * order_ + b] = rule_mul(a, b);
    }
  }
}

Element Group::mul(Element a, Element b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  return rule_mul(a, b);
}

Element Group::element(std::size_t index) const {
  if (index >= order_) {
    fail(ErrorCode::kUsage, "element index " + std::to_string(index) + " out of range for " +
                                descriptor_.to_string());
  }
  return static_cast<Element>(index);
}

std::optional<Element> Group::find(std::string_view label) const {
  for (Element a = 0; a < order_; ++a) {
    if (labels_[a] == label) return a;
  }
  return std::nullopt;
}

bool Group::is_abelian() const {
  switch (descriptor_.kind) {
    case GroupKind::kCyclic:
    case GroupKind::kCube: return true;
    case GroupKind::kSymmetric: return descriptor_.n <= 2;
    case GroupKind::kHeisenberg:
    case GroupKind::kDihedral:
    case GroupKind::kQuaternion: return false;
  }
  return false;
}

bool Group::check_axioms(std::size_t exhaustive_limit) const {
  const Element e = identity();
  for (Element g = 0; g < order_; ++g) {
    if (mul(e, g) != g || mul(g, e) != g) return false;
    if (mul(g, inv(g)) != e || mul(inv(g), g) != e) return false;
  }
  if (order_ <= exhaustive_limit) {
    for (Element a = 0; a < order_; ++a) {
      for (Element b = 0; b < order_; ++b) {
        const Element ab = mul(a, b);
        for (Element c = 0; c < order_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
  for (int trial = 0; trial < 200000; ++trial) {
    const Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

std::vector<int> Group::permutation(Element a) const {
  if (descriptor_.kind != GroupKind::kSymmetric) {
    fail(ErrorCode::kUnsupported, "permutation view requires a symmetric group");
  }
  return permutation_unrank(a, descriptor_.n);
}

Element Group::from_permutation(std::span<const int> one_line) const {
  if (descriptor_.kind != GroupKind::kSymmetric ||
      static_cast<int>(one_line.size()) != descriptor_.n) {
    fail(ErrorCode::kUnsupported, "permutation does not match " + descriptor_.to_string());
  }
  return static_cast<Element>(permutation_rank(one_line));
}

std::uint32_t Group::bits(Element a) const {
  if (descriptor_.kind != GroupKind::kCube) {
    fail(ErrorCode::kUnsupported, "bit-vector view requires a cube group");
  }
  return a;
}

std::array<int, 3> Group::heisenberg_triple(Element a) const {
  const int n = descriptor_.n;
  const int v = static_cast<int>(a);
  return {v / (n * n), (v / n) % n, v % n};
}

SupportSet::SupportSet(std::vector<Element> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool SupportSet::contains(Element g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::size_t ConjugacyPartition::class_of(Element g) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (std::binary_search(classes[i].begin(), classes[i].end(), g)) return i;
  }
  return classes.size();
}

ConjugacyPartition conjugacy_classes(const Group& g) {
  // Orbits under conjugation by the generators equal orbits under the
  // whole group.
  const std::size_t order = g.order();
  std::vector<bool> seen(order, false);
  ConjugacyPartition out;
  for (Element start = 0; start < order; ++start) {
    if (seen[start]) continue;
    std::vector<Element> cls{start};
    seen[start] = true;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      const Element x = cls[head];
      for (Element t : g.generators()) {
        for (Element c : {g.mul(g.mul(t, x), g.inv(t)), g.mul(g.mul(g.inv(t), x), t)}) {
          if (!seen[c]) {
            seen[c] = true;
            cls.push_back(c);
          }
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

SupportSet generated_subgroup(const Group& g, const SupportSet& s) {
  if (s.empty()) fail(ErrorCode::kUsage, "generated_subgroup needs a nonempty set");
  std::vector<bool> seen(g.order(), false);
  std::deque<Element> queue;
  std::vector<Element> members;
  for (Element x : s.elements()) {
    seen[x] = true;
    queue.push_back(x);
    members.push_back(x);
  }
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element sigma : s.elements()) {
      const Element y = g.mul(x, sigma);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
        members.push_back(y);
      }
    }
  }
  return SupportSet(std::move(members));
}

}  // namespace rwg
