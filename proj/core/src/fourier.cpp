#include "rwg/fourier.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "rwg/csv.hpp"
#include "rwg/error.hpp"

namespace rwg {

namespace {

using Mat = Eigen::MatrixXcd;

std::vector<Complex> pack(const std::vector<Mat>& per_element) {
  std::vector<Complex> out;
  for (const Mat& m : per_element) out.insert(out.end(), m.data(), m.data() + m.size());
  return out;
}

Representation one_dimensional(const GroupPtr& g, std::string name,
                               const std::vector<Complex>& values) {
  return Representation(g, 1, std::move(name), values);
}

IrrepCatalog cyclic_catalog(const GroupPtr& g) {
  const std::size_t n = g->order();
  IrrepCatalog c{g, {}};
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Complex> values(n);
    for (std::size_t s = 0; s < n; ++s) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((t * s) % n) /
                           static_cast<double>(n);
      values[s] = std::polar(1.0, angle);
    }
    c.reps.push_back(one_dimensional(g, "rho" + std::to_string(t), values));
  }
  return c;
}

IrrepCatalog cube_catalog(const GroupPtr& g) {
  const std::size_t n = g->order();
  IrrepCatalog c{g, {}};
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Complex> values(n);
    for (std::size_t s = 0; s < n; ++s) {
      values[s] = std::popcount(t & s) % 2 == 0 ? 1.0 : -1.0;
    }
    c.reps.push_back(one_dimensional(g, "rho" + g->label(static_cast<Element>(t)), values));
  }
  return c;
}

IrrepCatalog quaternion_catalog(const GroupPtr& g) {
  IrrepCatalog c{g, {}};
  const Complex i(0.0, 1.0);
  // Units 1, i, j, k at indices 0, 2, 4, 6; index + 1 is the negative.
  const auto in_subgroup = [](Element x, int unit) {
    const int u = static_cast<int>(x / 2);
    return u == 0 || u == unit;
  };
  c.reps.push_back(one_dimensional(g, "trivial", std::vector<Complex>(8, 1.0)));
  for (int unit : {1, 2, 3}) {
    std::vector<Complex> values(8);
    for (Element x = 0; x < 8; ++x) values[x] = in_subgroup(x, unit) ? 1.0 : -1.0;
    static const char* const names[] = {"", "rho_i", "rho_j", "rho_k"};
    c.reps.push_back(one_dimensional(g, names[unit], values));
  }
  Mat one = Mat::Identity(2, 2);
  Mat ri(2, 2), rj(2, 2), rk(2, 2);
  ri << i, 0.0, 0.0, -i;
  rj << 0.0, i, i, 0.0;
  rk << 0.0, -1.0, 1.0, 0.0;
  std::vector<Mat> table;
  for (const Mat& m : {one, ri, rj, rk}) {
    table.push_back(m);
    table.push_back(-m);
  }
  c.reps.emplace_back(g, 2, "rho", pack(table));
  return c;
}

IrrepCatalog dihedral_catalog(const GroupPtr& g) {
  IrrepCatalog c{g, {}};
  // r^a s^b at index a + 4b; one-dimensional characters alpha^a beta^b.
  for (const auto& [alpha, beta, name] :
       {std::tuple{1.0, 1.0, "trivial"}, std::tuple{1.0, -1.0, "sign_s"},
        std::tuple{-1.0, 1.0, "sign_r"}, std::tuple{-1.0, -1.0, "sign_rs"}}) {
    std::vector<Complex> values(8);
    for (Element x = 0; x < 8; ++x) {
      values[x] = std::pow(alpha, static_cast<double>(x % 4)) * std::pow(beta, static_cast<double>(x / 4));
    }
    c.reps.push_back(one_dimensional(g, name, values));
  }
  Mat rot(2, 2), ref(2, 2);
  rot << 0.0, -1.0, 1.0, 0.0;
  ref << 1.0, 0.0, 0.0, -1.0;
  std::vector<Mat> table(8);
  for (Element x = 0; x < 8; ++x) {
    Mat m = Mat::Identity(2, 2);
    for (Element a = 0; a < x % 4; ++a) m = m * rot;
    if (x >= 4) m = m * ref;
    table[x] = m;
  }
  c.reps.emplace_back(g, 2, "rho", pack(table));
  return c;
}

}  // namespace

GroupFunction to_function(const Measure& m) {
  return GroupFunction(m.weights().begin(), m.weights().end());
}

Representation::Representation(GroupPtr group, std::size_t dim, std::string name,
                               std::vector<Complex> data)
    : group_(std::move(group)), dim_(dim), name_(std::move(name)), data_(std::move(data)) {
  if (data_.size() != group_->order() * dim_ * dim_) {
    fail(ErrorCode::kUsage, "representation table has the wrong size");
  }
}

Eigen::Map<const Eigen::MatrixXcd> Representation::matrix(Element g) const {
  const auto d = static_cast<Eigen::Index>(dim_);
  return Eigen::Map<const Eigen::MatrixXcd>(data_.data() + g * dim_ * dim_, d, d);
}

Complex Representation::character(Element g) const { return matrix(g).trace(); }

std::vector<Complex> Representation::character() const {
  std::vector<Complex> chi(group_->order());
  for (Element g = 0; g < chi.size(); ++g) chi[g] = character(g);
  return chi;
}

double Representation::homomorphism_defect() const {
  const std::size_t n = group_->order();
  double worst = 0.0;
  const auto check = [&](Element s, Element t) {
    const Mat diff = matrix(group_->mul(s, t)) - matrix(s) * matrix(t);
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  };
  if (n <= 512) {
    for (Element s = 0; s < n; ++s) {
      for (Element t = 0; t < n; ++t) check(s, t);
    }
  } else {
    std::mt19937_64 rng(0x4e9);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int i = 0; i < 100000; ++i) check(pick(rng), pick(rng));
  }
  return worst;
}

double Representation::unitarity_defect() const {
  double worst = 0.0;
  const auto d = static_cast<Eigen::Index>(dim_);
  for (Element g = 0; g < group_->order(); ++g) {
    const Mat m = matrix(g);
    worst = std::max(worst, (m.adjoint() * m - Mat::Identity(d, d)).cwiseAbs().maxCoeff());
  }
  return worst;
}

bool Representation::is_trivial(double tolerance) const {
  if (dim_ != 1) return false;
  for (Element g = 0; g < group_->order(); ++g) {
    if (std::abs(data_[g] - 1.0) > tolerance) return false;
  }
  return true;
}

std::size_t IrrepCatalog::sum_dim_squared() const {
  std::size_t sum = 0;
  for (const auto& r : reps) sum += r.dim() * r.dim();
  return sum;
}

std::size_t IrrepCatalog::trivial_index() const {
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (reps[i].is_trivial()) return i;
  }
  fail(ErrorCode::kNumeric, "catalogue has no trivial representation");
}

bool has_irrep_catalog(const Group& group) {
  switch (group.descriptor().kind) {
    case GroupKind::kCyclic:
    case GroupKind::kCube:
    case GroupKind::kQuaternion:
    case GroupKind::kDihedral: return true;
    case GroupKind::kSymmetric:
    case GroupKind::kHeisenberg: return false;
  }
  return false;
}

IrrepCatalog irrep_catalog(const GroupPtr& group) {
  switch (group->descriptor().kind) {
    case GroupKind::kCyclic: return cyclic_catalog(group);
    case GroupKind::kCube: return cube_catalog(group);
    case GroupKind::kQuaternion: return quaternion_catalog(group);
    case GroupKind::kDihedral: return dihedral_catalog(group);
    case GroupKind::kSymmetric:
    case GroupKind::kHeisenberg: break;
  }
  fail(ErrorCode::kUnsupported,
       "no irreducible representation catalogue for " + group->descriptor().to_string());
}

Eigen::MatrixXcd fourier_transform(std::span<const Complex> f, const Representation& rho) {
  if (f.size() != rho.group().order()) {
    fail(ErrorCode::kUsage, "function and representation live on different groups");
  }
  const auto d = static_cast<Eigen::Index>(rho.dim());
  Mat out = Mat::Zero(d, d);
  for (Element s = 0; s < f.size(); ++s) {
    if (f[s] != 0.0) out += f[s] * rho.matrix(s);
  }
  return out;
}

Eigen::MatrixXcd fourier_transform(const Measure& f, const Representation& rho) {
  if (f.group().descriptor() != rho.group().descriptor()) {
    fail(ErrorCode::kUsage, "measure and representation live on different groups");
  }
  const GroupFunction values = to_function(f);
  return fourier_transform(values, rho);
}

std::vector<Eigen::MatrixXcd> fourier_coefficients(std::span<const Complex> f,
                                                   const IrrepCatalog& catalog) {
  std::vector<Mat> out;
  out.reserve(catalog.size());
  for (const auto& rho : catalog.reps) out.push_back(fourier_transform(f, rho));
  return out;
}

GroupFunction fourier_inversion(const IrrepCatalog& catalog,
                                const std::vector<Eigen::MatrixXcd>& coefficients) {
  const Group& g = *catalog.group;
  if (coefficients.size() != catalog.size() || catalog.sum_dim_squared() != g.order()) {
    fail(ErrorCode::kUsage, "Fourier inversion needs a complete catalogue of coefficients");
  }
  const double n = static_cast<double>(g.order());
  GroupFunction f(g.order(), 0.0);
  for (Element s = 0; s < g.order(); ++s) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const auto& rho = catalog.reps[i];
      sum += static_cast<double>(rho.dim()) * (rho.matrix(g.inv(s)) * coefficients[i]).trace();
    }
    f[s] = sum / n;
  }
  return f;
}

GroupFunction convolve_functions(const Group& g, std::span<const Complex> f,
                                 std::span<const Complex> h) {
  GroupFunction out(g.order(), 0.0);
  for (Element t = 0; t < g.order(); ++t) {
    if (h[t] == 0.0) continue;
    for (Element r = 0; r < g.order(); ++r) {
      if (f[r] != 0.0) out[g.mul(r, t)] += f[r] * h[t];
    }
  }
  return out;
}

double convolution_theorem_check(std::span<const Complex> f, std::span<const Complex> h,
                                 const IrrepCatalog& catalog) {
  const GroupFunction fh = convolve_functions(*catalog.group, f, h);
  double worst = 0.0;
  for (const auto& rho : catalog.reps) {
    const Mat lhs = fourier_transform(fh, rho);
    const Mat rhs = fourier_transform(f, rho) * fourier_transform(h, rho);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

double plancherel_check(std::span<const Complex> f, std::span<const Complex> h,
                        const IrrepCatalog& catalog) {
  const Group& g = *catalog.group;
  Complex lhs = 0.0;
  for (Element s = 0; s < g.order(); ++s) lhs += f[g.inv(s)] * h[s];
  Complex rhs = 0.0;
  for (const auto& rho : catalog.reps) {
    rhs += static_cast<double>(rho.dim()) *
           (fourier_transform(f, rho) * fourier_transform(h, rho)).trace();
  }
  rhs /= static_cast<double>(g.order());
  return std::abs(lhs - rhs);
}

UpperBoundLemma::UpperBoundLemma(const Measure& nu, const IrrepCatalog& catalog) {
  if (!nu.is_probability()) fail(ErrorCode::kUsage, "upper bound lemma needs a probability");
  if (catalog.sum_dim_squared() != nu.group().order()) {
    fail(ErrorCode::kUsage, "upper bound lemma needs a complete catalogue");
  }
  const std::size_t trivial = catalog.trivial_index();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (i == trivial) continue;
    dims_.push_back(catalog.reps[i].dim());
    transforms_.push_back(fourier_transform(nu, catalog.reps[i]));
  }
}

double UpperBoundLemma::operator()(std::size_t k) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < transforms_.size(); ++i) {
    const Mat& t = transforms_[i];
    double term = 0.0;
    if (t.size() == 1) {
      term = std::pow(std::norm(t(0, 0)), static_cast<double>(k));
    } else {
      Mat power = Mat::Identity(t.rows(), t.cols());
      Mat base = t;
      for (std::size_t e = k; e > 0; e >>= 1) {
        if (e & 1u) power = power * base;
        if (e > 1) base = base * base;
      }
      term = (power * power.adjoint()).trace().real();
    }
    sum += static_cast<double>(dims_[i]) * term;
  }
  return 0.25 * sum;
}

double diaconis_upper_bound(const Measure& nu, std::size_t k, const IrrepCatalog& catalog) {
  return UpperBoundLemma(nu, catalog)(k);
}

Complex character_inner_product(std::span<const Complex> chi1, std::span<const Complex> chi2) {
  if (chi1.size() != chi2.size()) fail(ErrorCode::kUsage, "characters of different groups");
  Complex sum = 0.0;
  for (std::size_t s = 0; s < chi1.size(); ++s) sum += chi1[s] * std::conj(chi2[s]);
  return sum / static_cast<double>(chi1.size());
}

std::vector<Complex> regular_character(const Group& g) {
  std::vector<Complex> chi(g.order(), 0.0);
  chi[g.identity()] = static_cast<double>(g.order());
  return chi;
}

Eigen::MatrixXcd schur_average(const Representation& rho1, const Representation& rho2,
                               const Eigen::MatrixXcd& h0) {
  const Group& g = rho1.group();
  Mat sum = Mat::Zero(h0.rows(), h0.cols());
  for (Element t = 0; t < g.order(); ++t) {
    sum += rho2.matrix(g.inv(t)) * h0 * rho1.matrix(t);
  }
  return sum / static_cast<double>(g.order());
}

std::vector<Complex> abelian_transform_values(const Measure& nu, const IrrepCatalog& catalog) {
  std::vector<Complex> out;
  for (const auto& rho : catalog.reps) {
    if (rho.dim() != 1) fail(ErrorCode::kUsage, "catalogue is not one-dimensional");
    out.push_back(fourier_transform(nu, rho)(0, 0));
  }
  return out;
}

std::string format_complex(Complex z, int digits) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::string out = csv::number(z.real(), digits);
  out += (std::signbit(im) ? "-" : "+");
  out += csv::number(std::abs(im), digits);
  out += "i";
  return out;
}

void write_character_table_csv(std::ostream& os, const IrrepCatalog& catalog) {
  const Group& g = *catalog.group;
  const ConjugacyPartition classes = conjugacy_classes(g);
  std::vector<std::string> header{"irrep"};
  for (const auto& cls : classes.classes) header.push_back(csv::sanitize(g.label(cls.front())));
  csv::row(os, header);
  for (const auto& rho : catalog.reps) {
    std::vector<std::string> cells{csv::sanitize(rho.name())};
    for (const auto& cls : classes.classes) {
      Complex chi = rho.character(cls.front());
      // Snap rounding noise so the table reads cleanly.
      if (std::abs(chi.real()) < 1e-12) chi.real(0.0);
      if (std::abs(chi.imag()) < 1e-12) chi.imag(0.0);
      cells.push_back(format_complex(chi));
    }
    csv::row(os, cells);
  }
}

}  // namespace rwg
