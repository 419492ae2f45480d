#pragma once

#include <complex>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rwg/group.hpp"
#include "rwg/measure.hpp"

namespace rwg {

using Complex = std::complex<double>;
/// A complex-valued function on group elements, indexed like the group.
using GroupFunction = std::vector<Complex>;

GroupFunction to_function(const Measure& m);

/// A unitary matrix representation stored as an explicit table.
class Representation {
 public:
  /// `data` holds |G| column-major dim x dim blocks, one per element.
  Representation(GroupPtr group, std::size_t dim, std::string name, std::vector<Complex> data);

  const Group& group() const noexcept { return *group_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }

  Eigen::Map<const Eigen::MatrixXcd> matrix(Element g) const;
  Complex character(Element g) const;
  std::vector<Complex> character() const;

  /// Max deviation of rho(st) - rho(s)rho(t), exhaustive up to |G| = 512
  /// and over a fixed sample of pairs above.
  double homomorphism_defect() const;
  double unitarity_defect() const;
  bool is_trivial(double tolerance = 1e-12) const;

 private:
  GroupPtr group_;
  std::size_t dim_;
  std::string name_;
  std::vector<Complex> data_;
};

/// A complete list of pairwise-inequivalent irreducible representations.
struct IrrepCatalog {
  GroupPtr group;
  std::vector<Representation> reps;

  std::size_t size() const noexcept { return reps.size(); }
  std::size_t sum_dim_squared() const;
  std::size_t trivial_index() const;
};

/// Catalogue for cyclic, cube, quaternion and dihedral(4) groups; throws
/// ErrorCode::kUnsupported otherwise.
IrrepCatalog irrep_catalog(const GroupPtr& group);
bool has_irrep_catalog(const Group& group);

/// f^(rho) = sum_s f(s) rho(s).
Eigen::MatrixXcd fourier_transform(std::span<const Complex> f, const Representation& rho);
Eigen::MatrixXcd fourier_transform(const Measure& f, const Representation& rho);
std::vector<Eigen::MatrixXcd> fourier_coefficients(std::span<const Complex> f,
                                                   const IrrepCatalog& catalog);

/// f(s) = 1/|G| sum_i d_i tr(rho_i(s^-1) f^(rho_i)).
GroupFunction fourier_inversion(const IrrepCatalog& catalog,
                                const std::vector<Eigen::MatrixXcd>& coefficients);

/// (f * h)(s) = sum_t f(s t^-1) h(t).
GroupFunction convolve_functions(const Group& g, std::span<const Complex> f,
                                 std::span<const Complex> h);

/// max_i || (f*h)^(rho_i) - f^(rho_i) h^(rho_i) ||_max.
double convolution_theorem_check(std::span<const Complex> f, std::span<const Complex> h,
                                 const IrrepCatalog& catalog);

/// | sum_s f(s^-1) h(s) - 1/|G| sum_i d_i tr(f^ h^) |.
double plancherel_check(std::span<const Complex> f, std::span<const Complex> h,
                        const IrrepCatalog& catalog);

/// 1/4 sum over non-trivial irreps of d_i tr(nu^(rho_i)^k (nu^(rho_i)^k)^*),
/// with the transforms computed once.
class UpperBoundLemma {
 public:
  UpperBoundLemma(const Measure& nu, const IrrepCatalog& catalog);
  double operator()(std::size_t k) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Eigen::MatrixXcd> transforms_;
};

double diaconis_upper_bound(const Measure& nu, std::size_t k, const IrrepCatalog& catalog);

/// (chi1 | chi2) = 1/|G| sum_s chi1(s) conj(chi2(s)).
Complex character_inner_product(std::span<const Complex> chi1, std::span<const Complex> chi2);

/// Character of the regular representation: |G| at e, 0 elsewhere.
std::vector<Complex> regular_character(const Group& g);

/// 1/|G| sum_t rho2(t)^-1 h0 rho1(t) for a dim2 x dim1 matrix h0.
Eigen::MatrixXcd schur_average(const Representation& rho1, const Representation& rho2,
                               const Eigen::MatrixXcd& h0);

/// {nu^(rho)} over a catalogue of one-dimensional representations.
std::vector<Complex> abelian_transform_values(const Measure& nu, const IrrepCatalog& catalog);

/// Rows are irreps, columns conjugacy classes (by smallest member); values
/// rendered as `re+imi`.
void write_character_table_csv(std::ostream& os, const IrrepCatalog& catalog);

std::string format_complex(Complex z, int digits = 15);

}  // namespace rwg
