#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ert {

using cplx = std::complex<double>;

// Thrown when a file cannot be decoded.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an iterative scheme fails to reach its accuracy target.
struct accuracy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Radial grid, strictly increasing positive nodes. Object grids live on
// (0, 1]; attenuation profile grids may extend past 1 so that exterior
// kernel evaluations stay covered.
class RadialGrid {
 public:
  RadialGrid() = default;
  static RadialGrid uniform(int count, double r_max = 1.0);
  static RadialGrid from_nodes(std::vector<double> nodes);

  int count() const { return static_cast<int>(nodes_.size()); }
  double node(int j) const { return nodes_[static_cast<size_t>(j)]; }
  const std::vector<double>& nodes() const { return nodes_; }
  bool is_uniform() const { return uniform_; }
  double first() const { return nodes_.front(); }
  double last() const { return nodes_.back(); }
  double step() const;

 private:
  std::vector<double> nodes_;
  bool uniform_ = true;
};

// Uniform detector grid, symmetric about 0, spanning [-s_max, s_max].
class DetectorGrid {
 public:
  DetectorGrid() = default;
  DetectorGrid(int count, double s_max);

  int count() const { return count_; }
  double s_max() const { return s_max_; }
  double step() const { return step_; }
  double node(int i) const { return -s_max_ + step_ * i; }
  // Index of the node at -s_i; exact by symmetry of the construction.
  int mirror_index(int i) const { return count_ - 1 - i; }

 private:
  int count_ = 0;
  double s_max_ = 0.0;
  double step_ = 0.0;
};

// theta_k = 2*pi*k/K, K even.
class AngleGrid {
 public:
  AngleGrid() = default;
  explicit AngleGrid(int count);
  int count() const { return count_; }
  double node(int k) const;

 private:
  int count_ = 0;
};

// Constant complex mu, or a radial profile eta(r) sampled on a uniform grid.
class Attenuation {
 public:
  enum class Kind { None, Constant, Radial };

  Attenuation() = default;
  static Attenuation none() { return Attenuation(); }
  static Attenuation constant(cplx mu);
  static Attenuation radial(RadialGrid grid, std::vector<cplx> profile);

  Kind kind() const { return kind_; }
  bool is_constant() const { return kind_ == Kind::Constant; }
  bool is_radial() const { return kind_ == Kind::Radial; }
  bool is_none() const { return kind_ == Kind::None; }

  cplx mu() const;
  const RadialGrid& grid() const;
  const std::vector<cplx>& profile() const;

  // Profile value at radius rho. Cubic interpolation on the sample grid,
  // cubic extrapolation below the first node (the profile is smooth down to
  // r=0), zero beyond the last node (compact support).
  cplx eta_at(double rho) const;

  // mu -> -mu, eta -> -eta. Used by the inversion kernels.
  Attenuation negated() const;

  bool operator==(const Attenuation& o) const;

 private:
  Kind kind_ = Kind::None;
  cplx mu_{0.0, 0.0};
  RadialGrid grid_;
  std::vector<cplx> profile_;
};

// Circular-harmonic radial profiles f_n(r_j), n in [n_min, n_max].
class PolarImage {
 public:
  PolarImage() = default;
  PolarImage(int n_min, int n_max, RadialGrid grid);

  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }
  int harmonic_count() const { return n_max_ - n_min_ + 1; }
  const RadialGrid& grid() const { return grid_; }

  cplx& at(int n, int j) { return values_[index(n, j)]; }
  cplx at(int n, int j) const { return values_[index(n, j)]; }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }

 private:
  size_t index(int n, int j) const;
  int n_min_ = 0, n_max_ = 0;
  RadialGrid grid_;
  std::vector<cplx> values_;
};

// Sampled p(s_i, theta_k). Angle index is the outer (row) index.
class Sinogram {
 public:
  Sinogram() = default;
  Sinogram(DetectorGrid det, AngleGrid ang, Attenuation att);

  const DetectorGrid& det() const { return det_; }
  const AngleGrid& ang() const { return ang_; }
  const Attenuation& att() const { return att_; }

  cplx& at(int k, int i) { return values_[static_cast<size_t>(k) * det_.count() + i]; }
  cplx at(int k, int i) const { return values_[static_cast<size_t>(k) * det_.count() + i]; }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }

 private:
  DetectorGrid det_;
  AngleGrid ang_;
  Attenuation att_;
  std::vector<cplx> values_;
};

// Per-harmonic detector profiles p_n(s_i). Harmonic index is the outer index.
class HarmonicSinogram {
 public:
  HarmonicSinogram() = default;
  HarmonicSinogram(int n_min, int n_max, DetectorGrid det, Attenuation att);

  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }
  int harmonic_count() const { return n_max_ - n_min_ + 1; }
  const DetectorGrid& det() const { return det_; }
  const Attenuation& att() const { return att_; }

  cplx& at(int n, int i) { return values_[index(n, i)]; }
  cplx at(int n, int i) const { return values_[index(n, i)]; }
  const cplx* harmonic(int n) const { return values_.data() + index(n, 0); }
  cplx* harmonic(int n) { return values_.data() + index(n, 0); }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }

 private:
  size_t index(int n, int i) const;
  int n_min_ = 0, n_max_ = 0;
  DetectorGrid det_;
  Attenuation att_;
  std::vector<cplx> values_;
};

// p~_n(omega) on a uniform frequency grid symmetric about 0.
class FourierSinogram {
 public:
  FourierSinogram() = default;
  FourierSinogram(int n_min, int n_max, int omega_count, double omega_first, double omega_step);

  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }
  int harmonic_count() const { return n_max_ - n_min_ + 1; }
  int omega_count() const { return omega_count_; }
  double omega(int k) const { return omega_first_ + omega_step_ * k; }
  double omega_first() const { return omega_first_; }
  double omega_step() const { return omega_step_; }
  // Index of -omega(k); the grid is symmetric by construction.
  int mirror_index(int k) const { return omega_count_ - 1 - k; }

  cplx& at(int n, int k) { return values_[index(n, k)]; }
  cplx at(int n, int k) const { return values_[index(n, k)]; }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }

 private:
  size_t index(int n, int k) const;
  int n_min_ = 0, n_max_ = 0;
  int omega_count_ = 0;
  double omega_first_ = 0.0, omega_step_ = 0.0;
  std::vector<cplx> values_;
};

// sgn(n) = +1 for n >= 0, -1 for n < 0.
inline int sgn_harmonic(int n) { return n >= 0 ? 1 : -1; }
inline double sgn(double x) { return x >= 0.0 ? 1.0 : -1.0; }

// Weighted relative L2 distance between two radial profiles, sqrt(sum |a-b|^2 r) / sqrt(sum |b|^2 r).
double rel_l2(const std::vector<cplx>& a, const std::vector<cplx>& b, const RadialGrid& grid);

}  // namespace ert
