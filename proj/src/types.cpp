#include "ert/types.hpp"

#include <cmath>

#include "ert/interp.hpp"

namespace ert {

RadialGrid RadialGrid::uniform(int count, double r_max) {
  if (count < 1) throw std::invalid_argument("RadialGrid: count must be >= 1");
  if (!(r_max > 0.0)) throw std::invalid_argument("RadialGrid: r_max must be > 0");
  RadialGrid g;
  g.nodes_.resize(static_cast<size_t>(count));
  const double h = r_max / count;
  for (int j = 0; j < count; ++j) g.nodes_[static_cast<size_t>(j)] = h * (j + 1);
  g.uniform_ = true;
  return g;
}

RadialGrid RadialGrid::from_nodes(std::vector<double> nodes) {
  if (nodes.empty()) throw std::invalid_argument("RadialGrid: empty node list");
  if (nodes.front() <= 0.0) throw std::invalid_argument("RadialGrid: nodes must be positive");
  for (size_t j = 1; j < nodes.size(); ++j)
    if (nodes[j] <= nodes[j - 1]) throw std::invalid_argument("RadialGrid: nodes must be strictly increasing");
  RadialGrid g;
  g.nodes_ = std::move(nodes);
  g.uniform_ = true;
  if (g.nodes_.size() > 1) {
    const double h = g.nodes_[1] - g.nodes_[0];
    for (size_t j = 1; j < g.nodes_.size(); ++j)
      if (std::abs(g.nodes_[j] - g.nodes_[j - 1] - h) > 1e-12 * std::max(1.0, h)) {
        g.uniform_ = false;
        break;
      }
  }
  return g;
}

double RadialGrid::step() const {
  if (!uniform_) throw std::invalid_argument("RadialGrid: step() on non-uniform grid");
  return nodes_.size() > 1 ? nodes_[1] - nodes_[0] : nodes_[0];
}

DetectorGrid::DetectorGrid(int count, double s_max) : count_(count), s_max_(s_max) {
  if (count < 2) throw std::invalid_argument("DetectorGrid: count must be >= 2");
  if (!(s_max >= 1.0)) throw std::invalid_argument("DetectorGrid: s_max must be >= 1");
  step_ = 2.0 * s_max / (count - 1);
}

AngleGrid::AngleGrid(int count) : count_(count) {
  if (count < 2 || count % 2 != 0) throw std::invalid_argument("AngleGrid: count must be even and >= 2");
}

double AngleGrid::node(int k) const {
  return 2.0 * M_PI * k / count_;
}

Attenuation Attenuation::constant(cplx mu) {
  Attenuation a;
  a.kind_ = Kind::Constant;
  a.mu_ = mu;
  return a;
}

Attenuation Attenuation::radial(RadialGrid grid, std::vector<cplx> profile) {
  if (grid.count() != static_cast<int>(profile.size()))
    throw std::invalid_argument("Attenuation: profile size does not match grid");
  if (!grid.is_uniform()) throw std::invalid_argument("Attenuation: radial profile requires a uniform grid");
  for (const cplx& v : profile)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("Attenuation: profile values must be finite");
  Attenuation a;
  a.kind_ = Kind::Radial;
  a.grid_ = std::move(grid);
  a.profile_ = std::move(profile);
  return a;
}

cplx Attenuation::mu() const {
  if (kind_ != Kind::Constant) throw std::domain_error("Attenuation: mu() on non-constant attenuation");
  return mu_;
}

const RadialGrid& Attenuation::grid() const {
  if (kind_ != Kind::Radial) throw std::domain_error("Attenuation: grid() on non-radial attenuation");
  return grid_;
}

const std::vector<cplx>& Attenuation::profile() const {
  if (kind_ != Kind::Radial) throw std::domain_error("Attenuation: profile() on non-radial attenuation");
  return profile_;
}

cplx Attenuation::eta_at(double rho) const {
  if (kind_ == Kind::Constant) return mu_;
  if (kind_ == Kind::None) return cplx(0.0, 0.0);
  const double first = grid_.first();
  const double h = grid_.step();
  if (rho > grid_.last() + 0.5 * h) return cplx(0.0, 0.0);
  // Below the first node: evaluate the boundary cubic (smooth profiles
  // continue to r=0; zeroing here would put a jump inside the object).
  const double x = std::max(rho, 0.0);
  return interp_complex(profile_.data(), static_cast<int>(profile_.size()), first, h, x,
                        /*extrapolate_low=*/true);
}

Attenuation Attenuation::negated() const {
  Attenuation a = *this;
  a.mu_ = -a.mu_;
  for (cplx& v : a.profile_) v = -v;
  return a;
}

bool Attenuation::operator==(const Attenuation& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == Kind::Constant) return mu_ == o.mu_;
  if (kind_ == Kind::Radial)
    return grid_.nodes() == o.grid_.nodes() && profile_ == o.profile_;
  return true;
}

PolarImage::PolarImage(int n_min, int n_max, RadialGrid grid)
    : n_min_(n_min), n_max_(n_max), grid_(std::move(grid)) {
  if (n_max < n_min) throw std::invalid_argument("PolarImage: n_max < n_min");
  values_.assign(static_cast<size_t>(harmonic_count()) * grid_.count(), cplx(0.0, 0.0));
}

size_t PolarImage::index(int n, int j) const {
  return static_cast<size_t>(n - n_min_) * grid_.count() + static_cast<size_t>(j);
}

Sinogram::Sinogram(DetectorGrid det, AngleGrid ang, Attenuation att)
    : det_(det), ang_(ang), att_(std::move(att)) {
  values_.assign(static_cast<size_t>(det_.count()) * ang_.count(), cplx(0.0, 0.0));
}

HarmonicSinogram::HarmonicSinogram(int n_min, int n_max, DetectorGrid det, Attenuation att)
    : n_min_(n_min), n_max_(n_max), det_(det), att_(std::move(att)) {
  if (n_max < n_min) throw std::invalid_argument("HarmonicSinogram: n_max < n_min");
  values_.assign(static_cast<size_t>(harmonic_count()) * det_.count(), cplx(0.0, 0.0));
}

size_t HarmonicSinogram::index(int n, int i) const {
  return static_cast<size_t>(n - n_min_) * det_.count() + static_cast<size_t>(i);
}

FourierSinogram::FourierSinogram(int n_min, int n_max, int omega_count, double omega_first,
                                 double omega_step)
    : n_min_(n_min), n_max_(n_max), omega_count_(omega_count), omega_first_(omega_first),
      omega_step_(omega_step) {
  if (n_max < n_min) throw std::invalid_argument("FourierSinogram: n_max < n_min");
  values_.assign(static_cast<size_t>(harmonic_count()) * omega_count_, cplx(0.0, 0.0));
}

size_t FourierSinogram::index(int n, int k) const {
  return static_cast<size_t>(n - n_min_) * omega_count_ + static_cast<size_t>(k);
}

double rel_l2(const std::vector<cplx>& a, const std::vector<cplx>& b, const RadialGrid& grid) {
  if (a.size() != b.size() || static_cast<int>(a.size()) != grid.count())
    throw std::invalid_argument("rel_l2: size mismatch");
  double num = 0.0, den = 0.0;
  for (int j = 0; j < grid.count(); ++j) {
    const double w = grid.node(j);
    num += std::norm(a[static_cast<size_t>(j)] - b[static_cast<size_t>(j)]) * w;
    den += std::norm(b[static_cast<size_t>(j)]) * w;
  }
  if (den == 0.0) return std::sqrt(num);
  return std::sqrt(num / den);
}

}  // namespace ert
