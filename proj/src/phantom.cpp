#include "ert/phantom.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace ert {

namespace {
using nlohmann::json;

double ipow(double x, int e) {
  double acc = 1.0;
  for (int k = 0; k < e; ++k) acc *= x;
  return acc;
}
}  // namespace

void PhantomSpec::validate() const {
  for (const HarmonicBump& t : harmonics) {
    if (t.q < 3) throw std::invalid_argument("PhantomSpec: harmonic bump q must be >= 3");
  }
  for (const OffCenterBump& t : bumps) {
    if (t.q < 3) throw std::invalid_argument("PhantomSpec: off-center bump q must be >= 3");
    if (!(t.radius > 0.0)) throw std::invalid_argument("PhantomSpec: bump radius must be > 0");
    if (std::hypot(t.x0, t.y0) + t.radius >= 1.0)
      throw std::invalid_argument("PhantomSpec: bump support escapes the unit disk");
  }
}

std::string PhantomSpec::to_json() const {
  json terms = json::array();
  for (const HarmonicBump& t : harmonics)
    terms.push_back({{"type", "harmonic_bump"},
                     {"n", t.n},
                     {"q", t.q},
                     {"amplitude", {t.amplitude.real(), t.amplitude.imag()}}});
  for (const OffCenterBump& t : bumps)
    terms.push_back({{"type", "offcenter_bump"},
                     {"center", {t.x0, t.y0}},
                     {"radius", t.radius},
                     {"q", t.q},
                     {"amplitude", {t.amplitude.real(), t.amplitude.imag()}}});
  return json{{"terms", terms}}.dump(2);
}

PhantomSpec PhantomSpec::from_json(const std::string& text) {
  PhantomSpec spec;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("PhantomSpec: invalid JSON: ") + e.what());
  }
  if (!doc.contains("terms") || !doc["terms"].is_array())
    throw parse_error("PhantomSpec: missing 'terms' array");
  for (const json& t : doc["terms"]) {
    const std::string type = t.at("type").get<std::string>();
    const auto amp = t.at("amplitude");
    const cplx a(amp.at(0).get<double>(), amp.at(1).get<double>());
    if (type == "harmonic_bump") {
      spec.harmonics.push_back({t.at("n").get<int>(), t.at("q").get<int>(), a});
    } else if (type == "offcenter_bump") {
      const auto c = t.at("center");
      spec.bumps.push_back({c.at(0).get<double>(), c.at(1).get<double>(),
                            t.at("radius").get<double>(), t.at("q").get<int>(), a});
    } else {
      throw parse_error("PhantomSpec: unknown term type '" + type + "'");
    }
  }
  spec.validate();
  return spec;
}

PhantomSpec PhantomSpec::default_test() {
  PhantomSpec spec;
  spec.harmonics = {{0, 3, {1.0, 0.0}},
                    {1, 3, {0.8, 0.3}},
                    {-1, 3, {0.5, -0.6}},
                    {2, 3, {0.7, 0.2}},
                    {5, 3, {0.6, -0.1}}};
  spec.bumps = {{0.3, 0.15, 0.35, 3, {0.9, 0.25}}};
  return spec;
}

cplx eval_phantom_cartesian(const PhantomSpec& spec, double x, double y) {
  cplx out(0.0, 0.0);
  const double r2 = x * x + y * y;
  if (r2 < 1.0 && !spec.harmonics.empty()) {
    const double r = std::sqrt(r2);
    const double phi = std::atan2(y, x);
    const double b = 1.0 - r2;
    for (const HarmonicBump& t : spec.harmonics)
      out += t.amplitude * ipow(r, std::abs(t.n)) * ipow(b, t.q) * std::polar(1.0, t.n * phi);
  }
  for (const OffCenterBump& t : spec.bumps) {
    const double dx = x - t.x0, dy = y - t.y0;
    const double q2 = (dx * dx + dy * dy) / (t.radius * t.radius);
    if (q2 < 1.0) out += t.amplitude * ipow(1.0 - q2, t.q);
  }
  return out;
}

PolarImage phantom_harmonics(const PhantomSpec& spec, const RadialGrid& grid, int n_min, int n_max) {
  PolarImage img(n_min, n_max, grid);
  for (const HarmonicBump& t : spec.harmonics) {
    if (t.n < n_min || t.n > n_max) continue;
    for (int j = 0; j < grid.count(); ++j) {
      const double r = grid.node(j);
      if (r > 1.0) continue;
      img.at(t.n, j) += t.amplitude * ipow(r, std::abs(t.n)) * ipow(1.0 - r * r, t.q);
    }
  }
  if (!spec.bumps.empty()) {
    PhantomSpec bumps_only;
    bumps_only.bumps = spec.bumps;
    const int K = std::max(8 * (std::max(std::abs(n_min), std::abs(n_max)) + 1), 128);
    std::vector<cplx> ring(static_cast<size_t>(K));
    for (int j = 0; j < grid.count(); ++j) {
      const double r = grid.node(j);
      for (int k = 0; k < K; ++k) {
        const double phi = 2.0 * M_PI * k / K;
        ring[static_cast<size_t>(k)] = eval_phantom_cartesian(bumps_only, r * std::cos(phi), r * std::sin(phi));
      }
      for (int n = n_min; n <= n_max; ++n) {
        cplx acc(0.0, 0.0);
        for (int k = 0; k < K; ++k)
          acc += ring[static_cast<size_t>(k)] * std::polar(1.0, -n * 2.0 * M_PI * k / K);
        img.at(n, j) += acc / static_cast<double>(K);
      }
    }
  }
  return img;
}

}  // namespace ert
