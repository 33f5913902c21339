#include "ert/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ert/interp.hpp"
#include "ert/invert.hpp"
#include "ert/io.hpp"
#include "ert/phantom.hpp"
#include "ert/projector.hpp"
#include "ert/range_checks.hpp"
#include "ert/selftest.hpp"

namespace ert {

namespace {

cplx parse_mu(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return cplx(std::stod(text), 0.0);
  return cplx(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// eta profile file: JSON {"r_max": 1.2, "values": [[re, im], ...]} sampled on
// the uniform grid j*r_max/N, j = 1..N
Attenuation load_eta(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("eta file: invalid JSON: ") + e.what());
  }
  const double r_max = doc.value("r_max", 1.0);
  if (!doc.contains("values") || !doc["values"].is_array())
    throw parse_error("eta file: missing 'values' array");
  std::vector<cplx> values;
  for (const auto& v : doc["values"]) values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
  return Attenuation::radial(RadialGrid::uniform(static_cast<int>(values.size()), r_max),
                             std::move(values));
}

template <class T>
T load_as(const std::string& path, const char* what) {
  ErtObject obj = read_ert(path);
  if (auto* p = std::get_if<T>(&obj)) return std::move(*p);
  throw parse_error(std::string(path) + " does not hold a " + what);
}

void render_image(const PolarImage& img, const std::string& path, int size) {
  std::vector<cplx> field(static_cast<size_t>(size) * size);
  for (int iy = 0; iy < size; ++iy) {
    const double y = 1.0 - 2.0 * (iy + 0.5) / size;
    for (int ix = 0; ix < size; ++ix) {
      const double x = -1.0 + 2.0 * (ix + 0.5) / size;
      field[static_cast<size_t>(iy) * size + ix] = synthesize_at(img, x, y);
    }
  }
  export_pgm(path, field, size, size);
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exponential Radon transform toolkit"};
  app.require_subcommand(1);

  // ---- phantom ----
  auto* cmd_phantom = app.add_subcommand("phantom", "build a phantom's harmonic image");
  std::string ph_spec, ph_out, ph_render;
  int ph_nmax = 16, ph_nodes = 256, ph_render_size = 256;
  bool ph_default = false;
  cmd_phantom->add_option("--spec", ph_spec, "phantom spec JSON file");
  cmd_phantom->add_flag("--default", ph_default, "use the built-in test phantom");
  cmd_phantom->add_option("-o,--out", ph_out, "output .ert polar image")->required();
  cmd_phantom->add_option("--nmax", ph_nmax, "harmonic range |n| <= nmax");
  cmd_phantom->add_option("--radial-nodes", ph_nodes, "radial sample count");
  cmd_phantom->add_option("--render", ph_render, "also write a PGM field render");
  cmd_phantom->add_option("--render-size", ph_render_size, "PGM width/height");

  // ---- project ----
  auto* cmd_project = app.add_subcommand("project", "forward projection");
  std::string pr_in, pr_out, pr_mu = "0", pr_eta;
  bool pr_direct = false, pr_harmonic = false;
  int pr_det = 512, pr_ang = 256;
  double pr_smax = 1.2;
  cmd_project->add_option("-i,--in", pr_in, "phantom spec JSON (direct) or polar image .ert (harmonic)")->required();
  cmd_project->add_option("-o,--out", pr_out, "output .ert")->required();
  cmd_project->add_flag("--direct", pr_direct, "direct 2D line-integral projector (oracle)");
  cmd_project->add_flag("--harmonic", pr_harmonic, "harmonic forward operator");
  cmd_project->add_option("--mu", pr_mu, "constant attenuation RE[,IM]");
  cmd_project->add_option("--eta", pr_eta, "radial attenuation profile JSON file");
  cmd_project->add_option("--det", pr_det, "detector count");
  cmd_project->add_option("--ang", pr_ang, "angle count (direct)");
  cmd_project->add_option("--smax", pr_smax, "detector half-span");

  // ---- decompose ----
  auto* cmd_dec = app.add_subcommand("decompose", "angular Fourier analysis of a sinogram");
  std::string dc_in, dc_out;
  int dc_nmax = 16;
  cmd_dec->add_option("-i,--in", dc_in, "sinogram .ert")->required();
  cmd_dec->add_option("-o,--out", dc_out, "output harmonic .ert")->required();
  cmd_dec->add_option("--nmax", dc_nmax, "harmonic range |n| <= nmax");

  // ---- derivative ----
  auto* cmd_der = app.add_subcommand("derivative", "s-derivative of a harmonic sinogram");
  std::string dv_in, dv_out;
  cmd_der->add_option("-i,--in", dv_in, "harmonic .ert")->required();
  cmd_der->add_option("-o,--out", dv_out, "output harmonic .ert of p'_n")->required();

  // ---- invert ----
  auto* cmd_inv = app.add_subcommand("invert", "reconstruct f_n from p'_n");
  std::string iv_in, iv_out, iv_method = "unified";
  int iv_nodes = 128;
  cmd_inv->add_option("-i,--in", iv_in, "harmonic .ert holding p'_n")->required();
  cmd_inv->add_option("-o,--out", iv_out, "output polar image .ert")->required();
  cmd_inv->add_option("--method", iv_method, "unified|interior|exterior|cormack");
  cmd_inv->add_option("--radial-nodes", iv_nodes, "reconstruction grid size");

  // ---- validate ----
  auto* cmd_val = app.add_subcommand("validate", "range-condition checks");
  std::string va_in, va_pair, va_out, va_checks = "moments,moments-derivative,novikov";
  double va_mu_real = 0.0;
  cmd_val->add_option("-i,--in", va_in, "harmonic .ert (p_n)")->required();
  cmd_val->add_option("--pair", va_pair, "harmonic .ert at -mu (for evenness)");
  cmd_val->add_option("--checks", va_checks, "comma list: evenness,moments,moments-derivative,novikov,fourier");
  cmd_val->add_option("-o,--out", va_out, "write JSON report here");
  cmd_val->add_option("--mu-real", va_mu_real, "real mu for the fourier check (defaults to Re mu)");

  // ---- render ----
  auto* cmd_ren = app.add_subcommand("render", "render a polar image to PGM");
  std::string rn_in, rn_out;
  int rn_size = 256;
  cmd_ren->add_option("-i,--in", rn_in, "polar image .ert")->required();
  cmd_ren->add_option("-o,--out", rn_out, "output PGM")->required();
  cmd_ren->add_option("--size", rn_size, "image width/height");

  // ---- selftest ----
  auto* cmd_self = app.add_subcommand("selftest", "run built-in verification suites");
  std::string st_suite = "identities";
  cmd_self->add_option("--suite", st_suite, "identities|orthogonality|kernels|roundtrip|range|all");

  // ---- bench ----
  auto* cmd_bench = app.add_subcommand("bench", "accuracy sweep across methods");
  std::string bn_out = "bench.csv";
  std::vector<std::string> bn_mus = {"0", "0.5", "0.3,0.2"};
  std::vector<double> bn_sigmas = {0.0, 1e-3};
  std::vector<int> bn_nmaxes = {4, 8};
  uint64_t bn_seed = 1234;
  cmd_bench->add_option("-o,--out", bn_out, "CSV output");
  cmd_bench->add_option("--mu", bn_mus, "attenuation list, RE[,IM] each");
  cmd_bench->add_option("--sigma", bn_sigmas, "relative noise levels");
  cmd_bench->add_option("--nmax", bn_nmaxes, "harmonic ranges");
  cmd_bench->add_option("--seed", bn_seed, "noise seed");

  std::vector<std::string> argv_copy(args);
  std::vector<char*> argv;
  argv.push_back(const_cast<char*>("ert"));
  for (std::string& a : argv_copy) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_phantom) {
      PhantomSpec spec = ph_default || ph_spec.empty() ? PhantomSpec::default_test()
                                                       : PhantomSpec::from_json(read_text(ph_spec));
      spec.validate();
      PolarImage img = phantom_harmonics(spec, RadialGrid::uniform(ph_nodes), -ph_nmax, ph_nmax);
      write_ert(ph_out, img);
      if (!ph_render.empty()) render_image(img, ph_render, ph_render_size);
      std::cout << "wrote " << ph_out << "\n";
      return 0;
    }
    if (*cmd_project) {
      if (pr_direct == pr_harmonic)
        throw CLI::ValidationError("project", "choose exactly one of --direct / --harmonic");
      const Attenuation att =
          pr_eta.empty() ? Attenuation::constant(parse_mu(pr_mu)) : load_eta(pr_eta);
      DetectorGrid det(pr_det, pr_smax);
      if (pr_direct) {
        PhantomSpec spec = PhantomSpec::from_json(read_text(pr_in));
        Field f = [&spec](double x, double y) { return eval_phantom_cartesian(spec, x, y); };
        write_ert(pr_out, project_direct(f, det, AngleGrid(pr_ang), att));
      } else {
        PolarImage img = load_as<PolarImage>(pr_in, "polar image");
        write_ert(pr_out, project_harmonic(img, att, det));
      }
      std::cout << "wrote " << pr_out << "\n";
      return 0;
    }
    if (*cmd_dec) {
      Sinogram sino = load_as<Sinogram>(dc_in, "sinogram");
      write_ert(dc_out, decompose_angular(sino, -dc_nmax, dc_nmax));
      std::cout << "wrote " << dc_out << "\n";
      return 0;
    }
    if (*cmd_der) {
      HarmonicSinogram h = load_as<HarmonicSinogram>(dv_in, "harmonic sinogram");
      write_ert(dv_out, derivative_s(h));
      std::cout << "wrote " << dv_out << "\n";
      return 0;
    }
    if (*cmd_inv) {
      HarmonicSinogram dpn = load_as<HarmonicSinogram>(iv_in, "harmonic sinogram");
      PolarImage rec = invert(dpn, RadialGrid::uniform(iv_nodes), inversion_method_from_string(iv_method));
      write_ert(iv_out, rec);
      std::cout << "wrote " << iv_out << "\n";
      return 0;
    }
    if (*cmd_val) {
      HarmonicSinogram h = load_as<HarmonicSinogram>(va_in, "harmonic sinogram");
      RangeReport report;
      std::stringstream names(va_checks);
      std::string name;
      while (std::getline(names, name, ',')) {
        if (name == "evenness") {
          if (va_pair.empty()) throw CLI::ValidationError("validate", "--pair required for evenness");
          report.merge(check_evenness(h, load_as<HarmonicSinogram>(va_pair, "harmonic sinogram")));
        } else if (name == "moments") {
          report.merge(check_moments(h, {0.0}));
        } else if (name == "moments-derivative") {
          report.merge(check_moments_derivative(derivative_s(h)));
        } else if (name == "novikov") {
          report.merge(check_novikov_harmonic(derivative_s(h), {0.3, 0.6, 0.9}));
        } else if (name == "fourier") {
          const double mur = va_mu_real != 0.0 ? va_mu_real
                             : h.att().is_constant() ? h.att().mu().real()
                                                     : 0.0;
          FourierBand band;
          band.omega_cut_frac = 0.3;
          report.merge(check_fourier_evenness(fourier_in_s(h), mur, band));
        } else {
          throw CLI::ValidationError("validate", "unknown check '" + name + "'");
        }
      }
      const std::string json = report.to_json();
      if (!va_out.empty()) {
        std::ofstream out(va_out);
        out << json << "\n";
      }
      std::cout << json << "\n";
      return report.pass ? 0 : 1;
    }
    if (*cmd_ren) {
      render_image(load_as<PolarImage>(rn_in, "polar image"), rn_out, rn_size);
      std::cout << "wrote " << rn_out << "\n";
      return 0;
    }
    if (*cmd_self) {
      std::vector<std::string> suites =
          st_suite == "all" ? selftest_suites() : std::vector<std::string>{st_suite};
      bool ok = true;
      for (const std::string& s : suites) {
        SelftestResult res = run_selftest(s);
        std::printf("== suite %s ==\n", res.suite.c_str());
        for (const SelftestRow& row : res.rows)
          std::printf("  %-58s %11.3e <= %8.1e  %s\n", row.label.c_str(), row.value,
                      row.threshold, row.pass ? "pass" : "FAIL");
        std::printf("suite %s: %s\n", res.suite.c_str(), res.pass ? "pass" : "FAIL");
        ok = ok && res.pass;
      }
      return ok ? 0 : 1;
    }
    if (*cmd_bench) {
      std::ofstream out(bn_out);
      if (!out) throw std::runtime_error("cannot open " + bn_out);
      out << "mu_re,mu_im,sigma,nmax,method,rel_l2_mean,rel_l2_max,seed\n";
      std::mt19937_64 rng(bn_seed);
      const PhantomSpec spec = PhantomSpec::default_test();
      for (const std::string& mu_text : bn_mus) {
        const cplx mu = parse_mu(mu_text);
        for (int nmax : bn_nmaxes) {
          const RadialGrid fine = RadialGrid::uniform(192);
          const PolarImage truth = phantom_harmonics(spec, fine, -nmax, nmax);
          const DetectorGrid det(384, 1.2);
          const HarmonicSinogram clean = project_harmonic(truth, Attenuation::constant(mu), det);
          double peak = 0.0;
          for (const cplx& v : clean.values()) peak = std::max(peak, std::abs(v));
          for (double sigma : bn_sigmas) {
            HarmonicSinogram noisy = clean;
            if (sigma > 0.0) {
              std::normal_distribution<double> gauss(0.0, sigma * peak / std::sqrt(2.0));
              for (cplx& v : noisy.values()) v += cplx(gauss(rng), gauss(rng));
            }
            const HarmonicSinogram dpn = derivative_s(noisy);
            const RadialGrid recon = RadialGrid::uniform(64);
            const PolarImage ref = phantom_harmonics(spec, recon, -nmax, nmax);
            for (InversionMethod m :
                 {InversionMethod::Unified, InversionMethod::InteriorSeries,
                  InversionMethod::ExteriorSeries, InversionMethod::CormackExterior}) {
              const PolarImage rec = invert(dpn, recon, m);
              double sum = 0.0, worst = 0.0;
              int cnt = 0;
              for (int n = -nmax; n <= nmax; ++n) {
                std::vector<cplx> a(static_cast<size_t>(recon.count())), b(a.size());
                for (int j = 0; j < recon.count(); ++j) {
                  a[static_cast<size_t>(j)] = rec.at(n, j);
                  b[static_cast<size_t>(j)] = ref.at(n, j);
                }
                const double e = rel_l2(a, b, recon);
                sum += e;
                worst = std::max(worst, e);
                ++cnt;
              }
              out << mu.real() << "," << mu.imag() << "," << sigma << "," << nmax << ","
                  << to_string(m) << "," << sum / cnt << "," << worst << "," << bn_seed << "\n";
            }
          }
        }
      }
      std::cout << "wrote " << bn_out << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ert
