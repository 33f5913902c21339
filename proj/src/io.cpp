#include "ert/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace ert {

namespace {

constexpr char kMagic[4] = {'E', 'R', 'T', '1'};

class Writer {
 public:
  explicit Writer(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  void u8(uint8_t v) { out_.put(static_cast<char>(v)); }
  void u32(uint32_t v) { raw(&v, sizeof v); }
  void i32(int32_t v) { raw(&v, sizeof v); }
  void f64(double v) { raw(&v, sizeof v); }
  void complex_block(const std::vector<cplx>& vals) {
    for (const cplx& z : vals) {
      f64(z.real());
      f64(z.imag());
    }
  }

 private:
  void raw(const void* p, size_t n) { out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n)); }
  std::ofstream out_;
};

class Reader {
 public:
  explicit Reader(const std::string& path) : in_(path, std::ios::binary) {
    if (!in_) throw parse_error("cannot open '" + path + "' for reading");
  }
  uint8_t u8() {
    uint8_t v;
    raw(&v, sizeof v);
    return v;
  }
  uint32_t u32() {
    uint32_t v;
    raw(&v, sizeof v);
    return v;
  }
  int32_t i32() {
    int32_t v;
    raw(&v, sizeof v);
    return v;
  }
  double f64() {
    double v;
    raw(&v, sizeof v);
    return v;
  }
  cplx complex_value() {
    const double re = f64(), im = f64();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw parse_error("ERT1: non-finite value in payload");
    return {re, im};
  }
  void magic() {
    char m[4];
    raw(m, 4);
    if (std::memcmp(m, kMagic, 4) != 0) {
      std::ostringstream msg;
      msg << "ERT1: bad magic \"";
      for (char c : m) msg << (std::isprint(static_cast<unsigned char>(c)) ? c : '?');
      msg << "\"";
      throw parse_error(msg.str());
    }
  }

 private:
  void raw(void* p, size_t n) {
    in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (in_.gcount() != static_cast<std::streamsize>(n)) throw parse_error("ERT1: truncated file");
  }
  std::ifstream in_;
};

void write_att(Writer& w, const Attenuation& att) {
  switch (att.kind()) {
    case Attenuation::Kind::None:
      w.u8(0);
      break;
    case Attenuation::Kind::Constant:
      w.u8(1);
      w.f64(att.mu().real());
      w.f64(att.mu().imag());
      break;
    case Attenuation::Kind::Radial: {
      w.u8(2);
      const RadialGrid& g = att.grid();
      w.u32(static_cast<uint32_t>(g.count()));
      w.f64(g.first());
      w.f64(g.step());
      w.complex_block(att.profile());
      break;
    }
  }
}

Attenuation read_att(Reader& r, uint8_t kind) {
  switch (kind) {
    case 0: return Attenuation::none();
    case 1: {
      const double re = r.f64(), im = r.f64();
      return Attenuation::constant({re, im});
    }
    case 2: {
      const uint32_t count = r.u32();
      const double first = r.f64(), step = r.f64();
      std::vector<double> nodes(count);
      for (uint32_t j = 0; j < count; ++j) nodes[j] = first + step * j;
      std::vector<cplx> prof(count);
      for (uint32_t j = 0; j < count; ++j) prof[j] = r.complex_value();
      return Attenuation::radial(RadialGrid::from_nodes(std::move(nodes)), std::move(prof));
    }
    default: throw parse_error("ERT1: unknown attenuation kind " + std::to_string(kind));
  }
}

size_t att_size(const Attenuation& att) {
  switch (att.kind()) {
    case Attenuation::Kind::None: return 0;
    case Attenuation::Kind::Constant: return 16;
    case Attenuation::Kind::Radial: return 4 + 16 + 16 * att.profile().size();
  }
  return 0;
}

}  // namespace

void write_ert(const std::string& path, const ErtObject& obj) {
  Writer w(path);
  for (char c : kMagic) w.u8(static_cast<uint8_t>(c));
  if (const auto* s = std::get_if<Sinogram>(&obj)) {
    w.u8(0);
    write_att(w, s->att());
    w.u32(static_cast<uint32_t>(s->det().count()));
    w.f64(s->det().node(0));
    w.f64(s->det().step());
    w.u32(static_cast<uint32_t>(s->ang().count()));
    w.complex_block(s->values());
  } else if (const auto* h = std::get_if<HarmonicSinogram>(&obj)) {
    w.u8(1);
    write_att(w, h->att());
    w.i32(h->n_min());
    w.i32(h->n_max());
    w.u32(static_cast<uint32_t>(h->det().count()));
    w.f64(h->det().node(0));
    w.f64(h->det().step());
    w.complex_block(h->values());
  } else if (const auto* img = std::get_if<PolarImage>(&obj)) {
    w.u8(2);
    write_att(w, Attenuation::none());
    w.i32(img->n_min());
    w.i32(img->n_max());
    w.u32(static_cast<uint32_t>(img->grid().count()));
    w.f64(img->grid().first());
    w.f64(img->grid().step());
    w.complex_block(img->values());
  } else if (const auto* ft = std::get_if<FourierSinogram>(&obj)) {
    w.u8(3);
    write_att(w, Attenuation::none());
    w.i32(ft->n_min());
    w.i32(ft->n_max());
    w.u32(static_cast<uint32_t>(ft->omega_count()));
    w.f64(ft->omega_first());
    w.f64(ft->omega_step());
    w.complex_block(ft->values());
  }
}

ErtObject read_ert(const std::string& path) {
  Reader r(path);
  r.magic();
  const uint8_t kind = r.u8();
  const uint8_t att_kind = r.u8();
  const Attenuation att = read_att(r, att_kind);
  switch (kind) {
    case 0: {
      const uint32_t det_count = r.u32();
      const double first = r.f64(), step = r.f64();
      const uint32_t ang_count = r.u32();
      const double s_max = -first;
      (void)step;
      Sinogram s(DetectorGrid(static_cast<int>(det_count), s_max), AngleGrid(static_cast<int>(ang_count)), att);
      for (cplx& v : s.values()) v = r.complex_value();
      return s;
    }
    case 1: {
      const int32_t n_min = r.i32(), n_max = r.i32();
      const uint32_t det_count = r.u32();
      const double first = r.f64();
      r.f64();  // step, implied by count and first
      HarmonicSinogram h(n_min, n_max, DetectorGrid(static_cast<int>(det_count), -first), att);
      for (cplx& v : h.values()) v = r.complex_value();
      return h;
    }
    case 2: {
      const int32_t n_min = r.i32(), n_max = r.i32();
      const uint32_t count = r.u32();
      const double first = r.f64(), step = r.f64();
      std::vector<double> nodes(count);
      for (uint32_t j = 0; j < count; ++j) nodes[j] = first + step * j;
      PolarImage img(n_min, n_max, RadialGrid::from_nodes(std::move(nodes)));
      for (cplx& v : img.values()) v = r.complex_value();
      return img;
    }
    case 3: {
      const int32_t n_min = r.i32(), n_max = r.i32();
      const uint32_t count = r.u32();
      const double first = r.f64(), step = r.f64();
      FourierSinogram ft(n_min, n_max, static_cast<int>(count), first, step);
      for (cplx& v : ft.values()) v = r.complex_value();
      return ft;
    }
    default: throw parse_error("ERT1: unknown object kind " + std::to_string(kind));
  }
}

size_t ert_file_size(const ErtObject& obj) {
  constexpr size_t preamble = 4 + 1 + 1;
  if (const auto* s = std::get_if<Sinogram>(&obj))
    return preamble + att_size(s->att()) + (4 + 8 + 8 + 4) + 16 * s->values().size();
  if (const auto* h = std::get_if<HarmonicSinogram>(&obj))
    return preamble + att_size(h->att()) + (4 + 4 + 4 + 8 + 8) + 16 * h->values().size();
  if (const auto* img = std::get_if<PolarImage>(&obj))
    return preamble + (4 + 4 + 4 + 8 + 8) + 16 * img->values().size();
  const auto& ft = std::get<FourierSinogram>(obj);
  return preamble + (4 + 4 + 4 + 8 + 8) + 16 * ft.values().size();
}

namespace {

void csv_row(std::ostream& out, const std::vector<double>& vals) {
  char buf[64];
  for (size_t i = 0; i < vals.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", vals[i]);
    out << (i ? "," : "") << buf;
  }
  out << "\n";
}

}  // namespace

void export_csv(const std::string& path, const ErtObject& obj) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  if (const auto* s = std::get_if<Sinogram>(&obj)) {
    out << "s";
    for (int k = 0; k < s->ang().count(); ++k) out << ",re_a" << k << ",im_a" << k;
    out << "\n";
    std::vector<double> row;
    for (int i = 0; i < s->det().count(); ++i) {
      row.assign(1, s->det().node(i));
      for (int k = 0; k < s->ang().count(); ++k) {
        row.push_back(s->at(k, i).real());
        row.push_back(s->at(k, i).imag());
      }
      csv_row(out, row);
    }
  } else if (const auto* h = std::get_if<HarmonicSinogram>(&obj)) {
    out << "s";
    for (int n = h->n_min(); n <= h->n_max(); ++n) out << ",re_n" << n << ",im_n" << n;
    out << "\n";
    std::vector<double> row;
    for (int i = 0; i < h->det().count(); ++i) {
      row.assign(1, h->det().node(i));
      for (int n = h->n_min(); n <= h->n_max(); ++n) {
        row.push_back(h->at(n, i).real());
        row.push_back(h->at(n, i).imag());
      }
      csv_row(out, row);
    }
  } else if (const auto* img = std::get_if<PolarImage>(&obj)) {
    out << "r";
    for (int n = img->n_min(); n <= img->n_max(); ++n) out << ",re_n" << n << ",im_n" << n;
    out << "\n";
    std::vector<double> row;
    for (int j = 0; j < img->grid().count(); ++j) {
      row.assign(1, img->grid().node(j));
      for (int n = img->n_min(); n <= img->n_max(); ++n) {
        row.push_back(img->at(n, j).real());
        row.push_back(img->at(n, j).imag());
      }
      csv_row(out, row);
    }
  } else {
    const auto& ft = std::get<FourierSinogram>(obj);
    out << "omega";
    for (int n = ft.n_min(); n <= ft.n_max(); ++n) out << ",re_n" << n << ",im_n" << n;
    out << "\n";
    std::vector<double> row;
    for (int k = 0; k < ft.omega_count(); ++k) {
      row.assign(1, ft.omega(k));
      for (int n = ft.n_min(); n <= ft.n_max(); ++n) {
        row.push_back(ft.at(n, k).real());
        row.push_back(ft.at(n, k).imag());
      }
      csv_row(out, row);
    }
  }
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "' for reading");
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw parse_error("CSV: empty file");
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) table.header.push_back(cell);
  table.columns.resize(table.header.size());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ls(line);
    size_t col = 0;
    while (std::getline(ls, cell, ',')) {
      if (col >= table.columns.size()) throw parse_error("CSV: row wider than header");
      table.columns[col++].push_back(std::stod(cell));
    }
    if (col != table.columns.size()) throw parse_error("CSV: row narrower than header");
  }
  return table;
}

void export_pgm(const std::string& path, const std::vector<cplx>& field, int width, int height,
                std::optional<std::pair<double, double>> fixed_range) {
  if (static_cast<size_t>(width) * static_cast<size_t>(height) != field.size())
    throw std::invalid_argument("export_pgm: size mismatch");
  double lo = 0.0, hi = 0.0;
  if (fixed_range) {
    lo = fixed_range->first;
    hi = fixed_range->second;
  } else {
    lo = hi = field.empty() ? 0.0 : std::abs(field[0]);
    for (const cplx& z : field) {
      const double m = std::abs(z);
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
  }
  const double span = hi > lo ? hi - lo : 1.0;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "P5\n" << width << " " << height << "\n65535\n";
  for (const cplx& z : field) {
    double v = (std::abs(z) - lo) / span;
    v = std::clamp(v, 0.0, 1.0);
    const auto q = static_cast<uint16_t>(std::lround(v * 65535.0));
    // 16-bit PGM samples are most-significant byte first
    out.put(static_cast<char>(q >> 8));
    out.put(static_cast<char>(q & 0xff));
  }
}

}  // namespace ert
