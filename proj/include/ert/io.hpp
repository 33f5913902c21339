#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ert/types.hpp"

namespace ert {

using ErtObject = std::variant<Sinogram, HarmonicSinogram, PolarImage, FourierSinogram>;

// "ERT1" container, little-endian. Layout:
//   magic 'E','R','T','1' | u8 kind | u8 att_kind | attenuation block |
//   kind header | payload (complex f64 pairs, harmonic index outermost)
// kind: 0 sinogram, 1 harmonic sinogram, 2 polar image, 3 fourier sinogram
// att_kind: 0 none, 1 constant (mu re,im), 2 radial (u32 count, f64 first,
//           f64 step, count re/im pairs)
// kind headers:
//   0: u32 det_count, f64 det_first, f64 det_step, u32 ang_count; payload
//      ang_count x det_count (angle outermost)
//   1: i32 n_min, i32 n_max, u32 det_count, f64 det_first, f64 det_step
//   2: i32 n_min, i32 n_max, u32 r_count, f64 r_first, f64 r_step
//   3: i32 n_min, i32 n_max, u32 w_count, f64 w_first, f64 w_step
void write_ert(const std::string& path, const ErtObject& obj);
ErtObject read_ert(const std::string& path);

// Expected on-disk size in bytes for an object, per the layout above.
size_t ert_file_size(const ErtObject& obj);

// CSV with a header row; one row per detector/radial/frequency node, one
// re/im column pair per harmonic (or per angle for a plain sinogram).
// Values are written with 17 significant digits.
void export_csv(const std::string& path, const ErtObject& obj);

// Parse a CSV produced by export_csv back into (header, columns).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};
CsvTable read_csv(const std::string& path);

// Binary 16-bit PGM (P5) of the magnitude of a complex field, min-max
// normalized unless a fixed range is given.
void export_pgm(const std::string& path, const std::vector<cplx>& field, int width, int height,
                std::optional<std::pair<double, double>> fixed_range = std::nullopt);

}  // namespace ert
