#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "digifrac/fractal.hpp"

namespace digifrac {

/// One pixel per depth-n grid cell over the squares' bounding box. Row 0 is
/// the top row (largest j).
struct Bitmap {
  std::int64_t origin_i = 0;  // i_min
  std::int64_t origin_j = 0;  // j_min
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, 1 = set

  bool at(std::int64_t col, std::int64_t row) const {
    return pixels[static_cast<std::size_t>(row * width + col)] != 0;
  }
  std::size_t set_count() const;
};

inline constexpr std::int64_t kMaxRasterPixels = 1LL << 28;

/// Throws DomainError on an empty prefractal, ResourceError when the
/// bounding box exceeds kMaxRasterPixels.
Bitmap rasterize(const Prefractal& p);

/// Plain PBM: "P1", "width height", then one line of space-separated 0/1
/// per row.
void write_pbm(const Bitmap& bitmap, std::ostream& os);

/// SVG with one unit rect per square at integer coordinates (x = i,
/// y = j_max - j), viewBox over the bounding box.
void write_svg(const Prefractal& p, std::ostream& os);

std::string pbm_string(const Bitmap& bitmap);
std::string svg_string(const Prefractal& p);

}  // namespace digifrac
