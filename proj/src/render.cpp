#include "digifrac/render.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "digifrac/errors.hpp"

namespace digifrac {

namespace {

struct Bounds {
  std::int64_t i_min, i_max, j_min, j_max;
};

Bounds bounds_of(const Prefractal& p) {
  if (p.size() == 0) throw DomainError("cannot render an empty prefractal");
  const auto& sq = p.squares();
  Bounds b{sq.front().i, sq.back().i, sq.front().j, sq.front().j};
  for (const auto& s : sq) {
    b.j_min = std::min(b.j_min, s.j);
    b.j_max = std::max(b.j_max, s.j);
  }
  return b;
}

}  // namespace

std::size_t Bitmap::set_count() const {
  return static_cast<std::size_t>(std::count(pixels.begin(), pixels.end(), std::uint8_t{1}));
}

Bitmap rasterize(const Prefractal& p) {
  const Bounds b = bounds_of(p);
  Bitmap bm;
  bm.origin_i = b.i_min;
  bm.origin_j = b.j_min;
  bm.width = b.i_max - b.i_min + 1;
  bm.height = b.j_max - b.j_min + 1;
  if (bm.width > kMaxRasterPixels / bm.height) {
    throw ResourceError("raster of " + std::to_string(bm.width) + "x" + std::to_string(bm.height) +
                        " pixels is too large");
  }
  bm.pixels.assign(static_cast<std::size_t>(bm.width * bm.height), 0);
  for (const auto& s : p.squares()) {
    const std::int64_t row = b.j_max - s.j;
    const std::int64_t col = s.i - b.i_min;
    bm.pixels[static_cast<std::size_t>(row * bm.width + col)] = 1;
  }
  return bm;
}

void write_pbm(const Bitmap& bitmap, std::ostream& os) {
  os << "P1\n" << bitmap.width << ' ' << bitmap.height << '\n';
  std::string line;
  for (std::int64_t row = 0; row < bitmap.height; ++row) {
    line.clear();
    for (std::int64_t col = 0; col < bitmap.width; ++col) {
      if (col != 0) line += ' ';
      line += bitmap.at(col, row) ? '1' : '0';
    }
    line += '\n';
    os << line;
  }
  if (!os) throw std::ios_base::failure("failed writing PBM output");
}

void write_svg(const Prefractal& p, std::ostream& os) {
  const Bounds b = bounds_of(p);
  const std::int64_t width = b.i_max - b.i_min + 1;
  const std::int64_t height = b.j_max - b.j_min + 1;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << b.i_min << " 0 "
     << width << ' ' << height << "\" width=\"" << width << "\" height=\"" << height
     << "\" shape-rendering=\"crispEdges\">\n";
  for (const auto& s : p.squares()) {
    os << "<rect x=\"" << s.i << "\" y=\"" << (b.j_max - s.j)
       << "\" width=\"1\" height=\"1\"/>\n";
  }
  os << "</svg>\n";
  if (!os) throw std::ios_base::failure("failed writing SVG output");
}

std::string pbm_string(const Bitmap& bitmap) {
  std::ostringstream os;
  write_pbm(bitmap, os);
  return os.str();
}

std::string svg_string(const Prefractal& p) {
  std::ostringstream os;
  write_svg(p, os);
  return os.str();
}

}  // namespace digifrac
