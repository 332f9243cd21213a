#include "hilden/svg.hpp"

#include <cstdlib>

namespace hilden {

namespace {

constexpr int kMargin = 20;
constexpr int kLane = 40;   // horizontal pitch between strands
constexpr int kBand = 50;   // vertical extent of one crossing

int lane_x(int position) { return kMargin + (position - 1) * kLane; }

void line(std::string& out, int x1, int y1, int x2, int y2) {
  out += "  <line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) +
         "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y2) +
         "\"/>\n";
}

}  // namespace

std::string render_braid_svg(const BraidWord& b) {
  const int m = b.strands();
  const int bands = b.empty() ? 1 : static_cast<int>(b.size());
  const int width = 2 * kMargin + (m - 1) * kLane;
  const int height = 2 * kMargin + bands * kBand;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  out += "<g stroke=\"#000\" stroke-width=\"3\" fill=\"none\" "
         "stroke-linecap=\"round\">\n";

  if (b.empty()) {
    for (int p = 1; p <= m; ++p)
      line(out, lane_x(p), kMargin, lane_x(p), kMargin + kBand);
  }

  for (std::size_t t = 0; t < b.size(); ++t) {
    const Letter l = b.letters()[t];
    const int i = std::abs(l);
    const int y0 = kMargin + static_cast<int>(t) * kBand;
    const int y1 = y0 + kBand;

    for (int p = 1; p <= m; ++p) {
      if (p == i || p == i + 1) continue;
      line(out, lane_x(p), y0, lane_x(p), y1);
    }

    // Strand entering at lane i leaves at lane i+1 and vice versa. The
    // positive letter puts the left-entering strand on top.
    const int xl = lane_x(i), xr = lane_x(i + 1);
    out += "  <g class=\"crossing\" data-letter=\"s" + std::to_string(i) +
           (l < 0 ? "'" : "") + "\">\n";
    const bool left_over = l > 0;
    const int ux0 = left_over ? xr : xl;  // under strand start/end
    const int ux1 = left_over ? xl : xr;
    const int dx = ux1 - ux0;
    // under strand with a central gap at 2/5 and 3/5 of the band
    line(out, ux0, y0, ux0 + dx * 2 / 5, y0 + kBand * 2 / 5);
    line(out, ux0 + dx * 3 / 5, y0 + kBand * 3 / 5, ux1, y1);
    // over strand drawn in full
    line(out, left_over ? xl : xr, y0, left_over ? xr : xl, y1);
    out += "  </g>\n";
  }

  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace hilden
