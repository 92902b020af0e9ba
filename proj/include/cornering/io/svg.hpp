#pragma once

#include <string>

#include "cornering/optics.hpp"

namespace cornering::io {

/// Deepest comb render_svg lays out.
inline constexpr std::size_t max_render_depth = 12;

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string clip(const std::string& s, std::size_t n) { return s.size() <= n ? s : s.substr(0, n - 3) + "..."; }

/// Teeth stacked top to bottom on a shared spine, residual wires between
/// consecutive teeth (omitted when the residual is I), and each tooth's
/// exchanged wires running to ports on the right boundary: A_i enters at a
/// bullet port, B_i leaves at a circle port.
template <MonoidalBase B>
std::string render_svg(const Comb<B>& c) {
  const std::size_t n = c.depth();
  if (n > max_render_depth)
    throw Error(ErrorKind::LayoutLimitExceeded,
                "depth " + std::to_string(n) + " exceeds the layout limit " + std::to_string(max_render_depth));
  constexpr int pitch = 110, box_h = 60, top = 30, box_x = 90, box_w = 200, boundary_x = 420, width = 520;
  const int height = top * 2 + static_cast<int>(n) * pitch - (pitch - box_h);
  std::string s;
  auto line = [&s](int x1, int y1, int x2, int y2, const char* cls) {
    s += "  <line class=\"" + std::string(cls) + "\" x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) +
         "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\"/>\n";
  };
  auto text = [&s](int x, int y, const std::string& body, const char* anchor) {
    s += "  <text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" text-anchor=\"" + anchor + "\">" +
         xml_escape(body) + "</text>\n";
  };
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
       std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) + "\">\n";
  s += "  <style>line{stroke:#000;stroke-width:1.5}.spine{stroke:#999;stroke-width:6}"
       ".boundary{stroke-dasharray:4 3}.residual{stroke:#36c}rect{fill:#fff;stroke:#000;stroke-width:1.5}"
       "text{font-family:monospace;font-size:12px}</style>\n";
  line(box_x - 20, top, box_x - 20, height - top, "spine");
  line(boundary_x, 10, boundary_x, height - 10, "boundary");
  for (std::size_t i = 1; i <= n; ++i) {
    const int y = top + static_cast<int>(i - 1) * pitch;
    line(box_x - 20, y + box_h / 2, box_x, y + box_h / 2, "spine");
    s += "  <rect x=\"" + std::to_string(box_x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
         std::to_string(box_w) + "\" height=\"" + std::to_string(box_h) + "\"/>\n";
    text(box_x + box_w / 2, y + box_h / 2 + 4, clip(B::show(c.tooth(i)), 26), "middle");
    const int in_y = y + 15, out_y = y + box_h - 15;
    line(box_x + box_w, in_y, boundary_x, in_y, "wire");
    line(box_x + box_w, out_y, boundary_x, out_y, "wire");
    text(boundary_x + 8, in_y + 4, B::show(c.input(i)) + " •", "start");
    text(boundary_x + 8, out_y + 4, B::show(c.output(i)) + " ∘", "start");
    if (i < n && B::length(c.residual_after(i)) > 0) {
      const int x = box_x + box_w / 3;
      line(x, y + box_h, x, y + pitch, "residual");
      text(x + 6, y + box_h + (pitch - box_h) / 2 + 4, B::show(c.residual_after(i)), "start");
    }
  }
  s += "</svg>\n";
  return s;
}

template <MonoidalBase B>
std::string render_svg(const Optic<B>& h) {
  return render_svg(to_comb(h));
}

}  // namespace cornering::io
