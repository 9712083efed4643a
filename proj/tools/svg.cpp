#include "svg.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace braidvar::cli {

namespace {

constexpr int kMargin = 30;
constexpr int kDx = 40;
constexpr int kDy = 60;
constexpr std::array<const char*, 7> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#8c564b", "#e377c2"};

const char* colour(int generator) { return kPalette[static_cast<std::size_t>(generator - 1) % kPalette.size()]; }

class Svg {
 public:
  Svg(int width, int height) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
         << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out_ << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  }

  void line(int x1, int y1, int x2, int y2, const char* stroke, const char* cls, const char* extra = "") {
    out_ << "<line class=\"" << cls << "\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
         << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"" << extra << "/>\n";
  }

  void circle(int cx, int cy, int r, const char* cls, const char* fill, const char* extra = "") {
    out_ << "<circle class=\"" << cls << "\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"" << fill
         << "\" stroke=\"black\"" << extra << "/>\n";
  }

  void raw(const std::string& s) { out_ << s << '\n'; }

  void text(int x, int y, const std::string& s) {
    out_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">"
         << s << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

int letter_x(int m) { return kMargin + m * kDx; }

}  // namespace

std::string render_weave(const Morphism& m) {
  int widest = 1;
  for (const auto& l : m.layers) widest = std::max(widest, l.length());
  const int width = 2 * kMargin + (widest + 1) * kDx;
  const int height = 2 * kMargin + static_cast<int>(m.moves.size()) * kDy + 20;
  Svg svg(width, height);
  const int top = kMargin + 20;
  for (int j = 1; j <= m.source().length(); ++j) svg.text(letter_x(j), kMargin + 5, std::to_string(m.source()[j]));

  for (std::size_t k = 0; k < m.moves.size(); ++k) {
    const BraidWord& a = m.layers[k];
    const BraidMove& mv = m.moves[k];
    const int y0 = top + static_cast<int>(k) * kDy;
    const int y1 = y0 + kDy;
    const int ym = (y0 + y1) / 2;
    const int p = mv.pos;
    auto straight = [&](int from, int to) { svg.line(letter_x(from), y0, letter_x(to), y1, colour(a[from]), "edge"); };
    switch (mv.kind) {
      case MoveKind::Distant:
        for (int j = 1; j <= a.length(); ++j) straight(j, j == p ? p + 1 : j == p + 1 ? p : j);
        break;
      case MoveKind::Hexavalent: {
        const BraidWord& b = m.layers[k + 1];
        const int vx = letter_x(p + 1);
        for (int j = 1; j <= a.length(); ++j) {
          if (j >= p && j <= p + 2) {
            svg.line(letter_x(j), y0, vx, ym, colour(a[j]), "edge");
            svg.line(vx, ym, letter_x(j), y1, colour(b[j]), "edge");
          } else {
            straight(j, j);
          }
        }
        svg.raw("<rect class=\"hexavalent\" x=\"" + std::to_string(vx - 5) + "\" y=\"" + std::to_string(ym - 5) +
                "\" width=\"10\" height=\"10\" fill=\"white\" stroke=\"black\"/>");
        break;
      }
      case MoveKind::Trivalent: {
        const int vx = letter_x(p) + kDx / 2;
        for (int j = 1; j <= a.length(); ++j) {
          if (j == p || j == p + 1) {
            svg.line(letter_x(j), y0, vx, ym, colour(a[j]), "edge");
          } else {
            straight(j, j < p ? j : j - 1);
          }
        }
        svg.line(vx, ym, letter_x(p), y1, colour(a[p]), "edge");
        svg.circle(vx, ym, 5, "trivalent", "black");
        break;
      }
      case MoveKind::Cup: {
        const int vx = letter_x(p) + kDx / 2;
        for (int j = 1; j <= a.length(); ++j)
          if (j != p && j != p + 1) straight(j, j < p ? j : j - 2);
        std::ostringstream path;
        path << "<path class=\"cup\" d=\"M " << letter_x(p) << ' ' << y0 << " Q " << vx << ' ' << (ym + kDy / 3) << ' '
             << letter_x(p + 1) << ' ' << y0 << "\" fill=\"none\" stroke=\"" << colour(a[p]) << "\" stroke-width=\"2\"/>";
        svg.raw(path.str());
        break;
      }
    }
  }
  const BraidWord& last = m.target();
  const int yb = top + static_cast<int>(m.moves.size()) * kDy;
  for (int j = 1; j <= last.length(); ++j) svg.text(letter_x(j), yb + 18, std::to_string(last[j]));
  return svg.finish();
}

std::string render_ruling(const NormalRuling& rho) {
  const BraidWord& beta = rho.beta;
  const int n = beta.n;
  const int width = 2 * kMargin + (beta.length() + 1) * kDx;
  const int height = 2 * kMargin + n * kDx;
  Svg svg(width, height);
  auto level = [](int strand) { return kMargin + strand * kDx; };
  for (int j = 1; j <= beta.length() + 1; ++j) {
    const int x0 = letter_x(j) - kDx;
    const int x1 = letter_x(j);
    const int i = j <= beta.length() ? beta[j] : 0;
    for (int s = 1; s <= n; ++s)
      if (s != i && s != i + 1) svg.line(x0, level(s), x1, level(s), "black", "strand");
    if (!i) continue;
    const int cx = x1 - kDx / 2;
    svg.line(x0, level(i), x1, level(i + 1), "black", "strand");
    svg.line(x0, level(i + 1), x1, level(i), "black", "strand");
    const int cy = (level(i) + level(i + 1)) / 2;
    switch (rho.labels[static_cast<std::size_t>(j - 1)]) {
      case Label::Switch:
        svg.circle(cx, cy, 7, "switch", "none", " stroke-dasharray=\"2,2\"");
        break;
      case Label::Departure:
        svg.circle(cx, cy, 4, "departure", "black");
        break;
      case Label::Return:
        break;
    }
    svg.text(cx, kMargin + 5, std::string(1, label_char(rho.labels[static_cast<std::size_t>(j - 1)])));
  }
  return svg.finish();
}

}  // namespace braidvar::cli
