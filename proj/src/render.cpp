#include "hpfold/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hpfold/scoring.hpp"

namespace hpfold {

namespace {

constexpr double kPitch = 24.0;

struct P2 {
  double x = 0, y = 0;
};

P2 site_screen(Lattice k, const Site& s) {
  switch (k) {
    case Lattice::rect2d:
    case Lattice::hex:
      return {kPitch * s.x, -kPitch * s.y};
    case Lattice::tri:
      return {kPitch * (s.x + 0.5 * s.y), -kPitch * 0.8660254037844386 * s.y};
    case Lattice::rect3d:
      return {kPitch * (s.x + 0.45 * s.y), kPitch * (-s.z + 0.32 * s.y)};
  }
  return {};
}

std::string fmt(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.2f", v);
  std::string s = b;
  if (s == "-0.00") s = "0.00";
  return s;
}

const char* letter_color(char c) {
  if (c == '1') return "#2244cc";
  if (c == '2') return "#7a1111";
  return "#cc2222";
}

const char* chain_color(int i) {
  static const char* palette[] = {"#555555", "#7a6a22", "#22707a",
                                  "#7a227a", "#227a3a", "#704022"};
  return palette[i % 6];
}

struct SvgBuilder {
  std::ostringstream body;
  double minx = 1e18, miny = 1e18, maxx = -1e18, maxy = -1e18;

  void grow(const P2& p) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  void line(const P2& a, const P2& b) {
    grow(a);
    grow(b);
    body << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
         << "\" y2=\"" << fmt(b.y) << "\"/>\n";
  }
  void site(const P2& p, char letter) {
    grow(p);
    const char* col = letter_color(letter);
    body << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
         << "\" r=\"7\" fill=\"#ffffff\" stroke=\"" << col << "\"/>\n";
    body << "<text x=\"" << fmt(p.x) << "\" y=\"" << fmt(p.y) << "\" fill=\"" << col
         << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << letter << "</text>\n";
  }
  std::string finish() const {
    const double m = 20.0;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx - m) << " "
       << fmt(miny - m) << " " << fmt(maxx - minx + 2 * m) << " " << fmt(maxy - miny + 2 * m)
       << "\" font-family=\"monospace\" font-size=\"11\">\n"
       << body.str() << "</svg>\n";
    return os.str();
  }
};

}  // namespace

std::string render_fold_svg(const Fold& f, const Word& w, bool show_contacts) {
  if (auto v = validate(f, w)) throw std::invalid_argument("render: invalid fold: " + v->detail);
  const std::vector<Site> sites = fold_sites(f);
  std::vector<P2> pts(sites.size());
  for (size_t i = 0; i < sites.size(); ++i) pts[i] = site_screen(f.kind, sites[i]);

  SvgBuilder svg;
  svg.body << "<g stroke=\"#444444\" stroke-width=\"2\">\n";
  for (size_t i = 0; i + 1 < pts.size(); ++i) svg.line(pts[i], pts[i + 1]);
  if (f.closed && pts.size() > 1) svg.line(pts.back(), pts.front());
  svg.body << "</g>\n";
  if (show_contacts) {
    svg.body << "<g stroke=\"#cc2222\" stroke-width=\"1.5\" stroke-dasharray=\"3 3\">\n";
    for (const auto& [i, j] : contacts(f, w)) svg.line(pts[i], pts[j]);
    svg.body << "</g>\n";
  }
  svg.body << "<g>\n";
  for (size_t i = 0; i < pts.size(); ++i) svg.site(pts[i], w.letters[i]);
  svg.body << "</g>\n";
  return svg.finish();
}

std::string render_fold_ascii(const Fold& f, const Word& w) {
  if (f.kind != Lattice::rect2d && f.kind != Lattice::hex)
    throw std::invalid_argument("ascii rendering supports rect2d and hex only");
  if (auto v = validate(f, w)) throw std::invalid_argument("render: invalid fold: " + v->detail);
  const std::vector<Site> sites = fold_sites(f);
  int minx = sites[0].x, maxx = sites[0].x, miny = sites[0].y, maxy = sites[0].y;
  for (const Site& s : sites) {
    minx = std::min(minx, s.x);
    maxx = std::max(maxx, s.x);
    miny = std::min(miny, s.y);
    maxy = std::max(maxy, s.y);
  }
  const int colw = f.kind == Lattice::hex ? 4 : 2;  // brick cells are wider
  const int rows = 2 * (maxy - miny) + 1, cols = colw * (maxx - minx) + 1;
  std::vector<std::string> grid(rows, std::string(cols, ' '));
  auto cell = [&](const Site& s) {
    return std::pair<int, int>{2 * (maxy - s.y), colw * (s.x - minx)};
  };
  const size_t nbonds = sites.size() - (f.closed ? 0 : 1);
  for (size_t i = 0; i < nbonds; ++i) {
    const Site &a = sites[i], &b = sites[(i + 1) % sites.size()];
    auto [ra, ca] = cell(a);
    auto [rb, cb] = cell(b);
    if (ra == rb) {
      for (int c = std::min(ca, cb) + 1; c < std::max(ca, cb); ++c) grid[ra][c] = '-';
    } else {
      grid[(ra + rb) / 2][ca] = '|';
    }
  }
  for (size_t i = 0; i < sites.size(); ++i) {
    auto [r, c] = cell(sites[i]);
    grid[r][c] = w.letters[i];
  }
  std::string out;
  for (std::string& row : grid) {
    const size_t end = row.find_last_not_of(' ');
    out += (end == std::string::npos) ? "" : row.substr(0, end + 1);
    out += '\n';
  }
  return out;
}

std::string render_embedding_svg(const Embedding& e) {
  if (auto v = validate_embedding(e))
    throw std::invalid_argument("render: invalid embedding: " + v->detail);
  SvgBuilder svg;
  for (int ci = 0; ci < (int)e.chains.size(); ++ci) {
    const Chain& ch = e.chains[ci];
    svg.body << "<g stroke=\"" << chain_color(ci) << "\" stroke-width=\"2\">\n";
    const size_t n = ch.sites.size();
    for (size_t i = 0; i < n; ++i)
      svg.line(site_screen(Lattice::rect3d, ch.sites[i]),
               site_screen(Lattice::rect3d, ch.sites[(i + 1) % n]));
    svg.body << "</g>\n";
  }
  svg.body << "<g>\n";
  for (const Chain& ch : e.chains)
    for (size_t i = 0; i < ch.sites.size(); ++i)
      svg.site(site_screen(Lattice::rect3d, ch.sites[i]), ch.word.letters[i]);
  svg.body << "</g>\n";
  return svg.finish();
}

std::string render_diagram_svg(const std::vector<ClosedCurve>& curves) {
  const ProjectionPlan plan = diagram_cuts(curves);
  const double scale = kPitch / (double)plan.n;
  auto proj = [&](const Site& p) {
    return P2{(plan.n * p.x - p.y) * scale, -(plan.n * p.y - p.z) * scale};
  };
  std::map<std::pair<int, int>, std::vector<double>> cuts;
  for (const UnderCut& c : plan.cuts) cuts[{c.curve, c.edge}].push_back(c.t);

  const double gap = 0.18;
  SvgBuilder svg;
  for (int ci = 0; ci < (int)curves.size(); ++ci) {
    const auto& v = curves[ci].vertices;
    svg.body << "<g stroke=\"" << chain_color(ci)
             << "\" stroke-width=\"2.5\" stroke-linecap=\"round\">\n";
    for (int ei = 0; ei < (int)v.size(); ++ei) {
      const P2 a = proj(v[ei]), b = proj(v[(ei + 1) % v.size()]);
      std::vector<std::pair<double, double>> segs;
      double start = 0.0;
      auto it = cuts.find({ci, ei});
      if (it != cuts.end())
        for (double t : it->second) {
          segs.emplace_back(start, std::max(start, t - gap));
          start = std::min(1.0, t + gap);
        }
      segs.emplace_back(start, 1.0);
      for (const auto& [s0, s1] : segs) {
        if (s1 - s0 < 1e-9) continue;
        const P2 p{a.x + (b.x - a.x) * s0, a.y + (b.y - a.y) * s0};
        const P2 q{a.x + (b.x - a.x) * s1, a.y + (b.y - a.y) * s1};
        svg.line(p, q);
      }
    }
    svg.body << "</g>\n";
  }
  return svg.finish();
}

}  // namespace hpfold
