#include "ktrunc/figures.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "ktrunc/functorial.hpp"
#include "ktrunc/mult.hpp"

namespace ktrunc {

namespace {

const char* kRed = "#d62728";
const char* kGreen = "#2ca02c";
const char* kBlue = "#1f77b4";

std::string svg_open(i64 w, i64 h) {
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
    << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
    << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";
  return o.str();
}

void line(std::ostringstream& o, i64 x1, i64 y1, i64 x2, i64 y2,
          const char* color, i64 width, bool dashed = false) {
  o << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
    << y2 << "\" stroke=\"" << color << "\" stroke-width=\"" << width << "\"";
  if (dashed) o << " stroke-dasharray=\"4 3\"";
  o << "/>\n";
}

void rect(std::ostringstream& o, i64 x, i64 y, i64 w, i64 h, const char* fill,
          const char* extra = nullptr) {
  o << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
    << "\" height=\"" << h << "\" fill=\"" << fill << "\"";
  if (extra) o << " " << extra;
  o << "/>\n";
}

void circle(std::ostringstream& o, i64 cx, i64 cy, i64 r, const char* fill) {
  o << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
    << "\" fill=\"" << fill << "\"/>\n";
}

void text(std::ostringstream& o, i64 x, i64 y, const std::string& s) {
  o << "<text x=\"" << x << "\" y=\"" << y
    << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#000000\">" << s
    << "</text>\n";
}

}  // namespace

Figure emit_slopes(i64 e_max, i64 d_max, i64 i_max) {
  if (e_max < 1 || d_max < 1 || i_max < 1)
    throw std::invalid_argument("emit_slopes: bounds must be >= 1");
  const i64 C = 40, M = 40;
  const i64 W = 2 * M + e_max * C, H = 2 * M + d_max * C;
  auto px = [&](i64 e) { return M + e * C; };
  auto py = [&](i64 d) { return M + (d_max - d) * C; };

  std::ostringstream svg;
  svg << svg_open(W, H);
  line(svg, px(0), py(0), px(e_max), py(0), "#000000", 1);
  line(svg, px(0), py(0), px(0), py(d_max), "#000000", 1);
  for (i64 i = 1; i <= i_max; ++i) {
    // ray d = i*e, clipped to the plot box
    i64 ee = e_max, dd = i * e_max;
    if (dd > d_max) {
      // stop at the last lattice-exact point below d_max, then clip
      ee = d_max / i;
      dd = i * ee;
    }
    line(svg, px(0), py(0), px(ee), py(dd), kBlue, 2);
    text(svg, px(ee) + 4, py(dd) + 4, "i=" + std::to_string(i));
  }
  for (i64 e = 1; e <= e_max; ++e)
    for (i64 d = 1; d <= d_max; ++d) circle(svg, px(e), py(d), 3, "#444444");
  for (i64 e = 0; e <= e_max; ++e) text(svg, px(e) - 4, py(0) + 16, std::to_string(e));
  for (i64 d = 0; d <= d_max; ++d) text(svg, px(0) - 24, py(d) + 4, std::to_string(d));
  svg << "</svg>\n";

  std::ostringstream csv;
  csv << "e,i,d\n";
  for (i64 e = 1; e <= e_max; ++e)
    for (i64 i = 1; i <= i_max; ++i)
      if (i * e <= d_max) csv << e << "," << i << "," << i * e << "\n";

  Figure f;
  f.basename = "slopes-e" + std::to_string(e_max) + "-d" + std::to_string(d_max) +
               "-i" + std::to_string(i_max);
  f.svg = svg.str();
  f.csv = csv.str();
  return f;
}

Figure emit_bands(Prime p, i64 e, i64 i, i64 j_max, i64 r_max) {
  if (e < 1 || i < 0 || j_max < 1 || r_max < 0)
    throw std::invalid_argument("emit_bands: invalid parameters");
  std::vector<i64> bands;
  for (i64 j = 1; j <= j_max; ++j)
    if (j % p.p != 0) bands.push_back(j);

  // can: N-level d -> level d, exponent <i - ceil(d/e)>, lengths differ by
  // epsilon; phi: N-level d -> level pd, exponent <ceil(d/e) - i> (by the
  // Gamma-ratio identity), iso also needs equal lengths.
  auto can_solid = [&](i64 d) {
    return pos(i - ceil_div(d, e)) == 0 && epsilon(i, d, e) == 0;
  };
  auto phi_solid = [&](i64 d) {
    return pos(ceil_div(d, e) - i) == 0 &&
           vp(brace(d, e), p) + epsilon(i, d, e) == vp(brace(p.p * d, e), p);
  };

  const i64 CW = 70, CH = 50, M = 50;
  const i64 W = 2 * M + static_cast<i64>(bands.size() - 1) * CW + 40;
  const i64 H = 2 * M + r_max * CH;
  auto px = [&](size_t bi) { return M + static_cast<i64>(bi) * CW; };
  auto py = [&](i64 r) { return M + (r_max - r) * CH; };

  std::ostringstream svg;
  svg << svg_open(W, H);
  std::ostringstream csv;
  csv << "j,r,d,can_solid,phi_solid\n";
  for (size_t bi = 0; bi < bands.size(); ++bi) {
    i64 j = bands[bi];
    for (i64 r = 0; r <= r_max; ++r) {
      i64 d = pow_i64(p, r) * j;
      bool cs = can_solid(d);
      bool ps = phi_solid(d);
      csv << j << "," << r << "," << d << "," << (cs ? 1 : 0) << "," << (ps ? 1 : 0)
          << "\n";
      if (r < r_max) line(svg, px(bi), py(r) - 8, px(bi), py(r + 1) + 8, kBlue, 2, !ps);
      line(svg, px(bi) + 8, py(r), px(bi) + 26, py(r), kRed, 2, !cs);
      circle(svg, px(bi), py(r), 4, "#000000");
      text(svg, px(bi) - 10, py(r) + 20, std::to_string(d));
    }
    text(svg, px(bi) - 10, py(0) + 36, "j=" + std::to_string(j));
  }
  svg << "</svg>\n";

  Figure f;
  f.basename = "bands-p" + std::to_string(p.p) + "-e" + std::to_string(e) + "-i" +
               std::to_string(i) + "-j" + std::to_string(j_max) + "-r" +
               std::to_string(r_max);
  f.svg = svg.str();
  f.csv = csv.str();
  return f;
}

Figure emit_interlock(Prime p, i64 m, i64 n, i64 i_max, i64 j_max) {
  if (n < 1 || m <= n || i_max < 1 || j_max < 1)
    throw std::invalid_argument("emit_interlock: need m > n >= 1");
  const i64 CW = 4, CH = 2, M = 20;
  const i64 W = 2 * M + j_max * CW, H = 2 * M + i_max * CH;
  auto px = [&](i64 j) { return M + (j - 1) * CW; };          // left edge of column j
  auto py_top = [&](i64 i) { return M + (i_max - i) * CH; };  // top edge of row i

  std::ostringstream svg;
  svg << svg_open(W, H);
  std::ostringstream csv;
  csv << "j,i,red,green\n";

  for (i64 j = 1; j <= j_max; ++j) {
    if (j % p.p == 0) continue;
    TowerMapQuery probe{p.p, m, n, 1, j};
    bool green = lemma_predicate(probe);
    if (green)
      rect(svg, px(j), py_top(i_max), CW, i_max * CH, kGreen, "fill-opacity=\"0.3\"");

    i64 run_start = 0, run_end = -1;
    for (i64 i = ceil_div(j, n); i <= i_max; ++i) {
      TowerMapQuery q{p.p, m, n, i, j};
      bool red = pi_star_nonzero(q);
      csv << j << "," << i << "," << (red ? 1 : 0) << "," << (green ? 1 : 0) << "\n";
      if (red) {
        if (run_end == i - 1) run_end = i;
        else {
          if (run_end >= run_start && run_end > 0)
            rect(svg, px(j), py_top(run_end), CW, (run_end - run_start + 1) * CH, kRed);
          run_start = run_end = i;
        }
      }
    }
    if (run_end >= run_start && run_end > 0)
      rect(svg, px(j), py_top(run_end), CW, (run_end - run_start + 1) * CH, kRed);
  }

  // guide lines i = p^r j / m
  for (i64 pr = 1; pr <= m * i_max; pr *= p.p) {
    // endpoint: j = j_max or i = i_max, whichever clips first
    i64 je, num, den = m;
    if (pr * j_max <= m * i_max) {
      je = j_max;
      num = pr * j_max;
    } else {
      je = m * i_max / pr;
      num = pr * je;
    }
    if (je < 1) break;
    i64 x2 = M + je * CW;
    i64 y2 = M + ((static_cast<i64>(i_max) * den - num) * CH + den / 2) / den;
    line(svg, M, M + i_max * CH, x2, y2, kBlue, 1);
  }
  svg << "</svg>\n";

  Figure f;
  f.basename = "interlock-p" + std::to_string(p.p) + "-m" + std::to_string(m) +
               "-n" + std::to_string(n) + "-i" + std::to_string(i_max) + "-j" +
               std::to_string(j_max);
  f.svg = svg.str();
  f.csv = csv.str();
  return f;
}

Figure emit_multtable(MultMode mode, Prime p, i64 e, bool vary_i, i64 f1, i64 f2,
                      i64 hi) {
  if (e < 1 || f1 < 1 || f2 < 1 || hi < 1)
    throw std::invalid_argument("emit_multtable: invalid parameters");
  Parity second = mode == MultMode::aa ? Parity::a : Parity::b;

  auto cell = [&](i64 x, i64 y) {
    i64 i1 = vary_i ? x : f1, j1 = vary_i ? f1 : x;
    i64 i2 = vary_i ? y : f2, j2 = vary_i ? f2 : y;
    if (!generator_exists(Parity::a, p, e, i1, j1)) return false;
    if (!generator_exists(second, p, e, i2, j2)) return false;
    Verdict v = mode == MultMode::aa ? product_aa(i1, j1, i2, j2, p, e)
                                     : product_ab(i1, j1, i2, j2, p, e);
    return v == Verdict::nonzero;
  };

  const i64 C = hi <= 40 ? 12 : 8, M = 20;
  const i64 W = 2 * M + hi * C, H = 2 * M + hi * C;
  std::ostringstream svg;
  svg << svg_open(W, H);
  std::ostringstream csv;
  csv << "x,y,nonzero\n";
  for (i64 x = 1; x <= hi; ++x) {
    for (i64 y = 1; y <= hi; ++y) {
      bool black = cell(x, y);
      csv << x << "," << y << "," << (black ? 1 : 0) << "\n";
      if (black)
        rect(svg, M + (x - 1) * C, M + (hi - y) * C, C, C, "#000000");
    }
  }
  line(svg, M, M + hi * C, M + hi * C, M + hi * C, "#000000", 1);
  line(svg, M, M, M, M + hi * C, "#000000", 1);
  svg << "</svg>\n";

  Figure f;
  std::string axes = vary_i ? "-j" + std::to_string(f1) + "-" + std::to_string(f2) +
                                  "-i" + std::to_string(hi)
                            : "-i" + std::to_string(f1) + "-" + std::to_string(f2) +
                                  "-j" + std::to_string(hi);
  f.basename = std::string("multtable-") + (mode == MultMode::aa ? "aa" : "ab") +
               "-p" + std::to_string(p.p) + "-e" + std::to_string(e) + axes;
  f.svg = svg.str();
  f.csv = csv.str();
  return f;
}

}  // namespace ktrunc
