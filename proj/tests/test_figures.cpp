#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "doctest.h"
#include "ktrunc/figures.hpp"
#include "ktrunc/functorial.hpp"

using namespace ktrunc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE_MESSAGE(f.good(), "missing golden file ", path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return slurp(std::string(KTRUNC_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("figures are byte-deterministic") {
  Figure a = emit_interlock(Prime(2), 4, 3, 20, 15);
  Figure b = emit_interlock(Prime(2), 4, 3, 20, 15);
  CHECK(a.svg == b.svg);
  CHECK(a.csv == b.csv);
  Figure c = emit_multtable(MultMode::aa, Prime(3), 2, true, 1, 2, 12);
  Figure d = emit_multtable(MultMode::aa, Prime(3), 2, true, 1, 2, 12);
  CHECK(c.svg == d.svg);
  CHECK(c.csv == d.csv);
}

TEST_CASE("slopes figure matches its golden") {
  Figure f = emit_slopes(4, 12, 3);
  CHECK(f.basename == "slopes-e4-d12-i3");
  CHECK(f.svg == golden("slopes-e4-d12-i3.svg"));
  CHECK(f.csv == golden("slopes-e4-d12-i3.csv"));
}

TEST_CASE("bands figure matches its golden") {
  Figure f = emit_bands(Prime(2), 2, 2, 7, 3);
  CHECK(f.basename == "bands-p2-e2-i2-j7-r3");
  CHECK(f.svg == golden("bands-p2-e2-i2-j7-r3.svg"));
  CHECK(f.csv == golden("bands-p2-e2-i2-j7-r3.csv"));
  // i = 0: every can edge is an isomorphism
  Figure z = emit_bands(Prime(2), 2, 0, 7, 3);
  std::istringstream rows(z.csv);
  std::string line;
  std::getline(rows, line);  // header
  CHECK(line == "j,r,d,can_solid,phi_solid");
  while (std::getline(rows, line)) {
    auto c1 = line.find(',');
    auto c2 = line.find(',', c1 + 1);
    auto c3 = line.find(',', c2 + 1);
    CHECK(line.substr(c3 + 1, 1) == "1");
  }
}

TEST_CASE("interlock plot properties") {
  Figure f = emit_interlock(Prime(2), 3, 2, 24, 18);
  std::istringstream rows(f.csv);
  std::string line;
  std::getline(rows, line);
  CHECK(line == "j,i,red,green");
  int cells = 0;
  while (std::getline(rows, line)) {
    i64 j, i;
    int red, green;
    char comma;
    std::istringstream cell(line);
    cell >> j >> comma >> i >> comma >> red >> comma >> green;
    ++cells;
    CHECK(j <= 2 * i);  // rows exist only where the target band is nonzero
    if (green) CHECK(!red);
    CHECK(red == (pi_star_nonzero({2, 3, 2, i, j}) ? 1 : 0));
  }
  CHECK(cells > 0);
  CHECK(f.svg.find("<svg") != std::string::npos);
  CHECK(f.svg.find("</svg>") != std::string::npos);
  CHECK(f.svg.find("#d62728") != std::string::npos);
  CHECK(f.svg.find("#1f77b4") != std::string::npos);
}

TEST_CASE("multtable symmetry and shape") {
  // i1-vs-i2 tables with j1 = j2 are symmetric
  Figure f = emit_multtable(MultMode::aa, Prime(2), 3, true, 1, 1, 10);
  std::map<std::pair<i64, i64>, int> grid;
  std::istringstream rows(f.csv);
  std::string line;
  std::getline(rows, line);
  CHECK(line == "x,y,nonzero");
  while (std::getline(rows, line)) {
    i64 x, y;
    int nz;
    char comma;
    std::istringstream cell(line);
    cell >> x >> comma >> y >> comma >> nz;
    grid[{x, y}] = nz;
  }
  CHECK(grid.size() == 100);
  for (const auto& [xy, nz] : grid) CHECK(nz == grid.at({xy.second, xy.first}));
}

TEST_CASE("figure csv endings are plain LF") {
  Figure f = emit_slopes(2, 4, 2);
  CHECK(f.csv.find('\r') == std::string::npos);
  CHECK(!f.csv.empty());
  CHECK(f.csv.back() == '\n');
  for (unsigned char ch : f.svg) CHECK(ch < 0x80);
}
