/* SPDX-License-Identifier: Apache-2.0 */
#include "attitude/sim/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "attitude/error.hpp"

namespace attitude::sim {

const std::vector<std::string>& csv_columns()
{
  static const std::vector<std::string> cols = {
      "t",    "r11",  "r12",   "r13",   "r21",   "r22",   "r23",           "r31",
      "r32",  "r33",  "phi",   "theta", "psi",   "rho1",  "rho2",          "rho3",
      "q0",   "q1",   "q2",    "q3",    "qe0",   "qe1",   "qe2",           "qe3",
      "div_euler", "div_rodriguez", "div_quat", "div_quat_exact"};
  return cols;
}

namespace {

void put(std::string& line, double v)
{
  if (!line.empty()) {
    line += ',';
  }
  if (std::isnan(v)) {
    line += "nan";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  line += buf;
}

}  // namespace

void write_csv(const RunOutput& out, std::ostream& os)
{
  const double nan = std::nan("");
  std::string line;
  for (const std::string& c : csv_columns()) {
    if (!line.empty()) {
      line += ',';
    }
    line += c;
  }
  os << line << '\n';
  for (const TrajectorySample& row : out.rows) {
    line.clear();
    put(line, row.t);
    for (int i = 0; i < 9; ++i) {
      put(line, row.r(i / 3, i % 3));
    }
    const Vec3 xi = row.xi ? row.xi->as_vector() : Vec3::Constant(nan);
    for (int i = 0; i < 3; ++i) put(line, xi(i));
    const Vec3 rho = row.rho ? row.rho->rho : Vec3::Constant(nan);
    for (int i = 0; i < 3; ++i) put(line, rho(i));
    const Vec4 q = row.q ? row.q->as_vector() : Vec4::Constant(nan);
    for (int i = 0; i < 4; ++i) put(line, q(i));
    const Vec4 qe = row.q_exact ? row.q_exact->as_vector() : Vec4::Constant(nan);
    for (int i = 0; i < 4; ++i) put(line, qe(i));
    for (double d : row.divergence) put(line, d);
    os << line << '\n';
  }
}

void write_csv(const RunOutput& out, const std::filesystem::path& path)
{
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  }
  write_csv(out, f);
  f.flush();
  if (!f) {
    throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
  }
}

}  // namespace attitude::sim
