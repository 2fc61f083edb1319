/* SPDX-License-Identifier: Apache-2.0 */
#include "attitude/sim/convert.hpp"

#include <charconv>
#include <cstdio>
#include <numbers>

#include "attitude/error.hpp"
#include "attitude/representations.hpp"

namespace attitude::sim {

std::optional<Rep> parse_rep(std::string_view name)
{
  if (name == "so3") return Rep::So3;
  if (name == "euler") return Rep::Euler;
  if (name == "angle-axis") return Rep::AngleAxis;
  if (name == "rodriguez") return Rep::Rodriguez;
  if (name == "quat") return Rep::Quat;
  return std::nullopt;
}

std::string_view rep_name(Rep r)
{
  switch (r) {
    case Rep::So3: return "so3";
    case Rep::Euler: return "euler";
    case Rep::AngleAxis: return "angle-axis";
    case Rep::Rodriguez: return "rodriguez";
    case Rep::Quat: return "quat";
  }
  return "unknown";
}

std::vector<double> parse_numbers(std::string_view text)
{
  std::vector<double> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '[' || c == ']'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) {
      ++j;
    }
    const std::string_view tok = text.substr(i, j - i);
    double v = 0.0;
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') {
      ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::ParseError, "not a number: '" + std::string(tok) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

namespace {

std::size_t arity(Rep r)
{
  switch (r) {
    case Rep::So3: return 9;
    case Rep::Euler:
    case Rep::Rodriguez: return 3;
    case Rep::AngleAxis:
    case Rep::Quat: return 4;
  }
  return 0;
}

std::string format(const std::vector<double>& v)
{
  std::string s = "[";
  char buf[40];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.10g", v[i] == 0.0 ? 0.0 : v[i]);
    if (i) s += ", ";
    s += buf;
  }
  return s + "]";
}

}  // namespace

std::string convert_value(Rep from, Rep to, std::string_view value, AngleUnit unit)
{
  const std::vector<double> x = parse_numbers(value);
  if (x.size() != arity(from)) {
    throw Error(ErrorCode::ParseError, std::string(rep_name(from)) + " expects " +
                                           std::to_string(arity(from)) + " numbers, got " +
                                           std::to_string(x.size()));
  }
  const double k = unit == AngleUnit::Degrees ? std::numbers::pi / 180.0 : 1.0;

  std::optional<RotationMatrix> r;
  std::optional<EulerAngles> xi;
  std::optional<AngleAxis> aa;
  std::optional<RodriguezVector> rho;
  std::optional<UnitQuaternion> q;
  switch (from) {
    case Rep::So3: {
      Mat3 m;
      for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = x[i];
      r = validate_rotation(m);
      break;
    }
    case Rep::Euler: xi = EulerAngles{k * x[0], k * x[1], k * x[2]}; break;
    case Rep::AngleAxis: aa = AngleAxis{k * x[0], Vec3(x[1], x[2], x[3])}; break;
    case Rep::Rodriguez: rho = RodriguezVector{Vec3(x[0], x[1], x[2])}; break;
    case Rep::Quat: q = normalize(Quat4(x[0], x[1], x[2], x[3])); break;
  }

  auto rotation = [&]() -> RotationMatrix {
    if (r) return *r;
    if (xi) return euler_to_rotation(*xi);
    if (aa) return angle_axis_to_rotation(*aa);
    if (rho) return rodriguez_to_rotation(*rho);
    return quaternion_to_rotation(*q);
  };

  switch (to) {
    case Rep::So3: {
      const RotationMatrix m = rotation();
      std::vector<double> v(9);
      for (int i = 0; i < 9; ++i) v[i] = m(i / 3, i % 3);
      return format(v);
    }
    case Rep::Euler: {
      EulerAngles e;
      if (xi) e = *xi;
      else if (rho) e = euler_from_rodriguez(*rho);
      else if (q) e = euler_from_quaternion(*q);
      else e = rotation_to_euler(rotation());
      return format({e.roll / k, e.pitch / k, e.yaw / k});
    }
    case Rep::AngleAxis: {
      AngleAxis a;
      if (aa) a = *aa;
      else if (rho) a = angle_axis_from_rodriguez(*rho);
      else if (q) a = angle_axis_from_quaternion(*q);
      else a = rotation_to_angle_axis(rotation());
      return format({a.angle / k, a.axis.x(), a.axis.y(), a.axis.z()});
    }
    case Rep::Rodriguez: {
      RodriguezVector p;
      if (rho) p = *rho;
      else if (aa) p = rodriguez_from_angle_axis(*aa);
      else if (q) p = rodriguez_from_quaternion(*q);
      else p = rotation_to_rodriguez(rotation());
      return format({p.rho.x(), p.rho.y(), p.rho.z()});
    }
    case Rep::Quat: {
      UnitQuaternion u;
      if (q) u = *q;
      else if (aa) u = quaternion_from_angle_axis(*aa);
      else if (rho) u = quaternion_from_rodriguez(*rho);
      else u = rotation_to_quaternion(rotation());
      return format({u.q0(), u.q().x(), u.q().y(), u.q().z()});
    }
  }
  return {};
}

}  // namespace attitude::sim
