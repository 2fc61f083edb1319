/* SPDX-License-Identifier: Apache-2.0 */
#include "attitude/sim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "attitude/error.hpp"
#include "attitude/representations.hpp"
#include "json.hpp"

namespace attitude::sim {

using nlohmann::json;

std::string_view method_name(Method m)
{
  switch (m) {
    case Method::So3Exact: return "so3-exact";
    case Method::EulerRk4: return "euler-rk4";
    case Method::RodriguezRk4: return "rodriguez-rk4";
    case Method::QuatRk4: return "quat-rk4";
    case Method::QuatExact: return "quat-exact";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name)
{
  for (Method m : kAllMethods) {
    if (method_name(m) == name) {
      return m;
    }
  }
  return std::nullopt;
}

AngularVelocity Scenario::omega_at(double t) const
{
  AngularVelocity w;
  for (int i = 0; i < 3; ++i) {
    w(i) = omega[i].amp * std::sin(omega[i].freq * t + omega[i].phase);
  }
  return w;
}

Vec3 Scenario::omega_rate_at(double t) const
{
  Vec3 w;
  for (int i = 0; i < 3; ++i) {
    w(i) = omega[i].amp * omega[i].freq * std::cos(omega[i].freq * t + omega[i].phase);
  }
  return w;
}

OmegaProfile Scenario::profile() const
{
  return [w = omega](double t) {
    AngularVelocity v;
    for (int i = 0; i < 3; ++i) {
      v(i) = w[i].amp * std::sin(w[i].freq * t + w[i].phase);
    }
    return v;
  };
}

bool Scenario::runs(Method m) const
{
  return std::find(integrators.begin(), integrators.end(), m) != integrators.end();
}

std::size_t Scenario::step_count() const
{
  return static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
}

void validate(const Scenario& s)
{
  if (!(std::isfinite(s.dt) && s.dt > 0.0)) {
    throw Error(ErrorCode::ValidationError, "dt must be positive");
  }
  if (!(std::isfinite(s.t_end) && s.t_end >= s.dt)) {
    throw Error(ErrorCode::ValidationError, "t_end must be at least dt");
  }
  for (const Sinusoid& c : s.omega) {
    if (!std::isfinite(c.amp) || !std::isfinite(c.freq) || !std::isfinite(c.phase)) {
      throw Error(ErrorCode::ValidationError, "omega parameters must be finite");
    }
  }
  try {
    validate_rotation(s.r0.matrix());
  }
  catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, std::string("r0: ") + e.what());
  }
  if (s.integrators.empty()) {
    throw Error(ErrorCode::ValidationError, "integrators must not be empty");
  }
}

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& msg)
{
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + msg);
}

double number_field(const json& j, const std::string& field)
{
  if (!j.is_number()) {
    field_error(field, "expected a number");
  }
  return j.get<double>();
}

std::size_t line_of(std::string_view text, std::size_t byte)
{
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
}

}  // namespace

Scenario parse_scenario(std::string_view text)
{
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  }
  catch (const json::parse_error& e) {
    std::ostringstream os;
    os << "line " << line_of(text, e.byte) << ": " << e.what();
    throw Error(ErrorCode::ParseError, os.str());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::ParseError, "scenario must be a JSON object");
  }

  Scenario s;
  static const std::array<std::string_view, 6> keys = {"omega", "r0", "dt", "t_end", "integrators", "seed"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      field_error(key, "unknown key");
    }
  }

  if (!doc.contains("omega")) {
    field_error("omega", "missing");
  }
  const json& om = doc.at("omega");
  if (!om.is_array() || om.size() != 3) {
    field_error("omega", "expected an array of 3 objects");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string name = "omega[" + std::to_string(i) + "]";
    const json& c = om[i];
    if (!c.is_object()) {
      field_error(name, "expected an object {amp, freq, phase}");
    }
    for (const auto& [key, value] : c.items()) {
      if (key != "amp" && key != "freq" && key != "phase") {
        field_error(name + "." + key, "unknown key");
      }
    }
    for (const char* k : {"amp", "freq"}) {
      if (!c.contains(k)) {
        field_error(name + "." + k, "missing");
      }
    }
    s.omega[i].amp = number_field(c.at("amp"), name + ".amp");
    s.omega[i].freq = number_field(c.at("freq"), name + ".freq");
    s.omega[i].phase = c.contains("phase") ? number_field(c.at("phase"), name + ".phase") : 0.0;
  }

  if (!doc.contains("r0")) {
    field_error("r0", "missing");
  }
  const json& r0 = doc.at("r0");
  if (!r0.is_array() || r0.size() != 9) {
    field_error("r0", "expected 9 numbers in row-major order");
  }
  Mat3 m;
  for (int i = 0; i < 9; ++i) {
    m(i / 3, i % 3) = number_field(r0[i], "r0[" + std::to_string(i) + "]");
  }
  s.r0 = RotationMatrix::unchecked(m);

  if (doc.contains("dt")) {
    s.dt = number_field(doc.at("dt"), "dt");
  }
  if (doc.contains("t_end")) {
    s.t_end = number_field(doc.at("t_end"), "t_end");
  }
  if (doc.contains("integrators")) {
    const json& list = doc.at("integrators");
    if (!list.is_array()) {
      field_error("integrators", "expected an array of names");
    }
    s.integrators.clear();
    for (const json& item : list) {
      if (!item.is_string()) {
        field_error("integrators", "expected an array of names");
      }
      const auto m = parse_method(item.get<std::string>());
      if (!m) {
        field_error("integrators", "unknown integrator '" + item.get<std::string>() + "'");
      }
      if (!s.runs(*m)) {
        s.integrators.push_back(*m);
      }
    }
  }
  if (doc.contains("seed")) {
    const json& seed = doc.at("seed");
    if (!seed.is_number_integer()) {
      field_error("seed", "expected an integer");
    }
    s.seed = seed.get<std::int64_t>();
  }

  validate(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open scenario file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::IoError, "cannot read scenario file '" + path.string() + "'");
  }
  return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& s)
{
  json doc;
  doc["omega"] = json::array();
  for (const Sinusoid& c : s.omega) {
    doc["omega"].push_back({{"amp", c.amp}, {"freq", c.freq}, {"phase", c.phase}});
  }
  doc["r0"] = json::array();
  for (int i = 0; i < 9; ++i) {
    doc["r0"].push_back(s.r0(i / 3, i % 3));
  }
  doc["dt"] = s.dt;
  doc["t_end"] = s.t_end;
  doc["integrators"] = json::array();
  for (Method m : s.integrators) {
    doc["integrators"].push_back(std::string(method_name(m)));
  }
  doc["seed"] = s.seed;
  return doc.dump(2) + "\n";
}

Scenario builtin_example(int n)
{
  constexpr double pi = std::numbers::pi;
  constexpr double deg = pi / 180.0;
  Scenario s;
  if (n == 1) {
    s.omega = {Sinusoid{0.1, 0.3376, 0.0}, Sinusoid{0.07, 0.6079, pi}, Sinusoid{0.05, 0.7413, pi / 3.0}};
    s.r0 = euler_to_rotation({4.8035 * deg, 13.4601 * deg, 12.9329 * deg});
  }
  else if (n == 2) {
    s.omega = {Sinusoid{0.3, 0.8422, 0.0}, Sinusoid{0.21, 0.3682, pi}, Sinusoid{0.15, 1.4516, pi / 3.0}};
    s.r0 = euler_to_rotation({56.1428 * deg, 20.6724 * deg, 44.4471 * deg});
  }
  else {
    throw Error(ErrorCode::UnknownExample, "unknown example " + std::to_string(n) + " (expected 1 or 2)");
  }
  return s;
}

}  // namespace attitude::sim
