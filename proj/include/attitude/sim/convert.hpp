/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace attitude::sim {

enum class Rep { So3, Euler, AngleAxis, Rodriguez, Quat };
enum class AngleUnit { Degrees, Radians };

std::optional<Rep> parse_rep(std::string_view name);
std::string_view rep_name(Rep r);

/// Numbers separated by commas or whitespace, optionally in brackets.
/// Throws ParseError.
std::vector<double> parse_numbers(std::string_view text);

/// Converts `value` between representations and formats the result as
/// "[a, b, ...]".
///
/// so3 is nine numbers row-major, euler is roll pitch yaw, angle-axis is the
/// angle followed by the axis, quat is scalar first and is normalized on
/// input. Angles use `unit`. Representation errors propagate as attitude::Error.
std::string convert_value(Rep from, Rep to, std::string_view value, AngleUnit unit = AngleUnit::Degrees);

}  // namespace attitude::sim
