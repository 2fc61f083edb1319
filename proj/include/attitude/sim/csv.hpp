/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "attitude/sim/simulation.hpp"

namespace attitude::sim {

/// Column names in output order.
const std::vector<std::string>& csv_columns();

/// Header and one row per sample, 17 significant digits, "nan" for absent values.
void write_csv(const RunOutput& out, std::ostream& os);
/// Throws IoError.
void write_csv(const RunOutput& out, const std::filesystem::path& path);

}  // namespace attitude::sim
