#pragma once

// Rendering of verification reports, batch rows and tensor dumps as JSON or
// CSV. Doubles are written with 17 significant digits; nothing time-dependent
// is written, so identical inputs give byte-identical output.

#include <string>

#include <json.hpp>

#include "infogeo/config.hpp"
#include "infogeo/suites.hpp"

namespace infogeo {

// Per-check summary (the `verify` output).
std::string render_summary(const VerificationReport& r, OutputFormat f);

// One row per point per check (the `report` output). CSV columns:
// suite,check_id,point_index,coordinates,deviation,tolerance,pass
std::string render_rows(const VerificationReport& r, OutputFormat f);

// CSV columns: tensor,row,col,row_label,col_label,value
std::string render_tensor(const nlohmann::ordered_json& dump, OutputFormat f);

// Writes `content` to `path`; throws IoError when the file cannot be written.
void write_file(const std::string& path, const std::string& content);

std::string format_double(double v);

}  // namespace infogeo
