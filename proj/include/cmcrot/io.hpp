#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cmcrot/existence.hpp"
#include "cmcrot/profile.hpp"

namespace cmcrot::io {

// %.17g: enough significant digits that parsing the text reproduces the
// exact double, so emitted tables round-trip byte-identically.
std::string format_g17(double x);

// One CSV from header + rows, every float at 17 significant digits.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows);

// Parse a CSV produced by csv_table back into header + double rows.
std::pair<std::vector<std::string>, std::vector<std::vector<double>>>
parse_csv(const std::string& text);

std::vector<std::string> profile_csv_header();
std::vector<double> profile_csv_row(const ProfileSample& s);

nlohmann::json certificate_json(const Params& params, const ExistenceCertificate& cert);
nlohmann::json closure_json(const Params& params, double C, int periods,
                            const ClosureReport& report);

// Disk projection (y2, y3) of the generating curve inside the unit circle,
// as a standalone SVG 1.1 document.
std::string svg_disk_projection(const std::vector<ProfileSample>& samples,
                                int size_px = 640);

void write_file(const std::string& path, const std::string& content);

} // namespace cmcrot::io
