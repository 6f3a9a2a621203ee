#include "cmcrot/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cmcrot::io {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("csv_table: row width does not match header");
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_g17(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::pair<std::vector<std::string>, std::vector<std::vector<double>>>
parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("parse_csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> header;
    {
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) header.push_back(cell);
    }
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            size_t pos = 0;
            row.push_back(std::stod(cell, &pos));
            if (pos != cell.size())
                throw std::invalid_argument("parse_csv: malformed number '" + cell + "'");
        }
        if (row.size() != header.size())
            throw std::invalid_argument("parse_csv: ragged row");
        rows.push_back(std::move(row));
    }
    return {std::move(header), std::move(rows)};
}

std::vector<std::string> profile_csv_header() {
    return {"s", "w", "wdot", "r", "lambda", "mu", "vartheta", "theta",
            "y1", "y2", "y3", "energy_residual"};
}

std::vector<double> profile_csv_row(const ProfileSample& p) {
    return {p.s, p.w, p.w_dot, p.r, p.lambda, p.mu, p.vartheta, p.theta,
            p.y[0], p.y[1], p.y[2], p.energy_residual};
}

nlohmann::json certificate_json(const Params& params, const ExistenceCertificate& cert) {
    nlohmann::json j;
    j["params"] = {{"n", params.n}, {"m", params.m}, {"H", params.H}};
    j["target"] = cert.target;
    switch (cert.outcome) {
    case SolveOutcome::found: j["outcome"] = "found"; break;
    case SolveOutcome::not_found: j["outcome"] = "not_found"; break;
    case SolveOutcome::unreachable: j["outcome"] = "unreachable"; break;
    }
    j["bounds"] = {{"A", cert.bounds.A}, {"B", cert.bounds.B}};
    nlohmann::json scan = nlohmann::json::array();
    for (const auto& [C, P] : cert.scan) scan.push_back({C, P});
    j["scan"] = std::move(scan);
    if (cert.outcome == SolveOutcome::found) {
        j["C_star"] = cert.C_star;
        j["P_achieved"] = cert.P_achieved;
        j["residual"] = cert.residual;
        j["bracket"] = {{"lo", cert.bracket_lo}, {"hi", cert.bracket_hi}};
    }
    return j;
}

nlohmann::json closure_json(const Params& params, double C, int periods,
                            const ClosureReport& rep) {
    nlohmann::json j;
    j["params"] = {{"n", params.n}, {"m", params.m}, {"H", params.H}};
    j["C"] = C;
    j["periods"] = periods;
    j["delta_theta"] = rep.delta_theta;
    j["w_mismatch"] = rep.w_mismatch;
    j["wdot_mismatch"] = rep.wdot_mismatch;
    j["max_energy_drift"] = rep.max_energy_drift;
    j["max_Hm_deviation"] = rep.max_Hm_deviation;
    return j;
}

std::string svg_disk_projection(const std::vector<ProfileSample>& samples, int size_px) {
    // Orthogonal projection of the orbit (y2, y3) onto the rotation plane,
    // drawn inside the unit disk with a 10% margin.
    const double half = size_px / 2.0;
    const double scale = half / 1.1;
    auto px = [&](double y) { return half + y * scale; };
    auto py = [&](double y) { return half - y * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px
        << "\" height=\"" << size_px << "\" viewBox=\"0 0 " << size_px << ' ' << size_px
        << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<circle cx=\"" << half << "\" cy=\"" << half << "\" r=\"" << scale
        << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    svg << "<polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < samples.size(); ++i) {
        if (i) svg << ' ';
        svg << px(samples[i].y[1]) << ',' << py(samples[i].y[2]);
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_file: cannot open '" + path + "'");
    f << contents;
    if (!f) throw std::runtime_error("write_file: write failed for '" + path + "'");
}

} // namespace cmcrot::io
