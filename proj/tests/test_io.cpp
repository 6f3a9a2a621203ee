#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "cmcrot/io.hpp"

using namespace cmcrot;

TEST_CASE("seventeen significant digits round-trip every double") {
    for (double x : {1.0 / 3.0, 0.1, std::numbers::pi, 1e300, 2.2250738585072014e-308,
                     -2.5, 0.52961192052440609, 1.6829327181692992}) {
        const std::string s = io::format_g17(x);
        CHECK(std::stod(s) == x);
    }
    CHECK(io::format_g17(1.0) == "1");
    CHECK(io::format_g17(0.0) == "0");
}

TEST_CASE("CSV emission parses back to the same table") {
    const std::vector<std::string> header{"C", "t1", "t2", "T", "P"};
    const std::vector<std::vector<double>> rows{
        {10.0, 0.01000020001200096, 2.2310511062501956, 2.2999086467744863,
         1.8117175193612325},
        {3.0, 1.0 / 3.0, 1.5, 2.25, 1.875},
    };
    const std::string text = io::csv_table(header, rows);
    const auto [h2, r2] = io::parse_csv(text);
    CHECK(h2 == header);
    REQUIRE(r2.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            CHECK(r2[i][j] == rows[i][j]); // bitwise, thanks to %.17g
    // emitting the parsed table reproduces the text byte for byte
    CHECK(io::csv_table(h2, r2) == text);
}

TEST_CASE("CSV parsing rejects malformed input") {
    CHECK_THROWS_AS(io::parse_csv(""), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_csv("a,b\n1.0\n"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_csv("a,b\n1.0,zzz\n"), std::invalid_argument);
    CHECK_THROWS_AS(io::csv_table({"a", "b"}, {{1.0}}), std::invalid_argument);
}

TEST_CASE("profile rows carry the full sample") {
    CHECK(io::profile_csv_header() ==
          std::vector<std::string>{"s", "w", "wdot", "r", "lambda", "mu", "vartheta",
                                   "theta", "y1", "y2", "y3", "energy_residual"});
    ProfileSample s;
    s.s = 0.5;
    s.w = 1.5;
    s.w_dot = -0.25;
    s.r = 0.6;
    s.lambda = 1.1;
    s.mu = -0.4;
    s.vartheta = 0.9;
    s.theta = 2.0;
    s.y = {0.1, 0.2, 0.3};
    s.energy_residual = 1e-12;
    const auto row = io::profile_csv_row(s);
    CHECK(row == std::vector<double>{0.5, 1.5, -0.25, 0.6, 1.1, -0.4, 0.9, 2.0, 0.1,
                                     0.2, 0.3, 1e-12});
}

TEST_CASE("certificates serialize with outcome-dependent fields") {
    Params p{5, 4, 1.0};
    ExistenceCertificate cert;
    cert.target = 2.0;
    cert.bounds = PeriodBounds{1.5, 3.6};
    cert.scan = {{2.0, 3.5}, {3.0, 3.1}};

    cert.outcome = SolveOutcome::not_found;
    auto j = io::certificate_json(p, cert);
    CHECK(j["outcome"] == "not_found");
    CHECK(j["params"]["n"] == 5);
    CHECK(j["params"]["H"] == 1.0);
    CHECK(j["bounds"]["A"] == 1.5);
    CHECK(j["scan"].size() == 2);
    CHECK_FALSE(j.contains("C_star"));

    cert.outcome = SolveOutcome::found;
    cert.C_star = 5.3;
    cert.P_achieved = 2.0;
    cert.residual = 1e-12;
    cert.bracket_lo = 5.0;
    cert.bracket_hi = 6.0;
    j = io::certificate_json(p, cert);
    CHECK(j["outcome"] == "found");
    CHECK(j["C_star"] == 5.3);
    CHECK(j["bracket"]["lo"] == 5.0);

    cert.outcome = SolveOutcome::unreachable;
    CHECK(io::certificate_json(p, cert)["outcome"] == "unreachable");
}

TEST_CASE("closure reports serialize flat") {
    ClosureReport rep;
    rep.delta_theta = 1e-5;
    rep.max_Hm_deviation = 2e-9;
    const auto j = io::closure_json(Params{5, 4, 1.0}, 5.3, 3, rep);
    CHECK(j["C"] == 5.3);
    CHECK(j["periods"] == 3);
    CHECK(j["delta_theta"] == 1e-5);
    CHECK(j["max_Hm_deviation"] == 2e-9);
}

TEST_CASE("SVG projection is a standalone document") {
    std::vector<ProfileSample> samples(3);
    samples[0].y = {0.0, 1.0, 0.0};
    samples[1].y = {0.0, 0.0, 1.0};
    samples[2].y = {0.0, -1.0, 0.0};
    const std::string svg = io::svg_disk_projection(samples, 400);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    // the unit circle maps y2 = 1 to the right edge of the margin box
    CHECK(svg.find("381.818") != std::string::npos);
}

TEST_CASE("files are written verbatim") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "cmcrot_io_test.txt";
    io::write_file(path.string(), "line\n");
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "line\n");
    fs::remove(path);
    CHECK_THROWS_AS(io::write_file("/nonexistent-dir/x.txt", "y"), std::runtime_error);
}
