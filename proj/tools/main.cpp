#include <atomic>
#include <cmath>
#include <cstdint>
#include <future>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cmcrot/curvature.hpp"
#include "cmcrot/existence.hpp"
#include "cmcrot/io.hpp"
#include "cmcrot/period.hpp"
#include "cmcrot/potential.hpp"
#include "cmcrot/profile.hpp"
#include "cmcrot/verify.hpp"

namespace {

// exit codes: 0 success, 1 verification failure, 2 bad arguments / out of
// domain, 3 target period unattained, 4 numerical failure
enum Exit { ok = 0, verify_failed = 1, bad_arguments = 2, unattained = 3, numerical = 4 };

void emit(const std::string& out, const std::string& content) {
    if (out == "-")
        std::cout << content;
    else
        cmcrot::io::write_file(out, content);
}

// run f(i) for i in [0, count) on a worker pool; the iterations are
// independent period evaluations
template <typename F>
void parallel_for(size_t count, F&& f) {
    const size_t workers =
        std::max<size_t>(1, std::min<size_t>(count, std::thread::hardware_concurrency()));
    std::atomic<size_t> next{0};
    std::vector<std::future<void>> futs;
    for (size_t t = 0; t < workers; ++t)
        futs.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
        }));
    for (auto& fu : futs) fu.get();
}

int cmd_analyze(const cmcrot::Params& params, double root_tol, bool as_json,
                const std::string& out) {
    using namespace cmcrot;
    params.validate();
    const CriticalData cd = critical_point(params, root_tol);
    const auto cf = critical_closed_form(params);
    const double B = limit_at_c0(params);
    // the C -> infinity limit degenerates to pi as H -> 0
    const double A = params.H > 0.0 ? limit_at_infinity(params) : std::numbers::pi;

    std::ostringstream os;
    if (as_json) {
        nlohmann::json j;
        j["params"] = {{"n", params.n}, {"m", params.m}, {"H", params.H}};
        j["v0"] = cd.v0;
        j["c0"] = cd.c0;
        j["a"] = cd.a;
        j["A"] = A;
        j["B"] = B;
        if (cf)
            j["closed_form"] = {{"v0", cf->v0}, {"c0", cf->c0}, {"a", cf->a}};
        else
            j["closed_form"] = nullptr;
        os << j.dump(2) << '\n';
    } else {
        using io::format_g17;
        os << "n = " << params.n << "  m = " << params.m << "  H_" << params.m << " = "
           << format_g17(params.H) << '\n'
           << "v0 (critical point of q)        " << format_g17(cd.v0) << '\n'
           << "c0 (critical energy)            " << format_g17(cd.c0) << '\n'
           << "a  (q'' at v0 is -2a)           " << format_g17(cd.a) << '\n'
           << "A  (period limit, C -> inf)     " << format_g17(A) << '\n'
           << "B  (period limit, C -> c0)      " << format_g17(B) << '\n';
        if (cf)
            os << "closed form                     v0 " << format_g17(cf->v0) << "  c0 "
               << format_g17(cf->c0) << "  a " << format_g17(cf->a) << '\n';
    }
    emit(out, os.str());
    return ok;
}

int cmd_sweep(const cmcrot::Params& params, double c_min, double c_max, int samples,
              double root_tol, double quad_tol, const std::string& out) {
    using namespace cmcrot;
    params.validate();
    if (samples <= 0) samples = 50;
    if (samples < 2) throw std::invalid_argument("sweep: --samples must be >= 2");
    const CriticalData cd = critical_point(params, root_tol);
    if (c_min <= 0.0) c_min = cd.c0 * 1.01;
    if (c_max <= 0.0) c_max = cd.c0 * 100.0;
    if (!(c_min > cd.c0))
        throw std::domain_error("sweep: --c-min must exceed c0 = " + io::format_g17(cd.c0));
    if (!(c_max > c_min)) throw std::invalid_argument("sweep: --c-max must exceed --c-min");

    // geometric spacing in the gap C - c0 resolves the c0 end of the family
    std::vector<double> grid(static_cast<size_t>(samples));
    const double g0 = c_min - cd.c0;
    const double ratio = std::pow((c_max - cd.c0) / g0, 1.0 / (samples - 1));
    for (int i = 0; i < samples; ++i)
        grid[static_cast<size_t>(i)] = cd.c0 + g0 * std::pow(ratio, i);
    grid.back() = c_max;

    std::vector<std::vector<double>> rows(grid.size());
    parallel_for(grid.size(), [&](size_t i) {
        const double Ci = grid[i];
        const RootPair rp = roots(params, Ci, root_tol);
        rows[i] = {Ci, rp.t1, rp.t2, half_period_T(params, Ci, quad_tol),
                   period_P(params, Ci, quad_tol)};
    });
    emit(out, io::csv_table({"C", "t1", "t2", "T", "P"}, rows));
    return ok;
}

int cmd_solve(const cmcrot::Params& params, int k, double c_max, double root_tol,
              double quad_tol, const std::string& out) {
    using namespace cmcrot;
    (void)root_tol;
    const ExistenceQuery query{params, k};
    query.validate();
    const ExistenceCertificate cert = exists_embedded(query, c_max, 1e-9, quad_tol);
    emit(out, io::certificate_json(params, cert).dump(2) + "\n");
    return cert.outcome == SolveOutcome::found ? ok : unattained;
}

int cmd_profile(const cmcrot::Params& params, double C, int periods, int samples,
                double ode_tol, double quad_tol, const std::string& out,
                const std::string& svg) {
    using namespace cmcrot;
    if (samples <= 0) samples = 256;
    std::vector<ProfileSample> profile;
    try {
        profile = integrate_profile(params, C, periods, samples, ode_tol, quad_tol);
    } catch (const integration_error& e) {
        // keep whatever was integrated so the failure can be inspected
        std::vector<std::vector<double>> rows;
        for (const ProfileSample& s : e.partial) rows.push_back(io::profile_csv_row(s));
        emit(out, io::csv_table(io::profile_csv_header(), rows));
        std::cerr << "numerical failure: " << e.what() << " (partial data written)\n";
        return numerical;
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(profile.size());
    for (const ProfileSample& s : profile) rows.push_back(io::profile_csv_row(s));
    emit(out, io::csv_table(io::profile_csv_header(), rows));

    const ClosureReport rep = closure_check(params, profile, periods);
    const std::string closure_path =
        (out == "-") ? "profile.closure.json" : out + ".closure.json";
    cmcrot::io::write_file(closure_path,
                           io::closure_json(params, C, periods, rep).dump(2) + "\n");
    if (!svg.empty()) io::write_file(svg, io::svg_disk_projection(profile));
    return ok;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    const auto results = cmcrot::run_verification(suite, seed);
    if (results.empty()) {
        std::cerr << "verify: no checks selected (unknown suite '" << suite << "'?)\n";
        return bad_arguments;
    }
    int failed = 0;
    for (const auto& r : results) {
        std::ostringstream line;
        line.precision(3);
        line << (r.pass ? "PASS" : "FAIL") << "  " << r.suite << '/' << r.id << "  ["
             << r.seconds << " s]  " << r.note;
        std::cout << line.str() << '\n';
        if (!r.pass) ++failed;
    }
    std::cout << results.size() - failed << '/' << results.size() << " checks passed\n";
    return failed == 0 ? ok : verify_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotational hypersurfaces with constant m-th mean curvature in the (n+1)-sphere"};
    app.require_subcommand(1);

    int n = 5, m = 4, k = 3, samples = 0, periods = 1;
    double H = 1.0, R = 0.0, C = 0.0, c_min = 0.0, c_max = 0.0;
    double tol_root = 1e-12, tol_quad = 1e-10, tol_ode = 1e-10;
    std::string out = "-", svg, suite;
    std::uint64_t seed = 12345;
    bool as_json = false;

    auto add_geometry = [&](CLI::App* cmd, bool with_R) {
        cmd->add_option("--n", n, "hypersurface dimension")->required();
        cmd->add_option("--m", m, "curvature order (1 <= m <= n-1)")->required();
        auto* oH = cmd->add_option("--H", H, "constant m-th mean curvature H_m >= 0");
        if (with_R) {
            auto* oR = cmd->add_option(
                "--R", R, "prescribed scalar curvature; implies H_2 (m = 2 only)");
            oR->excludes(oH);
            oH->excludes(oR);
        } else {
            oH->required();
        }
        cmd->add_option("--tol-root", tol_root, "root-finding tolerance");
        cmd->add_option("--tol-quad", tol_quad, "quadrature tolerance");
        cmd->add_option("--out", out, "output path, '-' for stdout");
    };

    auto* analyze = app.add_subcommand(
        "analyze", "critical data of the potential and the two period limits");
    add_geometry(analyze, true);
    analyze->add_flag("--json", as_json, "emit JSON instead of the text table");

    auto* sweep = app.add_subcommand(
        "sweep", "table of roots and periods over an energy range, CSV 'C,t1,t2,T,P'");
    add_geometry(sweep, false);
    sweep->add_option("--c-min", c_min, "lowest energy (> c0); defaults to 1.01 c0");
    sweep->add_option("--c-max", c_max, "highest energy; defaults to 100 c0");
    sweep->add_option("--samples", samples, "number of energies (default 50)");

    auto* solve = app.add_subcommand(
        "solve", "find the energy whose angular period is 2 pi / k, JSON certificate");
    add_geometry(solve, false);
    solve->add_option("--k", k, "winding number of the closure target")->required();
    solve->add_option("--c-max", c_max, "scan ceiling; defaults to 1e8 c0");

    auto* profile = app.add_subcommand(
        "profile", "integrate the generating curve, CSV samples + closure JSON");
    add_geometry(profile, false);
    auto* oC = profile->add_option("--C", C, "first-integral energy (> c0)");
    auto* ok_prof = profile->add_option(
        "--k", k, "solve for the energy with period 2 pi / k, then integrate that");
    oC->excludes(ok_prof);
    ok_prof->excludes(oC);
    profile->add_option("--periods", periods, "full periods to integrate (default 1)");
    profile->add_option("--samples", samples, "samples per period (default 256)");
    profile->add_option("--tol-ode", tol_ode, "ODE step-control tolerance");
    profile->add_option("--svg", svg, "also write a disk-projection SVG here");

    auto* verify = app.add_subcommand("verify", "run the library invariant checks");
    verify->add_option("--suite", suite,
                       "one of curvature|potential|period|limits|existence|profile");
    verify->add_option("--seed", seed, "seed for the random parameter draws");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_arguments;
    }

    try {
        cmcrot::Params params{n, m, H};
        if (analyze->parsed() && analyze->count("--R")) {
            if (m != 2)
                throw std::invalid_argument("--R prescribes H_2; it requires m = 2");
            params.H = cmcrot::h2_from_scalar(R, n);
        }
        if (analyze->parsed()) return cmd_analyze(params, tol_root, as_json, out);
        if (sweep->parsed())
            return cmd_sweep(params, c_min, c_max, samples, tol_root, tol_quad, out);
        if (solve->parsed()) return cmd_solve(params, k, c_max, tol_root, tol_quad, out);
        if (profile->parsed()) {
            double C_run = C;
            if (profile->count("--k")) {
                const cmcrot::ExistenceCertificate cert =
                    cmcrot::exists_embedded({params, k}, 0.0, 1e-9, tol_quad);
                if (cert.outcome != cmcrot::SolveOutcome::found) {
                    std::cerr << "profile: no energy reaches the period 2 pi / " << k << '\n';
                    return unattained;
                }
                C_run = cert.C_star;
            } else if (!profile->count("--C")) {
                throw std::invalid_argument("profile: give either --C or --k");
            }
            return cmd_profile(params, C_run, periods, samples, tol_ode, tol_quad, out, svg);
        }
        if (verify->parsed()) return cmd_verify(suite, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_arguments;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_arguments;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return numerical;
    }
    return bad_arguments;
}
