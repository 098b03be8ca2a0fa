// coulscat: partial-wave Coulomb scattering tables from the command line.
//
// Subcommands emit CSV (or JSON) data tables; every file written is
// accompanied by a manifest with the fully resolved configuration and a
// checksum of the payload.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coulscat/cross_section.hpp"
#include "coulscat/errors.hpp"
#include "coulscat/io.hpp"
#include "coulscat/kinematics.hpp"
#include "coulscat/parallel.hpp"
#include "coulscat/phase_shifts.hpp"
#include "coulscat/special_functions.hpp"
#include "coulscat/validation.hpp"

namespace {

using namespace coulscat;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitNumericalFailure = 3;

struct CommonOpts {
    double p_mev = 0.02;
    double mass_mev = kElectronMassMeV;
    double alpha = kFineStructureConstant;
    double epsilon = 1e-3;
    int l_max = -1;
    int l_max_delta2 = 50;
    int order = 2;
    bool symmetrize = false;
    double delta = 0.0;
    std::string out;
    std::string format = "csv";
    std::string config_path;
};

// Flat key = value configuration file.  Precedence: built-in defaults, then
// the file, then explicit command-line flags.
void apply_config_file(CLI::App* cmd, const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot read config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return (b == std::string::npos) ? std::string{} : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("config line " + std::to_string(lineno) +
                                    ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        CLI::Option* opt = cmd->get_option_no_throw("--" + key);
        if (opt == nullptr)
            throw std::domain_error("config line " + std::to_string(lineno) +
                                    ": unknown key '" + key + "'");
        if (opt->count() > 0) continue;  // the command line already set it
        opt->add_result(value);
        opt->run_callback();
    }
}

void add_common_options(CLI::App* cmd, CommonOpts& o)
{
    cmd->add_option("--p-mev", o.p_mev, "Single-particle CM momentum in MeV")
        ->capture_default_str();
    cmd->add_option("--mass-mev", o.mass_mev, "Particle mass in MeV")->capture_default_str();
    cmd->add_option("--alpha", o.alpha, "Coupling constant")->capture_default_str();
    cmd->add_option("--l-max-delta2", o.l_max_delta2,
                    "Largest l with the second-order shift computed (held above)")
        ->capture_default_str();
    cmd->add_option("--epsilon", o.epsilon, "Wavepacket momentum spread sigma_p/p")
        ->capture_default_str();
    cmd->add_option("--l-max", o.l_max, "Partial-wave cutoff; -1 = ceil(7/epsilon)")
        ->capture_default_str();
    cmd->add_option("--order", o.order, "Phase-shift order in the amplitude (1 or 2)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    cmd->add_flag("--symmetrize", o.symmetrize, "Insert the boson exchange factor 1+(-1)^l");
    cmd->add_option("--delta", o.delta, "Time-shift parameter delta")->capture_default_str();
    cmd->add_option("--out", o.out, "Output path (default: stdout)");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--config", o.config_path, "Flat key = value configuration file");
}

std::map<std::string, std::string> manifest_config(const CommonOpts& o, const XSecConfig& cfg,
                                                   const PVQuadConfig& q)
{
    std::map<std::string, std::string> m;
    m["p_mev"] = format_value(o.p_mev);
    m["mass_mev"] = format_value(o.mass_mev);
    m["alpha"] = format_value(o.alpha);
    m["epsilon"] = format_value(cfg.epsilon);
    m["delta"] = format_value(cfg.delta_shift);
    m["l_max"] = std::to_string(cfg.resolved_l_max());
    m["l_max_delta2"] = std::to_string(o.l_max_delta2);
    m["order"] = std::to_string(cfg.order);
    m["symmetrize"] = cfg.symmetrize ? "true" : "false";
    m["r_over_sigma_x"] = format_value(cfg.resolved_r_over_sigma_x());
    m["pv_window_half_width"] = format_value(q.window_half_width);
    m["pv_inner_cutoff"] = format_value(q.inner_cutoff);
    m["pv_grading_ratio"] = format_value(q.grading_ratio);
    m["pv_outer_x_max"] = format_value(q.outer_x_max);
    m["pv_abs_tol"] = format_value(q.abs_tol);
    m["pv_rel_tol"] = format_value(q.rel_tol);
    m["format"] = o.format;
    return m;
}

void emit(const CommonOpts& o, const std::string& command, const DataTable& table,
          std::map<std::string, std::string> config)
{
    const std::string payload = to_csv(table);
    const RunManifest manifest = make_manifest(command, std::move(config), payload);
    if (o.format == "json") {
        const std::string doc = to_json(table, manifest);
        if (o.out.empty())
            std::cout << doc;
        else
            write_text_file(o.out, doc);
    } else {
        if (o.out.empty())
            std::cout << payload;
        else
            write_csv_with_manifest(o.out, table, manifest);
    }
}

XSecConfig xsec_config(const CommonOpts& o)
{
    XSecConfig cfg;
    cfg.epsilon = o.epsilon;
    cfg.delta_shift = o.delta;
    cfg.l_max = o.l_max;
    cfg.symmetrize = o.symmetrize;
    cfg.order = o.order;
    cfg.validate();
    return cfg;
}

int run_phase_shifts(const CommonOpts& o)
{
    const int l_max = (o.l_max < 0) ? 50 : o.l_max;
    const int l_max_d2 = std::min(l_max, o.l_max_delta2);
    const Kinematics kin(o.p_mev, o.mass_mev, o.alpha);
    const PVQuadConfig qcfg;
    const PhaseShiftTable table = build_table(kin, l_max, l_max_d2, qcfg);
    const double eta = (o.alpha == 0.0 || o.p_mev == 0.0) ? 0.0 : kin.eta();

    DataTable out;
    out.columns = {"l", "delta1_bar", "delta2", "sigma_exact", "delta2_quad_error"};
    for (const auto& e : table.entries)
        out.rows.push_back({static_cast<double>(e.l), e.delta1_bar, e.delta2,
                            coulomb_sigma_exact(e.l, eta), e.delta2_quad.est_error});

    XSecConfig cfg = xsec_config(o);
    cfg.l_max = l_max;
    emit(o, "phase-shifts", out, manifest_config(o, cfg, qcfg));
    return kExitOk;
}

int run_xsec_angle(const CommonOpts& o, double theta_min_deg, double theta_max_deg,
                   int theta_points, bool millibarn)
{
    if (theta_points < 1 || theta_max_deg < theta_min_deg)
        throw std::domain_error("xsec-angle: bad theta grid");
    const Kinematics kin(o.p_mev, o.mass_mev, o.alpha);
    const XSecConfig cfg = xsec_config(o);
    const PVQuadConfig qcfg;
    const int l_max_d2 = (cfg.order >= 2) ? o.l_max_delta2 : 0;
    const PhaseShiftTable table =
        build_table(kin, cfg.resolved_l_max(), std::min(cfg.resolved_l_max(), l_max_d2), qcfg);

    const double unit = millibarn ? 1e6 * kHbarC2GeV2Millibarn : 1.0;
    DataTable out;
    out.columns = {"theta_deg", "model", "rutherford", "moller"};
    out.rows.resize(theta_points);
    parallel_for_index(theta_points, [&](int i) {
        const double deg = (theta_points == 1)
                               ? theta_min_deg
                               : theta_min_deg + (theta_max_deg - theta_min_deg) * i /
                                                     (theta_points - 1.0);
        const XSecRecord rec = make_xsec_record(deg * M_PI / 180.0, table, cfg);
        out.rows[i] = {deg, unit * rec.model, unit * rec.rutherford, unit * rec.moller};
    });
    if (millibarn) out.footnotes.push_back("cross sections in millibarn");
    emit(o, "xsec-angle", out, manifest_config(o, cfg, qcfg));
    return kExitOk;
}

int run_xsec_momentum(const CommonOpts& o, double p_min, double p_max, int p_points,
                      double theta_deg, bool millibarn)
{
    if (p_points < 1 || !(p_min > 0.0) || p_max < p_min)
        throw std::domain_error("xsec-momentum: bad momentum grid");
    const XSecConfig cfg = xsec_config(o);
    const PVQuadConfig qcfg;
    const double theta = theta_deg * M_PI / 180.0;
    const double unit = millibarn ? 1e6 * kHbarC2GeV2Millibarn : 1.0;

    DataTable out;
    out.columns = {"p_mev", "model", "rutherford", "moller"};
    const double log_lo = std::log(p_min), log_hi = std::log(p_max);
    for (int i = 0; i < p_points; ++i) {
        const double p = (p_points == 1)
                             ? p_min
                             : std::exp(log_lo + (log_hi - log_lo) * i / (p_points - 1.0));
        const Kinematics kin(p, o.mass_mev, o.alpha);
        const int l_max_d2 = (cfg.order >= 2) ? std::min(cfg.resolved_l_max(), o.l_max_delta2) : 0;
        const PhaseShiftTable table = build_table(kin, cfg.resolved_l_max(), l_max_d2, qcfg);
        const XSecRecord rec = make_xsec_record(theta, table, cfg);
        out.rows.push_back({p, unit * rec.model, unit * rec.rutherford, unit * rec.moller});
    }
    if (millibarn) out.footnotes.push_back("cross sections in millibarn");
    auto config = manifest_config(o, cfg, qcfg);
    config["theta_deg"] = format_value(theta_deg);
    config["p_min_mev"] = format_value(p_min);
    config["p_max_mev"] = format_value(p_max);
    config["p_points"] = std::to_string(p_points);
    emit(o, "xsec-momentum", out, config);
    return kExitOk;
}

int run_delta_profile(const CommonOpts& o, double delta_min, double delta_max,
                      double delta_step, double theta_deg)
{
    if (!(delta_step > 0.0) || delta_max < delta_min)
        throw std::domain_error("delta-profile: bad delta grid");
    const Kinematics kin(o.p_mev, o.mass_mev, o.alpha);
    const XSecConfig cfg = xsec_config(o);
    const PVQuadConfig qcfg;
    const int l_max_d2 = (cfg.order >= 2) ? o.l_max_delta2 : 0;
    const PhaseShiftTable table =
        build_table(kin, cfg.resolved_l_max(), std::min(cfg.resolved_l_max(), l_max_d2), qcfg);

    std::vector<double> grid;
    for (double d = delta_min; d <= delta_max + 0.5 * delta_step; d += delta_step)
        grid.push_back(d);
    const DeltaProfile profile =
        delta_profile(theta_deg * M_PI / 180.0, table, cfg, grid);

    DataTable out;
    out.columns = {"delta", "xsec"};
    for (std::size_t i = 0; i < profile.delta.size(); ++i)
        out.rows.push_back({profile.delta[i], profile.dsigma[i]});
    out.footnotes.push_back("delta_star = " + format_value(profile.delta_star));
    auto config = manifest_config(o, cfg, qcfg);
    config["theta_deg"] = format_value(theta_deg);
    config["delta_min"] = format_value(delta_min);
    config["delta_max"] = format_value(delta_max);
    config["delta_step"] = format_value(delta_step);
    emit(o, "delta-profile", out, config);
    return kExitOk;
}

int run_validate(const CommonOpts& o, std::optional<double> tol_override)
{
    const auto checks = run_validation(tol_override);

    // Machine-readable payload.
    std::string payload = "check,measured,tolerance,pass,detail\n";
    for (const auto& c : checks)
        payload += c.name + "," + format_value(c.measured) + "," +
                   format_value(c.tolerance) + "," + (c.pass ? "1" : "0") + "," + c.detail +
                   "\n";
    std::map<std::string, std::string> config;
    config["tolerance_override"] =
        tol_override ? format_value(*tol_override) : std::string("none");
    const RunManifest manifest = make_manifest("validate", config, payload);

    if (o.format == "json") {
        nlohmann::json doc;
        doc["manifest"] = nlohmann::json::parse(manifest_to_json(manifest));
        doc["checks"] = nlohmann::json::array();
        for (const auto& c : checks)
            doc["checks"].push_back({{"name", c.name},
                                     {"measured", c.measured},
                                     {"tolerance", c.tolerance},
                                     {"pass", c.pass},
                                     {"detail", c.detail}});
        const std::string text = doc.dump(2) + "\n";
        if (o.out.empty())
            std::cout << text;
        else
            write_text_file(o.out, text);
    } else if (o.out.empty()) {
        std::cout << payload;
    } else {
        write_text_file(o.out, payload);
        write_text_file(o.out + ".manifest.json", manifest_to_json(manifest));
    }

    // Human-readable report on stderr so the payload stream stays clean.
    for (const auto& c : checks)
        std::fprintf(stderr, "%-26s %s  measured=%.3e tolerance=%.3e %s\n", c.name.c_str(),
                     c.pass ? "pass" : "FAIL", c.measured, c.tolerance, c.detail.c_str());
    const bool ok = all_passed(checks);
    std::fprintf(stderr, "validate: %zu checks, %s\n", checks.size(),
                 ok ? "all passed" : "FAILURES present");
    return ok ? kExitOk : kExitValidationFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Partial-wave Coulomb scattering: phase shifts and wavepacket-regularized "
                 "differential cross sections"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* ps = app.add_subcommand("phase-shifts",
                                  "First- and second-order phase shifts per l, with the exact "
                                  "Coulomb phase for comparison");
    add_common_options(ps, o);

    double theta_min_deg = 5.0, theta_max_deg = 175.0;
    int theta_points = 171;
    bool millibarn = false;
    auto* xa = app.add_subcommand("xsec-angle", "Differential cross section versus angle");
    add_common_options(xa, o);
    xa->add_option("--theta-min-deg", theta_min_deg, "")->capture_default_str();
    xa->add_option("--theta-max-deg", theta_max_deg, "")->capture_default_str();
    xa->add_option("--theta-points", theta_points, "")->capture_default_str();
    xa->add_flag("--millibarn", millibarn, "Emit cross sections in millibarn");

    double p_min = 0.03, p_max = 19.0, theta_deg = 90.0;
    int p_points = 40;
    auto* xm = app.add_subcommand("xsec-momentum",
                                  "Differential cross section versus momentum (log-spaced); "
                                  "defaults to first-order phases");
    add_common_options(xm, o);
    xm->add_option("--p-min-mev", p_min, "")->capture_default_str();
    xm->add_option("--p-max-mev", p_max, "")->capture_default_str();
    xm->add_option("--p-points", p_points, "")->capture_default_str();
    xm->add_option("--theta-deg", theta_deg, "")->capture_default_str();
    xm->add_flag("--millibarn", millibarn, "Emit cross sections in millibarn");

    double delta_min = -5.0, delta_max = 5.0, delta_step = 0.05, profile_theta_deg = 90.0;
    auto* dp = app.add_subcommand("delta-profile",
                                  "Cross section scanned over the time-shift parameter delta");
    add_common_options(dp, o);
    dp->add_option("--delta-min", delta_min, "")->capture_default_str();
    dp->add_option("--delta-max", delta_max, "")->capture_default_str();
    dp->add_option("--delta-step", delta_step, "")->capture_default_str();
    dp->add_option("--theta-deg", profile_theta_deg, "")->capture_default_str();

    std::optional<double> tol_override;
    double tol_value = 0.0;
    auto* va = app.add_subcommand("validate", "Run the built-in numerical cross-check battery");
    va->add_option("--out", o.out, "Output path for the machine-readable report");
    va->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    auto* tol_opt = va->add_option("--tol", tol_value, "Override every check tolerance");
    va->add_option("--config", o.config_path, "Flat key = value configuration file");

    // xsec-momentum reproduces the momentum sweeps, which use first-order
    // phases; flip the default before parsing so --order still wins.
    xm->preparse_callback([&o](std::size_t) { o.order = 1; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArguments;
    }

    if (tol_opt->count() > 0) tol_override = tol_value;

    try {
        if (!o.config_path.empty()) {
            for (CLI::App* cmd : {ps, xa, xm, dp, va})
                if (cmd->parsed()) apply_config_file(cmd, o.config_path);
        }
        if (*ps) return run_phase_shifts(o);
        if (*xa) return run_xsec_angle(o, theta_min_deg, theta_max_deg, theta_points, millibarn);
        if (*xm) return run_xsec_momentum(o, p_min, p_max, p_points, theta_deg, millibarn);
        if (*dp) return run_delta_profile(o, delta_min, delta_max, delta_step, profile_theta_deg);
        if (*va) return run_validate(o, tol_override);
    } catch (const coulscat::convergence_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumericalFailure;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "invalid arguments: %s\n", e.what());
        return kExitBadArguments;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid arguments: %s\n", e.what());
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumericalFailure;
    }
    return kExitBadArguments;
}
