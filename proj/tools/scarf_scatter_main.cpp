#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scarf/analytic_scattering.hpp"
#include "scarf/errors.hpp"
#include "scarf/invariance_suite.hpp"
#include "scarf/io.hpp"
#include "scarf/numeric_oracle.hpp"
#include "scarf/scan.hpp"
#include "scarf/spectral_analysis.hpp"

namespace {

using scarf::Complex;

// Accepts plain decimals plus exact forms: sqrt:2, -sqrt:2, i:0.5, i:sqrt:2.
// The sqrt form exists so irrational singularity locations are not lost to
// decimal transcription.
Complex parse_value(const std::string& text) {
    if (text.empty()) throw scarf::DomainError("empty parameter value");
    if (text[0] == '-') return -parse_value(text.substr(1));
    if (text.rfind("i:", 0) == 0) return Complex(0.0, 1.0) * parse_value(text.substr(2));
    if (text.rfind("sqrt:", 0) == 0) {
        const Complex inner = parse_value(text.substr(5));
        if (inner.imag() != 0.0 || inner.real() < 0.0)
            throw scarf::DomainError("sqrt: needs a non-negative real argument");
        return std::sqrt(inner.real());
    }
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw scarf::DomainError("cannot parse value: " + text);
    return value;
}

struct ParamOptions {
    int m = 0, n = 0;
    std::string alpha, beta;
    std::vector<double> raw_A, raw_B;  // [re, im]

    void attach(CLI::App* cmd) {
        auto* om = cmd->add_option("--m", m, "parametrization integer m >= 0");
        auto* on = cmd->add_option("--n", n, "parametrization integer n >= 0");
        auto* oa = cmd->add_option("--alpha", alpha, "alpha (decimal, sqrt:X or i:X)");
        auto* ob = cmd->add_option("--beta", beta, "beta (decimal, sqrt:X or i:X)");
        auto* oA = cmd->add_option("--A", raw_A, "raw A as re im")->expected(2);
        auto* oB = cmd->add_option("--B", raw_B, "raw B as re im")->expected(2);
        for (auto* raw : {oA, oB})
            for (auto* par : {om, on, oa, ob}) raw->excludes(par);
    }

    bool has_parametrized() const { return !alpha.empty() || !beta.empty(); }
    bool has_raw() const { return !raw_A.empty() || !raw_B.empty(); }

    scarf::ScarfParameters build() const {
        if (has_raw()) {
            if (raw_A.size() != 2 || raw_B.size() != 2)
                throw scarf::DomainError("raw form needs --A re im and --B re im");
            return scarf::ScarfParameters::direct({raw_A[0], raw_A[1]}, {raw_B[0], raw_B[1]});
        }
        if (alpha.empty() || beta.empty())
            throw scarf::DomainError("give either --m/--n/--alpha/--beta or --A/--B");
        return scarf::from_parametrization(m, n, parse_value(alpha), parse_value(beta));
    }
};

struct Fig1Case {
    double alpha, beta;
};

Fig1Case figure1_case(const std::string& name) {
    const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
    if (name == "a") return {s2, s5};
    if (name == "b") return {-s2, -s5};
    if (name == "c") return {-s2, s5};
    if (name == "d") return {s2, -s2};
    throw scarf::DomainError("figure1 case must be one of a, b, c, d");
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        scarf::write_file_atomic(out_path, content);
}

int run(int argc, char** argv) {
    CLI::App app{"scarf-scatter: scattering amplitudes, spectral singularities and bound states\n"
                 "of the complex Scarf II potential, with a transfer-matrix cross-check oracle"};
    app.require_subcommand(1);
    std::string out_path;
    auto add_out = [&out_path](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output atomically to FILE instead of stdout");
    };

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "scan observables over an energy grid (CSV)");
    ParamOptions scan_params;
    scan_params.attach(scan_cmd);
    scarf::ScanSpec spec{0.5, 7.0, 600, scarf::ScanSpec::Spacing::linear};
    std::string spacing = "linear";
    bool serial = false;
    scan_cmd->add_option("--emin", spec.e_min, "lowest energy")->capture_default_str();
    scan_cmd->add_option("--emax", spec.e_max, "highest energy")->capture_default_str();
    scan_cmd->add_option("--steps", spec.steps, "grid size")->capture_default_str();
    scan_cmd->add_option("--spacing", spacing, "linear or log")->capture_default_str();
    scan_cmd->add_flag("--serial", serial, "use the serial scan kernel");
    add_out(scan_cmd);

    // figure1
    auto* fig_cmd = app.add_subcommand("figure1", "reproduce one transmitivity panel (CSV)");
    std::string fig_case;
    fig_cmd->add_option("--case", fig_case, "a | b | c | d")->required();
    add_out(fig_cmd);

    // ss
    auto* ss_cmd = app.add_subcommand("ss", "enumerate spectral singularities (JSON)");
    int ss_m = 0, ss_n = 0;
    std::string ss_alpha, ss_beta;
    ss_cmd->add_option("--m", ss_m, "m >= 0");
    ss_cmd->add_option("--n", ss_n, "n >= 0");
    ss_cmd->add_option("--alpha", ss_alpha, "alpha (decimal, sqrt:X or i:X)")->required();
    ss_cmd->add_option("--beta", ss_beta, "beta (decimal, sqrt:X or i:X)")->required();
    add_out(ss_cmd);

    // bound-states
    auto* bs_cmd = app.add_subcommand("bound-states", "enumerate bound-state branches (JSON)");
    int bs_m = 0, bs_n = 0;
    double bs_gamma = 0.0, bs_delta = 0.0;
    bs_cmd->add_option("--m", bs_m, "m >= 0");
    bs_cmd->add_option("--n", bs_n, "n >= 0");
    bs_cmd->add_option("--gamma", bs_gamma, "gamma > 0")->required();
    bs_cmd->add_option("--delta", bs_delta, "delta > 0")->required();
    add_out(bs_cmd);

    // invariance
    auto* inv_cmd = app.add_subcommand("invariance", "run the (in)variance report");
    ParamOptions inv_params;
    inv_params.attach(inv_cmd);
    std::string potential_csv, inv_format = "json";
    double inv_kmin = 0.2, inv_kmax = 3.0;
    int inv_points = 50;
    inv_cmd->add_option("--potential", potential_csv, "sampled potential CSV (x_mid,V_re,V_im)");
    inv_cmd->add_option("--kmin", inv_kmin, "lowest k")->capture_default_str();
    inv_cmd->add_option("--kmax", inv_kmax, "highest k")->capture_default_str();
    inv_cmd->add_option("--points", inv_points, "grid size")->capture_default_str();
    inv_cmd->add_option("--format", inv_format, "json or table")->capture_default_str();
    add_out(inv_cmd);

    // oracle-check
    auto* oc_cmd = app.add_subcommand("oracle-check",
                                      "compare closed-form amplitudes against the oracle");
    ParamOptions oc_params;
    oc_params.attach(oc_cmd);
    std::string oc_case;
    std::vector<double> oc_k;
    int oc_slabs = scarf::default_slab_count;
    double oc_box = scarf::default_box_half_width, oc_threshold = 5e-3;
    oc_cmd->add_option("--case", oc_case, "use a figure1 parameter set instead of --alpha/--beta");
    oc_cmd->add_option("--k", oc_k, "wavenumbers to test (default 0.5 1.1 1.7 2.3 2.9)");
    oc_cmd->add_option("--slabs", oc_slabs, "oracle slab count")->capture_default_str();
    oc_cmd->add_option("--box", oc_box, "oracle box half-width")->capture_default_str();
    oc_cmd->add_option("--threshold", oc_threshold, "max allowed relative deviation of t")
        ->capture_default_str();
    add_out(oc_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (scan_cmd->parsed()) {
        if (spacing != "linear" && spacing != "log")
            throw scarf::DomainError("--spacing must be linear or log");
        spec.spacing = spacing == "log" ? scarf::ScanSpec::Spacing::log
                                        : scarf::ScanSpec::Spacing::linear;
        const auto rows = scarf::scan(scan_params.build(), spec,
                                      serial ? scarf::Execution::serial
                                             : scarf::Execution::parallel);
        std::ostringstream csv;
        scarf::write_scan_csv(csv, rows);
        emit(csv.str(), out_path);
        return 0;
    }

    if (fig_cmd->parsed()) {
        const Fig1Case c = figure1_case(fig_case);
        const auto p = scarf::from_parametrization(0, 0, c.alpha, c.beta);
        for (const auto& rec : scarf::find_spectral_singularities(0, 0, c.alpha, c.beta))
            std::fprintf(stderr, "expected peak: E* = %.10g in %s channel (k* = %.10g)\n",
                         rec.E_star, scarf::to_string(rec.channel), rec.k_star);
        const scarf::ScanSpec fig_spec{0.25, 7.0, 1000, scarf::ScanSpec::Spacing::linear};
        std::ostringstream csv;
        scarf::write_scan_csv(csv, scarf::scan(p, fig_spec));
        emit(csv.str(), out_path);
        return 0;
    }

    if (ss_cmd->parsed()) {
        const auto spectrum =
            scarf::enumerate_spectrum(ss_m, ss_n, parse_value(ss_alpha), parse_value(ss_beta));
        emit(scarf::to_json(spectrum).dump(2) + "\n", out_path);
        return 0;
    }

    if (bs_cmd->parsed()) {
        const auto records = scarf::bound_states(bs_m, bs_n, bs_gamma, bs_delta);
        scarf::Json j;
        j["plus"] = scarf::Json::array();
        j["minus"] = scarf::Json::array();
        for (const auto& r : records)
            j[r.branch == scarf::Branch::plus ? "plus" : "minus"].push_back(scarf::to_json(r));
        emit(j.dump(2) + "\n", out_path);
        return 0;
    }

    if (inv_cmd->parsed()) {
        std::vector<double> grid(inv_points);
        if (inv_points < 2 || !(inv_kmin > 0.0) || !(inv_kmin < inv_kmax))
            throw scarf::DomainError("invariance: need 0 < kmin < kmax and points >= 2");
        const double ratio = std::log(inv_kmax / inv_kmin) / double(inv_points - 1);
        for (int i = 0; i < inv_points; ++i) grid[i] = inv_kmin * std::exp(ratio * double(i));
        scarf::InvarianceReport report;
        if (!potential_csv.empty()) {
            if (inv_params.has_parametrized() || inv_params.has_raw())
                throw scarf::DomainError("--potential excludes --alpha/--beta and --A/--B");
            std::ifstream in(potential_csv);
            if (!in) throw scarf::DomainError("cannot open " + potential_csv);
            report = scarf::run_report(scarf::SampledPotential::from_csv(in), grid);
        } else {
            report = scarf::run_report(inv_params.build(), grid);
        }
        if (inv_format == "table")
            emit(scarf::render_table(report), out_path);
        else
            emit(scarf::to_json(report).dump(2) + "\n", out_path);
        return 0;
    }

    if (oc_cmd->parsed()) {
        scarf::ScarfParameters p = [&] {
            if (!oc_case.empty()) {
                const Fig1Case c = figure1_case(oc_case);
                return scarf::from_parametrization(0, 0, c.alpha, c.beta);
            }
            return oc_params.build();
        }();
        if (oc_k.empty()) oc_k = {0.5, 1.1, 1.7, 2.3, 2.9};
        const auto sampled = scarf::sample_scarf(p, -oc_box, oc_box, oc_slabs);
        double dev_t = 0.0, dev_rl = 0.0, dev_rr = 0.0;
        for (double k : oc_k) {
            const auto oracle = scarf::solve(sampled, k);
            const auto exact = scarf::amplitudes(p, k);
            dev_t = std::max(dev_t, std::abs(oracle.t_left - exact.t) / std::abs(exact.t));
            dev_rl = std::max(dev_rl,
                              std::abs(oracle.r_left - exact.r_left) / std::abs(exact.r_left));
            dev_rr = std::max(dev_rr,
                              std::abs(oracle.r_right - exact.r_right) / std::abs(exact.r_right));
        }
        scarf::Json j{{"max_rel_deviation_t", dev_t},
                      {"max_rel_deviation_r_left", dev_rl},
                      {"max_rel_deviation_r_right", dev_rr},
                      {"threshold", oc_threshold},
                      {"pass", dev_t <= oc_threshold}};
        emit(j.dump(2) + "\n", out_path);
        if (dev_t > oc_threshold) {
            std::fprintf(stderr, "oracle deviation %.3e above threshold %.3e\n", dev_t,
                         oc_threshold);
            return 3;
        }
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const scarf::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.kind() == scarf::ErrorKind::input ? 2 : 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
