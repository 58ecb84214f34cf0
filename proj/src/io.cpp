#include "scarf/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "scarf/errors.hpp"

namespace scarf {

Json to_json(const ScarfParameters& p) {
    Json j;
    if (p.origin) {
        j["m"] = p.origin->m;
        j["n"] = p.origin->n;
        j["alpha_re"] = p.origin->alpha.real();
        j["alpha_im"] = p.origin->alpha.imag();
        j["beta_re"] = p.origin->beta.real();
        j["beta_im"] = p.origin->beta.imag();
    } else {
        j["A_re"] = p.A.real();
        j["A_im"] = p.A.imag();
        j["B_re"] = p.B.real();
        j["B_im"] = p.B.imag();
    }
    return j;
}

ScarfParameters scarf_parameters_from_json(const Json& j) {
    if (j.contains("m")) {
        return from_parametrization(j.at("m").get<int>(), j.at("n").get<int>(),
                                    {j.at("alpha_re").get<double>(), j.at("alpha_im").get<double>()},
                                    {j.at("beta_re").get<double>(), j.at("beta_im").get<double>()});
    }
    if (j.contains("A_re")) {
        return ScarfParameters::direct({j.at("A_re").get<double>(), j.at("A_im").get<double>()},
                                       {j.at("B_re").get<double>(), j.at("B_im").get<double>()});
    }
    throw DomainError("scarf parameters JSON needs either m/n/alpha/beta or A/B keys");
}

Json to_json(const PotentialCoefficients& c) {
    return Json{{"V1_re", c.V1.real()},
                {"V1_im", c.V1.imag()},
                {"V2_re", c.V2.real()},
                {"V2_im", c.V2.imag()}};
}

Json to_json(const SpectralSingularityRecord& r) {
    return Json{{"E_star", r.E_star},
                {"k_star", r.k_star},
                {"channel", to_string(r.channel)},
                {"source", to_string(r.source)}};
}

Json to_json(const BoundStateRecord& r) {
    return Json{{"branch", to_string(r.branch)}, {"index", r.index}, {"energy", r.energy}};
}

Json to_json(const SpectrumEnumeration& s) {
    Json j;
    j["spectral_singularities"] = Json::array();
    for (const auto& r : s.singularities) j["spectral_singularities"].push_back(to_json(r));
    j["bound_states"] = Json::array();
    for (const auto& r : s.bound_states) j["bound_states"].push_back(to_json(r));
    return j;
}

Json to_json(const InvarianceReport& r) {
    Json j;
    j["class_tested"] = to_string(r.class_tested);
    j["grid_points"] = r.grid.size();
    j["k_min"] = r.grid.front();
    j["k_max"] = r.grid.back();
    j["hold_tol"] = r.hold_tol;
    j["fail_margin"] = fail_margin;
    Json violations, verdicts;
    for (const auto& [prop, value] : r.max_violation) violations[to_string(prop)] = value;
    for (const auto& [prop, verdict] : r.verdicts) verdicts[to_string(prop)] = to_string(verdict);
    j["max_violation"] = violations;
    j["verdicts"] = verdicts;
    return j;
}

const char* to_string(Channel c) {
    switch (c) {
        case Channel::forward: return "forward";
        case Channel::time_reversed: return "time_reversed";
        case Channel::both: return "both";
    }
    return "?";
}

const char* to_string(SsSource s) {
    return s == SsSource::alpha_gamma_factor ? "alpha_gamma_factor" : "beta_gamma_factor";
}

const char* to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
    out << csv_schema_comment << "\n";
    out << "E,T_fwd,T_rev,R_left_fwd,R_right_fwd,R_left_rev,R_right_rev,singular_flag\n";
    char buf[256];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%d\n", row.E,
                      row.obs.T_fwd, row.obs.T_rev, row.obs.R_left_fwd, row.obs.R_right_fwd,
                      row.obs.R_left_rev, row.obs.R_right_rev, row.obs.singular ? 1 : 0);
        out << buf;
    }
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw DomainError("write to " + tmp.string() + " failed");
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace scarf
