#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "scarf/invariance_suite.hpp"
#include "scarf/scan.hpp"
#include "scarf/scarf_model.hpp"
#include "scarf/spectral_analysis.hpp"

namespace scarf {

// ordered_json keeps serialization key order stable across runs.
using Json = nlohmann::ordered_json;

inline constexpr const char* csv_schema_comment = "# scarf-scatter v1 schema";

/// Parametrized instances serialize as {"m","n","alpha_re","alpha_im",
/// "beta_re","beta_im"}, direct ones as {"A_re","A_im","B_re","B_im"}.
Json to_json(const ScarfParameters& p);
ScarfParameters scarf_parameters_from_json(const Json& j);

Json to_json(const PotentialCoefficients& c);
Json to_json(const SpectralSingularityRecord& r);
Json to_json(const BoundStateRecord& r);
Json to_json(const SpectrumEnumeration& s);
Json to_json(const InvarianceReport& r);

const char* to_string(Channel c);
const char* to_string(SsSource s);
const char* to_string(Branch b);

/// CSV stream with the fixed schema comment and header
/// E,T_fwd,T_rev,R_left_fwd,R_right_fwd,R_left_rev,R_right_rev,singular_flag.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

/// Write via temp file + rename so readers never see a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace scarf
