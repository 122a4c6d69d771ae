#ifndef PFH_IO_HPP
#define PFH_IO_HPP

/**
 * JSON and CSV serialization. Profiles travel as
 *
 *   {"pieces": [{"from": "-1", "to": "1/3", "coeffs": ["0", "1/2", ...]}, ...]}
 *
 * with every number a rational in "p/q" (or plain integer) string form,
 * coefficients ascending by power. Reports are emitted as ordered JSON so a
 * rerun with the same inputs produces byte-identical output; decimal
 * renderings are fixed at 12 significant digits and carry the exact
 * rational alongside.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "pfh/family.hpp"
#include "pfh/hoferlab.hpp"
#include "pfh/invariants.hpp"
#include "pfh/spectral.hpp"
#include "pfh/twist.hpp"

namespace pfh {

using Js = nlohmann::ordered_json;

/// "p/q" or plain integer text for JSON fields.
Js rat_to_json(const Rat& r);
/// Accepts a string in parse_rat form or a JSON integer.
Rat rat_from_json(const Js& node);

Js profile_to_json(const TwistProfile& tp);
TwistProfile profile_from_json(const Js& node);

/// Reads a profile file ({"pieces": ...}, extra keys ignored). Throws
/// std::runtime_error when the file cannot be read, std::invalid_argument
/// on malformed content.
TwistProfile load_profile_file(const std::string& path);
void save_profile_file(const TwistProfile& tp, const std::string& path);

Js spectral_result_to_json(const SpectralResult& res, long long d, long long k);
Js sweep_to_json(const std::vector<SweepEntry>& entries, long long d);
Js bundle_to_json(const InvariantBundle& bundle);
Js zeta_limit_to_json(const ZetaLimitReport& report);
Js eta_lower_to_json(const EtaLowerBound& bound);
Js axiom_report_to_json(const AxiomReport& report);
Js matrix_report_to_json(const MuMatrixReport& report);
Js separation_to_json(const SeparationReport& report);
Js growth_report_to_json(const GrowthReport& report);

/// Growth rows as CSV: header plus one line per degree, exact rationals and
/// a 12-digit decimal for the ratio.
std::string growth_report_to_csv(const GrowthReport& report);

/// Serializes with 2-space indentation and a trailing newline.
std::string dump_json(const Js& doc);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace pfh

#endif  // PFH_IO_HPP
