#include "pfh/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pfh {

Js rat_to_json(const Rat& r) { return Js(rat_str(r)); }

Rat rat_from_json(const Js& node) {
    if (node.is_number_integer()) return Rat(node.get<long long>());
    if (node.is_string()) return parse_rat(node.get<std::string>());
    throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

Js profile_to_json(const TwistProfile& tp) {
    Js pieces = Js::array();
    for (const Piece& pc : tp.pieces()) {
        Js coeffs = Js::array();
        for (const Rat& c : pc.f.coeffs()) coeffs.push_back(rat_to_json(c));
        pieces.push_back(Js{{"from", rat_to_json(pc.lo)}, {"to", rat_to_json(pc.hi)},
                            {"coeffs", coeffs}});
    }
    return Js{{"pieces", pieces}};
}

TwistProfile profile_from_json(const Js& node) {
    if (!node.is_object() || !node.contains("pieces") || !node["pieces"].is_array())
        throw std::invalid_argument("profile JSON needs a \"pieces\" array");
    std::vector<Piece> pieces;
    for (const Js& item : node["pieces"]) {
        if (!item.is_object() || !item.contains("from") || !item.contains("to") ||
            !item.contains("coeffs") || !item["coeffs"].is_array())
            throw std::invalid_argument("each piece needs \"from\", \"to\", and \"coeffs\"");
        Piece pc;
        pc.lo = rat_from_json(item["from"]);
        pc.hi = rat_from_json(item["to"]);
        std::vector<Rat> coeffs;
        for (const Js& c : item["coeffs"]) coeffs.push_back(rat_from_json(c));
        pc.f = Poly(std::move(coeffs));
        pieces.push_back(std::move(pc));
    }
    return TwistProfile::from_pieces(std::move(pieces));
}

TwistProfile load_profile_file(const std::string& path) {
    Js doc;
    try {
        doc = Js::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("cannot parse " + path + ": " + e.what());
    }
    return profile_from_json(doc);
}

void save_profile_file(const TwistProfile& tp, const std::string& path) {
    write_text_file(path, dump_json(profile_to_json(tp)));
}

namespace {

Js path_list(const std::vector<LatticePath>& paths) {
    Js out = Js::array();
    for (const LatticePath& p : paths) out.push_back(p.literal());
    return out;
}

Js stats_to_json(const SpectralStats& stats) {
    Js out;
    out["slope_classes"] = stats.slope_classes;
    out["states_reached"] = stats.states_reached;
    out["transitions"] = stats.transitions;
    if (stats.shapes_seen > 0) out["shapes_seen"] = stats.shapes_seen;
    out["witnesses_complete"] = stats.witnesses_complete;
    if (!stats.witness_note.empty()) out["witness_note"] = stats.witness_note;
    return out;
}

}  // namespace

Js spectral_result_to_json(const SpectralResult& res, long long d, long long k) {
    Js out;
    out["d"] = d;
    out["k"] = k;
    out["feasible"] = res.feasible;
    if (res.feasible) {
        out["value"] = rat_to_json(res.value);
        out["value_decimal"] = rat_decimal(res.value);
    }
    out["witnesses"] = path_list(res.witnesses);
    out["stats"] = stats_to_json(res.stats);
    return out;
}

Js sweep_to_json(const std::vector<SweepEntry>& entries, long long d) {
    Js rows = Js::array();
    for (const SweepEntry& e : entries) {
        Js row;
        row["k"] = e.k;
        row["feasible"] = e.feasible;
        if (e.feasible) row["value"] = rat_to_json(e.value);
        rows.push_back(row);
    }
    return Js{{"d", d}, {"values", rows}};
}

Js bundle_to_json(const InvariantBundle& bundle) {
    Js out;
    out["d"] = bundle.d;
    out["t"] = rat_to_json(bundle.t);
    out["zeta"] = rat_to_json(bundle.zeta);
    out["zeta_decimal"] = rat_decimal(bundle.zeta);
    out["mu"] = rat_to_json(bundle.mu);
    out["mu_decimal"] = rat_decimal(bundle.mu);
    out["calabi"] = rat_to_json(bundle.calabi);
    out["mean"] = rat_to_json(bundle.mean);
    if (bundle.has_eta_lower) out["eta_lower"] = rat_to_json(bundle.eta_lower);
    return out;
}

Js zeta_limit_to_json(const ZetaLimitReport& report) {
    Js rows = Js::array();
    for (const ZetaLimitRow& r : report.rows) {
        Js row;
        row["n"] = r.n;
        row["c"] = rat_to_json(r.c_value);
        row["ratio"] = rat_to_json(r.ratio);
        row["ratio_decimal"] = rat_decimal(r.ratio);
        row["gap"] = rat_to_json(r.gap);
        rows.push_back(row);
    }
    Js out;
    out["d"] = report.d;
    out["zeta"] = rat_to_json(report.zeta);
    out["rows"] = rows;
    out["upper_ok"] = report.upper_ok;
    return out;
}

Js eta_lower_to_json(const EtaLowerBound& bound) {
    Js out;
    out["d"] = bound.d;
    out["bound"] = rat_to_json(bound.bound);
    out["bound_decimal"] = rat_decimal(bound.bound);
    out["h_at_z0"] = rat_to_json(bound.h_at_z0);
    out["p"] = bound.p;
    out["witness"] = bound.witness.literal();
    out["witness_action"] = rat_to_json(bound.witness_action);
    out["method"] = bound.method;
    return out;
}

Js axiom_report_to_json(const AxiomReport& report) {
    Js checks = Js::array();
    for (const AxiomCheck& c : report.checks) {
        Js row;
        row["name"] = c.name;
        row["applicable"] = c.applicable;
        row["pass"] = c.pass;
        row["details"] = c.details;
        checks.push_back(row);
    }
    return Js{{"checks", checks}, {"all_pass", report.all_pass}};
}

namespace {

Js matrix_to_json(const std::vector<std::vector<Rat>>& m) {
    Js rows = Js::array();
    for (const auto& row : m) {
        Js r = Js::array();
        for (const Rat& x : row) r.push_back(rat_to_json(x));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

Js matrix_report_to_json(const MuMatrixReport& report) {
    Js out;
    out["n"] = report.n;
    out["degrees"] = report.degrees;
    out["exact"] = matrix_to_json(report.exact);
    out["smoothed"] = matrix_to_json(report.smoothed);
    out["max_slack"] = rat_to_json(report.max_slack);
    out["max_slack_decimal"] = rat_decimal(report.max_slack);
    out["exact_triangular"] = report.exact_triangular;
    out["smoothed_triangular"] = report.smoothed_triangular;
    out["exact_diag_positive"] = report.exact_diag_positive;
    out["smoothed_diag_positive"] = report.smoothed_diag_positive;
    out["exact_below_diag_ok"] = report.exact_below_diag_ok;
    out["smoothed_below_diag_ok"] = report.smoothed_below_diag_ok;
    out["all_ok"] = report.all_ok;
    out["exact_inverse"] = matrix_to_json(report.exact_inverse);
    out["exact_inverse_norm"] = rat_to_json(report.exact_inverse_norm);
    return out;
}

Js separation_to_json(const SeparationReport& report) {
    Js out;
    out["i"] = report.i;
    out["j"] = report.j;
    out["k"] = report.k;
    out["d_k"] = report.d_k;
    out["r"] = rat_to_json(report.r);
    out["margin_exact"] = rat_to_json(report.margin_exact);
    out["margin_exact_decimal"] = rat_decimal(report.margin_exact);
    out["margin_smoothed"] = rat_to_json(report.margin_smoothed);
    out["bound"] = rat_to_json(report.bound);
    out["ok"] = report.ok;
    return out;
}

Js growth_report_to_json(const GrowthReport& report) {
    Js rows = Js::array();
    for (const GrowthRow& r : report.rows) {
        Js row;
        row["d"] = r.d;
        row["v"] = rat_to_json(r.v);
        row["eta_lower"] = rat_to_json(r.eta_lower);
        row["ratio"] = rat_to_json(r.ratio);
        row["ratio_decimal"] = rat_decimal(r.ratio);
        if (r.has_actual) {
            row["eta_actual"] = rat_to_json(r.eta_actual);
            row["actual_ok"] = r.actual_ok;
        }
        rows.push_back(row);
    }
    Js out;
    out["spec"] = report.spec_name;
    out["rows"] = rows;
    out["ratios_increasing"] = report.ratios_increasing;
    out["actual_ok"] = report.actual_ok;
    return out;
}

std::string growth_report_to_csv(const GrowthReport& report) {
    std::ostringstream out;
    out << "d,v,eta_lower,ratio,ratio_decimal,eta_actual,actual_ok\n";
    for (const GrowthRow& r : report.rows) {
        out << r.d << "," << rat_str(r.v) << "," << rat_str(r.eta_lower) << ","
            << rat_str(r.ratio) << "," << rat_decimal(r.ratio) << ",";
        if (r.has_actual)
            out << rat_str(r.eta_actual) << "," << (r.actual_ok ? "true" : "false");
        else
            out << ",";
        out << "\n";
    }
    return out.str();
}

std::string dump_json(const Js& doc) { return doc.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace pfh

