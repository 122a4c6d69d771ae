// pfhtwist: spectral numbers, invariants, and Hofer-geometry reports for
// monotone twists, all in exact rational arithmetic.
//
// Exit codes: 0 success, 1 input or precondition error, 2 internal
// consistency failure (engine/oracle mismatch or a broken certificate),
// 64 usage error.

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfh/envelope.hpp"
#include "pfh/family.hpp"
#include "pfh/hoferlab.hpp"
#include "pfh/invariants.hpp"
#include "pfh/io.hpp"
#include "pfh/spectral.hpp"
#include "pfh/threads.hpp"
#include "pfh/twist.hpp"

namespace {

using pfh::Js;
using pfh::Rat;

void emit(const Js& doc, const std::string& out_path) {
    std::string text = pfh::dump_json(doc);
    if (out_path.empty())
        std::cout << text;
    else
        pfh::write_text_file(out_path, text);
}

pfh::TwistProfile load_scaled(const std::string& path, long long scale) {
    pfh::TwistProfile tp = pfh::load_profile_file(path);
    if (scale < 1) throw std::invalid_argument("--scale must be >= 1");
    return scale == 1 ? tp : tp.scale(scale);
}

int run_spectral(const std::string& profile, long long scale, long long d, long long k,
                 bool with_oracle, size_t witness_cap, const std::string& out) {
    pfh::TwistProfile tp = load_scaled(profile, scale);
    pfh::SpectralOptions opt;
    opt.witness_cap = witness_cap;
    pfh::SpectralResult res = pfh::c_dk(tp, d, k, opt);
    Js doc = pfh::spectral_result_to_json(res, d, k);
    doc["profile"] = profile;
    doc["scale"] = scale;
    bool agree = true;
    if (with_oracle) {
        pfh::SpectralResult ref = pfh::oracle_c_dk(tp, d, k);
        doc["oracle"] = pfh::spectral_result_to_json(ref, d, k);
        agree = ref.feasible == res.feasible && (!res.feasible || ref.value == res.value);
        doc["agree"] = agree;
    }
    emit(doc, out);
    return agree ? 0 : 2;
}

int run_invariants(const std::string& profile, long long scale, std::vector<long long> ds,
                   const std::string& t_text, const std::string& out) {
    pfh::TwistProfile tp = load_scaled(profile, scale);
    Rat t = pfh::parse_rat(t_text);
    Js bundles = Js::array();
    for (long long d : ds) bundles.push_back(pfh::bundle_to_json(pfh::invariant_bundle(tp, d, t)));
    Js doc;
    doc["profile"] = profile;
    doc["scale"] = scale;
    doc["bundles"] = bundles;
    emit(doc, out);
    return 0;
}

int run_quasiflat(long long iota, long long n, long long pairs, unsigned long long seed,
                  const std::string& out) {
    if (n < 1) throw std::invalid_argument("--n must be >= 1");
    if (pairs < 0) throw std::invalid_argument("--pairs must be >= 0");
    pfh::FamilyConfig fam = pfh::build_family(iota, n + 1);
    pfh::MuMatrixReport report = pfh::mu_matrix(fam);

    std::mt19937_64 gen(seed);
    auto draw = [&gen] { return Rat(static_cast<long long>(gen() % 64), 1 + static_cast<long long>(gen() % 8)); };
    long long checked = 0;
    bool pairs_ok = true;
    bool have_gap = false;
    Rat min_gap;
    for (long long it = 0; it < pairs; ++it) {
        std::vector<Rat> t, s;
        for (long long i = 0; i < report.n; ++i) t.push_back(draw());
        for (long long i = 0; i < report.n; ++i) s.push_back(draw());
        pfh::EmbeddingBounds eb = pfh::embedding_bounds(report, t, s);
        ++checked;
        if (!eb.ok) pairs_ok = false;
        Rat gap = eb.upper - eb.lower;
        if (!have_gap || gap < min_gap) {
            min_gap = gap;
            have_gap = true;
        }
    }

    Js doc = pfh::matrix_report_to_json(report);
    doc["iota"] = iota;
    doc["run"] = Js{{"seed", seed}, {"threads", pfh::thread_budget()}};
    Js pairs_doc;
    pairs_doc["checked"] = checked;
    pairs_doc["all_ok"] = pairs_ok;
    if (have_gap) pairs_doc["min_gap"] = pfh::rat_to_json(min_gap);
    doc["embedding_pairs"] = pairs_doc;
    emit(doc, out);
    return (report.all_ok && pairs_ok) ? 0 : 2;
}

int run_coarse(const std::string& r_text, long long i, long long j, long long iota,
               const std::string& out) {
    Rat r = pfh::parse_rat(r_text);
    pfh::FamilyConfig fam = pfh::build_family(iota, 2 * j);
    pfh::SeparationReport report = pfh::separation(fam, r, i, j);
    Js doc = pfh::separation_to_json(report);
    doc["iota"] = iota;
    emit(doc, out);
    return report.ok ? 0 : 2;
}

std::vector<long long> growth_degrees(const pfh::InfiniteTwistSpec& spec, long long dmax) {
    long long start = spec.onset() + 1;
    if (start % 2 != 0) ++start;
    if (start < 4) start = 4;
    if (dmax < start) throw std::invalid_argument("--dmax must be >= the envelope onset");
    std::vector<long long> ds;
    if (start == 4) {
        ds = {4};
        if (dmax >= 6) ds.push_back(6);
        for (long long d = 8; d <= dmax; d *= 2) ds.push_back(d);
    } else {
        for (long long d = start; d <= dmax; d *= 2) ds.push_back(d);
    }
    return ds;
}

int run_growth(long long dmax, bool deep, long long engine_cap, const std::string& csv,
               const std::string& out) {
    pfh::InfiniteTwistSpec spec =
        deep ? pfh::InfiniteTwistSpec::deep() : pfh::InfiniteTwistSpec::standard();
    pfh::GrowthReport report = pfh::growth_table(spec, growth_degrees(spec, dmax), engine_cap);
    if (!csv.empty()) pfh::write_text_file(csv, pfh::growth_report_to_csv(report));
    emit(pfh::growth_report_to_json(report), out);
    return (report.ratios_increasing && report.actual_ok) ? 0 : 2;
}

int run_oracle_check(const std::string& corpus, const std::string& out) {
    Js manifest = Js::parse(pfh::read_text_file(corpus + "/manifest.json"));
    if (!manifest.contains("profiles") || !manifest["profiles"].is_array())
        throw std::invalid_argument("corpus manifest needs a \"profiles\" array");
    Js results = Js::array();
    long long comparisons = 0;
    long long mismatches = 0;
    for (const Js& entry : manifest["profiles"]) {
        std::string file = entry.at("file").get<std::string>();
        pfh::TwistProfile base = pfh::load_profile_file(corpus + "/" + file);
        long long d_max = entry.at("d_max").get<long long>();
        long long k_margin = entry.value("k_margin", 2LL);
        pfh::OracleOptions oopt;
        if (entry.contains("limit"))
            oopt.limits.max_slope_times_d = pfh::rat_from_json(entry["limit"]);
        std::vector<long long> scales{1};
        if (entry.contains("scales")) scales = entry["scales"].get<std::vector<long long>>();
        for (long long n : scales) {
            pfh::TwistProfile tp = n == 1 ? base : base.scale(n);
            for (long long d = 1; d <= d_max; ++d) {
                std::vector<long long> ks;
                for (long long k = -(d + 2 * k_margin); k <= d + 2 * k_margin; k += 2)
                    if (((k - d) % 2 + 2) % 2 == 0) ks.push_back(k);
                auto dp = pfh::c_sweep(tp, d, ks);
                auto oracle = pfh::oracle_sweep(tp, d, ks, oopt);
                for (size_t idx = 0; idx < ks.size(); ++idx) {
                    ++comparisons;
                    bool same = dp[idx].feasible == oracle[idx].feasible &&
                                (!dp[idx].feasible || dp[idx].value == oracle[idx].value);
                    if (!same) {
                        ++mismatches;
                        Js bad;
                        bad["file"] = file;
                        bad["scale"] = n;
                        bad["d"] = d;
                        bad["k"] = ks[idx];
                        bad["engine_feasible"] = dp[idx].feasible;
                        bad["oracle_feasible"] = oracle[idx].feasible;
                        if (dp[idx].feasible) bad["engine"] = pfh::rat_to_json(dp[idx].value);
                        if (oracle[idx].feasible)
                            bad["oracle"] = pfh::rat_to_json(oracle[idx].value);
                        results.push_back(bad);
                    }
                }
            }
        }
    }
    Js doc;
    doc["corpus"] = corpus;
    doc["comparisons"] = comparisons;
    doc["mismatches"] = mismatches;
    doc["bad_cases"] = results;
    doc["ok"] = mismatches == 0;
    emit(doc, out);
    return mismatches == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectral numbers and Hofer-geometry reports for monotone twists"};
    app.require_subcommand(1);

    std::string profile, out, t_text = "1", r_text = "1", csv, corpus;
    long long scale = 1, d = 2, k = -2, iota = 3, n = 3, pairs = 1000, i = 1, j = 2;
    long long dmax = 1024, engine_cap = 6;
    unsigned long long seed = 12345;
    size_t witness_cap = 16;
    bool with_oracle = false, deep = false;
    std::vector<long long> ds;

    CLI::App* sc_spectral = app.add_subcommand("spectral", "One spectral number c_{d,k}");
    sc_spectral->add_option("--profile", profile, "profile JSON file")->required();
    sc_spectral->add_option("--scale", scale, "integer scaling of the profile");
    sc_spectral->add_option("--d", d, "degree")->required();
    sc_spectral->add_option("--k", k, "grading")->required();
    sc_spectral->add_flag("--oracle", with_oracle, "also run the brute-force oracle and compare");
    sc_spectral->add_option("--witnesses", witness_cap, "max witnesses to report");
    sc_spectral->add_option("--out", out, "write JSON here instead of stdout");

    CLI::App* sc_inv = app.add_subcommand("invariants", "Closed-form invariant bundles");
    sc_inv->add_option("--profile", profile, "profile JSON file")->required();
    sc_inv->add_option("--scale", scale, "integer scaling of the profile");
    sc_inv->add_option("--d", ds, "degrees")->required()->expected(-1);
    sc_inv->add_option("--t", t_text, "time scale (rational)");
    sc_inv->add_option("--out", out, "write JSON here instead of stdout");

    CLI::App* sc_quasi = app.add_subcommand("quasiflat", "Family matrix and embedding bounds");
    sc_quasi->add_option("--iota", iota, "family offset exponent");
    sc_quasi->add_option("--n", n, "matrix dimension (family has n+1 members)");
    sc_quasi->add_option("--pairs", pairs, "random coefficient pairs to test");
    sc_quasi->add_option("--seed", seed, "random seed");
    sc_quasi->add_option("--out", out, "write JSON here instead of stdout");

    CLI::App* sc_coarse = app.add_subcommand("coarse", "Coarse separation margin");
    sc_coarse->add_option("--r", r_text, "time scale (rational)");
    sc_coarse->add_option("--i", i, "smaller family index");
    sc_coarse->add_option("--j", j, "larger family index");
    sc_coarse->add_option("--iota", iota, "family offset exponent");
    sc_coarse->add_option("--out", out, "write JSON here instead of stdout");

    CLI::App* sc_growth = app.add_subcommand("growth", "Envelope growth table");
    sc_growth->add_option("--dmax", dmax, "largest degree");
    sc_growth->add_flag("--deep", deep, "use the deep envelope");
    sc_growth->add_option("--engine-cap", engine_cap, "largest degree for engine verification");
    sc_growth->add_option("--csv", csv, "also write rows as CSV here");
    sc_growth->add_option("--out", out, "write JSON here instead of stdout");

    CLI::App* sc_oracle = app.add_subcommand("oracle-check", "Engine vs oracle over a corpus");
    sc_oracle->add_option("--corpus", corpus, "corpus directory with manifest.json")->required();
    sc_oracle->add_option("--out", out, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (sc_spectral->parsed())
            return run_spectral(profile, scale, d, k, with_oracle, witness_cap, out);
        if (sc_inv->parsed()) return run_invariants(profile, scale, ds, t_text, out);
        if (sc_quasi->parsed()) return run_quasiflat(iota, n, pairs, seed, out);
        if (sc_coarse->parsed()) return run_coarse(r_text, i, j, iota, out);
        if (sc_growth->parsed()) return run_growth(dmax, deep, engine_cap, csv, out);
        if (sc_oracle->parsed()) return run_oracle_check(corpus, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
