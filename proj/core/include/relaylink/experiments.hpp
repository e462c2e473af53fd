// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors
//
// Parameter sweeps, figure recipes, analytic-vs-simulation comparison
// reports, and CSV/JSON serialization of outage curves.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "relaylink/analytic.hpp"
#include "relaylink/model.hpp"

namespace relaylink::experiments {

// Evaluation routes available to a sweep: the four analytic methods plus
// the Monte Carlo estimator.
enum class EvalMethod { Exact, LowerBound, HighSnr, LargeN, MonteCarlo };

std::string to_string(EvalMethod m);
EvalMethod eval_method_from_string(std::string_view s);

// Throws invalid_parameter_error for MonteCarlo.
analytic::Method to_analytic_method(EvalMethod m);

enum class Abscissa { Rho1Db, NAntennas };

std::string to_string(Abscissa a);
Abscissa abscissa_from_string(std::string_view s);

// One antenna/interference configuration within a sweep. A sweep evaluates
// every variant against every (scheme, method) pair; a variant may restrict
// the method set (used by recipes that mix analytic and simulated curves).
struct Variant {
    std::string label;
    int n = 1;
    int m = 0;
    std::vector<double> rho_i;        // linear interferer powers, size m
    std::vector<EvalMethod> methods;  // empty: inherit the sweep's methods
};

struct SweepConfig {
    std::vector<Scheme> schemes;
    std::vector<EvalMethod> methods;
    Abscissa abscissa = Abscissa::Rho1Db;
    // dB values for Rho1Db, antenna counts for NAntennas; strictly increasing.
    std::vector<double> abscissa_values;
    // Template parameters (linear units). Along a Rho1Db sweep rho1/rho2 are
    // overridden per point with rho2 = mu * rho1; along an NAntennas sweep n
    // is overridden and rho1/rho2 are taken from here.
    SystemParams base;
    double mu = 1.0;
    std::vector<Variant> variants;  // empty: one variant drawn from `base`
    long trials = 1000000;
    std::uint64_t seed = 1;
    double tol = 1e-6;
};

// Throws invalid_parameter_error / feasibility_error; ZF sweeps require
// n > m for every variant at every abscissa point.
void validate(const SweepConfig& cfg);

struct CurvePoint {
    double x = 0.0;
    double probability = std::numeric_limits<double>::quiet_NaN();
    // NaN and trials = 0 on analytic points.
    double std_err = std::numeric_limits<double>::quiet_NaN();
    long trials = 0;
    bool reliable = true;
    // Nonempty marks an explicit gap: the point failed with this diagnostic
    // and probability/std_err are NaN.
    std::string error;
};

struct OutageCurve {
    std::string label;
    Scheme scheme = Scheme::Mrc;
    EvalMethod method = EvalMethod::Exact;
    int n = 1;
    int m = 0;
    std::vector<double> rho_i;  // linear
    std::vector<CurvePoint> points;
    SweepConfig provenance;
};

// Derives the per-point simulation seed. Mixes (seed, scheme, n, m,
// point_index) and deliberately excludes the interferer powers and the
// method, so matched-seed comparisons across interference levels (the ZF
// invariance checks) and across methods stay aligned.
std::uint64_t mix_point_seed(std::uint64_t seed, Scheme s, int n, int m,
                             std::size_t point_index);

// One curve per (variant, scheme, method) triple, points in abscissa order.
// Per-point failures are recorded in CurvePoint::error; configuration-level
// errors throw. workers caps simulation parallelism (0 = hardware); results
// are worker-count independent.
std::vector<OutageCurve> run_sweep(const SweepConfig& cfg, int workers = 0);

enum class FigureId { Fig2, Fig3, Fig4, Fig5, Fig6, Fig7 };

std::string to_string(FigureId id);
FigureId figure_id_from_string(std::string_view s);

// Canned sweep configurations reproducing the published outage figures at
// desk scale (1e6 trials instead of 1e8; the wider noise band is accounted
// for by standard-error-aware checks). fig5's unequal interference splits
// of the fixed total 3*rho_I are (2/3,1/6,1/6) and (0.8,0.1,0.1); the
// source material fixes only the total, not the splits.
SweepConfig figure_recipe(FigureId id);

// Exact-vs-simulation gap for one matched curve pair, per abscissa point.
struct GapEntry {
    std::string exact_label;
    std::string mc_label;
    std::vector<double> x;
    std::vector<double> gap;  // exact - mc; NaN where either side is a gap
    std::vector<double> se;   // mc standard error per point
    double max_abs_gap = 0.0;
    // max |gap|/se over points with se > 0; +inf if gap > 0 where se == 0.
    double max_gap_over_se = 0.0;
};

// Least-squares slope of log10(P) versus log10(rho1) over a dB window,
// in decades per decade. NaN when fewer than two usable points.
struct SlopeEntry {
    std::string label;
    double slope = std::numeric_limits<double>::quiet_NaN();
    int points_used = 0;
    double window_lo_db = 0.0;
    double window_hi_db = 0.0;
};

// Sign changes of the MRC-ZF outage difference for one matched curve pair,
// located by linear interpolation in dB between adjacent grid points.
struct CrossoverEntry {
    std::string mrc_label;
    std::string zf_label;
    std::vector<double> crossings_db;
};

struct ComparisonReport {
    std::vector<GapEntry> gaps;
    std::vector<SlopeEntry> slopes;
    std::vector<CrossoverEntry> crossovers;
    double max_gap_over_se = 0.0;  // worst ratio across all gap entries
};

// Requires all curves to share one abscissa grid (shape error otherwise).
// Pairs Exact with MonteCarlo curves of identical (scheme, n, m, rho_i)
// for gaps; bounds and approximations are qualitative and excluded from
// the gap/SE consistency ratios. Slopes are fitted for every curve on a
// Rho1Db grid; crossovers are located for every (MRC, ZF) pair sharing
// (method, n, m, rho_i).
ComparisonReport compare_report(const std::vector<OutageCurve>& curves,
                                double slope_window_lo_db = 30.0,
                                double slope_window_hi_db = 40.0);

std::string format_text(const ComparisonReport& report);

// ---- serialization ----

// Shortest decimal representation that round-trips the value.
std::string format_double(double v);

// Header line, without trailing newline:
// scheme,method,n,m,rho1_db,rho2_db,rho_i_db,gamma_th_db,value,std_err,trials,seed
std::string csv_header();

// One output row. rho_i_db entries are already in dB and are ';'-joined.
// Empty optionals serialize as empty fields (analytic rows leave std_err,
// trials, and seed empty; failed points leave value empty).
struct CsvRow {
    std::string scheme;
    std::string method;
    int n = 0;
    int m = 0;
    double rho1_db = 0.0;
    double rho2_db = 0.0;
    std::vector<double> rho_i_db;
    double gamma_th_db = 0.0;
    std::optional<double> value;
    std::optional<double> std_err;
    std::optional<long> trials;
    std::optional<std::uint64_t> seed;
};

std::string format_csv_row(const CsvRow& row);

void write_csv(std::ostream& os, const std::vector<OutageCurve>& curves);
void write_json(std::ostream& os, const std::vector<OutageCurve>& curves);
std::vector<OutageCurve> read_curves_json(std::istream& is);

void to_json(nlohmann::json& j, const Variant& v);
void from_json(const nlohmann::json& j, Variant& v);
void to_json(nlohmann::json& j, const SweepConfig& cfg);
void from_json(const nlohmann::json& j, SweepConfig& cfg);
void to_json(nlohmann::json& j, const CurvePoint& p);
void from_json(const nlohmann::json& j, CurvePoint& p);
void to_json(nlohmann::json& j, const OutageCurve& c);
void from_json(const nlohmann::json& j, OutageCurve& c);
void to_json(nlohmann::json& j, const ComparisonReport& r);

}  // namespace relaylink::experiments

namespace relaylink {

// JSON adapters for the model types live here rather than in the model
// header to keep that header free of serialization dependencies.
void to_json(nlohmann::json& j, const SystemParams& p);
void from_json(const nlohmann::json& j, SystemParams& p);

}  // namespace relaylink
