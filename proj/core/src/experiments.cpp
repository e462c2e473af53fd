// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors

#include "relaylink/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "relaylink/errors.hpp"
#include "relaylink/montecarlo.hpp"

namespace relaylink::experiments {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

bool contains(const std::vector<EvalMethod>& v, EvalMethod m) {
    return std::find(v.begin(), v.end(), m) != v.end();
}

std::vector<Variant> effective_variants(const SweepConfig& cfg) {
    if (!cfg.variants.empty()) return cfg.variants;
    Variant v;
    v.n = cfg.base.n;
    v.m = cfg.base.m;
    v.rho_i = cfg.base.rho_i;
    return {v};
}

// Contiguous index partition across threads; first exception wins.
void for_each_index(std::size_t count, int workers,
                    const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    int w = workers > 0
                ? workers
                : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    w = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(w), count));
    if (w <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    const std::size_t chunk = count / static_cast<std::size_t>(w);
    const std::size_t rem = count % static_cast<std::size_t>(w);
    std::size_t lo = 0;
    for (int t = 0; t < w; ++t) {
        const std::size_t hi =
            lo + chunk + (static_cast<std::size_t>(t) < rem ? 1 : 0);
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

bool point_usable(const CurvePoint& p) {
    return p.error.empty() && std::isfinite(p.probability);
}

std::vector<double> db_grid_0_40() {
    std::vector<double> g;
    g.reserve(17);
    for (int i = 0; i <= 16; ++i) g.push_back(2.5 * i);
    return g;
}

double json_double_or_nan(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_null()) return kNaN;
    return v.get<double>();
}

}  // namespace

std::string to_string(EvalMethod m) {
    switch (m) {
        case EvalMethod::Exact: return "exact";
        case EvalMethod::LowerBound: return "lower";
        case EvalMethod::HighSnr: return "highsnr";
        case EvalMethod::LargeN: return "largen";
        case EvalMethod::MonteCarlo: return "mc";
    }
    throw invalid_parameter_error("unknown evaluation method");
}

EvalMethod eval_method_from_string(std::string_view s) {
    if (s == "exact") return EvalMethod::Exact;
    if (s == "lower") return EvalMethod::LowerBound;
    if (s == "highsnr") return EvalMethod::HighSnr;
    if (s == "largen") return EvalMethod::LargeN;
    if (s == "mc") return EvalMethod::MonteCarlo;
    throw invalid_parameter_error("unknown evaluation method '" +
                                  std::string(s) +
                                  "' (expected exact|lower|highsnr|largen|mc)");
}

analytic::Method to_analytic_method(EvalMethod m) {
    switch (m) {
        case EvalMethod::Exact: return analytic::Method::Exact;
        case EvalMethod::LowerBound: return analytic::Method::LowerBound;
        case EvalMethod::HighSnr: return analytic::Method::HighSnr;
        case EvalMethod::LargeN: return analytic::Method::LargeN;
        case EvalMethod::MonteCarlo:
            throw invalid_parameter_error(
                "monte carlo is not an analytic method");
    }
    throw invalid_parameter_error("unknown evaluation method");
}

std::string to_string(Abscissa a) {
    return a == Abscissa::Rho1Db ? "rho1_db" : "n_antennas";
}

Abscissa abscissa_from_string(std::string_view s) {
    if (s == "rho1_db") return Abscissa::Rho1Db;
    if (s == "n_antennas") return Abscissa::NAntennas;
    throw invalid_parameter_error("unknown abscissa '" + std::string(s) +
                                  "' (expected rho1_db|n_antennas)");
}

void validate(const SweepConfig& cfg) {
    for (std::size_t i = 0; i < cfg.abscissa_values.size(); ++i) {
        const double v = cfg.abscissa_values[i];
        if (!std::isfinite(v))
            throw invalid_parameter_error("sweep: abscissa values must be finite");
        if (i > 0 && !(v > cfg.abscissa_values[i - 1]))
            throw invalid_parameter_error(
                "sweep: abscissa values must be strictly increasing");
        if (cfg.abscissa == Abscissa::NAntennas) {
            if (std::fabs(v - std::llround(v)) > 1e-9 || v < 1.0)
                throw invalid_parameter_error(
                    "sweep: antenna counts must be integers >= 1");
        }
    }
    if (!(cfg.mu > 0.0) || !std::isfinite(cfg.mu))
        throw invalid_parameter_error("sweep: mu must be positive and finite");
    if (!(cfg.tol > 0.0))
        throw invalid_parameter_error("sweep: tol must be positive");
    if (!(cfg.base.gamma_th >= 0.0) || !std::isfinite(cfg.base.gamma_th))
        throw invalid_parameter_error(
            "sweep: gamma_th must be finite and non-negative");
    if (cfg.abscissa == Abscissa::NAntennas &&
        (!(cfg.base.rho1 > 0.0) || !(cfg.base.rho2 > 0.0)))
        throw invalid_parameter_error(
            "sweep over antenna count: base rho1 and rho2 must be positive");

    const bool has_zf =
        std::find(cfg.schemes.begin(), cfg.schemes.end(), Scheme::Zf) !=
        cfg.schemes.end();
    bool any_mc = contains(cfg.methods, EvalMethod::MonteCarlo);
    for (const Variant& v : effective_variants(cfg)) {
        if (v.n < 1)
            throw invalid_parameter_error("sweep: variant n must be >= 1");
        if (v.m < 0)
            throw invalid_parameter_error("sweep: variant m must be >= 0");
        if (v.rho_i.size() != static_cast<std::size_t>(v.m))
            throw invalid_parameter_error(
                "sweep: variant interferer power list must have m entries");
        for (double r : v.rho_i)
            if (!(r > 0.0) || !std::isfinite(r))
                throw invalid_parameter_error(
                    "sweep: interferer powers must be positive and finite");
        const auto& methods = v.methods.empty() ? cfg.methods : v.methods;
        any_mc = any_mc || contains(methods, EvalMethod::MonteCarlo);
        if (has_zf) {
            if (cfg.abscissa == Abscissa::Rho1Db) {
                if (v.n <= v.m)
                    throw feasibility_error(
                        "sweep: zf requires n > m (variant has n = " +
                        std::to_string(v.n) + ", m = " + std::to_string(v.m) +
                        ")");
            } else if (!cfg.abscissa_values.empty() &&
                       cfg.abscissa_values.front() <= v.m) {
                throw feasibility_error(
                    "sweep: zf requires every swept antenna count to exceed "
                    "m = " +
                    std::to_string(v.m));
            }
        }
    }
    if (any_mc && cfg.trials < 1000)
        throw invalid_parameter_error(
            "sweep: monte carlo methods require at least 1000 trials");
}

std::uint64_t mix_point_seed(std::uint64_t seed, Scheme s, int n, int m,
                             std::size_t point_index) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<int>(s) + 1));
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    h = splitmix64(h ^ static_cast<std::uint64_t>(m));
    h = splitmix64(h ^ static_cast<std::uint64_t>(point_index));
    return h;
}

std::vector<OutageCurve> run_sweep(const SweepConfig& cfg, int workers) {
    validate(cfg);
    std::vector<OutageCurve> out;
    for (const Variant& v : effective_variants(cfg)) {
        const auto& methods = v.methods.empty() ? cfg.methods : v.methods;
        for (Scheme s : cfg.schemes) {
            for (EvalMethod meth : methods) {
                OutageCurve c;
                c.label = relaylink::to_string(s) + " " + to_string(meth) +
                          (v.label.empty() ? "" : " " + v.label);
                c.scheme = s;
                c.method = meth;
                c.n = v.n;
                c.m = v.m;
                c.rho_i = v.rho_i;
                c.provenance = cfg;
                c.points.resize(cfg.abscissa_values.size());

                auto eval_point = [&](std::size_t i) {
                    CurvePoint& pt = c.points[i];
                    pt.x = cfg.abscissa_values[i];
                    SystemParams p = cfg.base;
                    p.m = v.m;
                    p.rho_i = v.rho_i;
                    if (cfg.abscissa == Abscissa::Rho1Db) {
                        p.n = v.n;
                        p.rho1 = db_to_linear(pt.x);
                        p.rho2 = cfg.mu * p.rho1;
                    } else {
                        p.n = static_cast<int>(std::llround(pt.x));
                    }
                    try {
                        if (meth == EvalMethod::MonteCarlo) {
                            const auto est = montecarlo::estimate_outage(
                                p, s, cfg.trials,
                                mix_point_seed(cfg.seed, s, p.n, p.m, i),
                                workers);
                            pt.probability = est.probability;
                            pt.std_err = est.std_err;
                            pt.trials = est.trials;
                            pt.reliable = est.reliable;
                        } else {
                            const auto val = analytic::evaluate_outage(
                                s, to_analytic_method(meth), p, cfg.tol);
                            pt.probability = val.probability;
                        }
                    } catch (const std::exception& e) {
                        pt.probability = kNaN;
                        pt.std_err = kNaN;
                        pt.error = e.what();
                    }
                };

                if (meth == EvalMethod::MonteCarlo) {
                    // trial-level parallelism lives inside estimate_outage
                    for (std::size_t i = 0; i < c.points.size(); ++i)
                        eval_point(i);
                } else {
                    for_each_index(c.points.size(), workers, eval_point);
                }
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

std::string to_string(FigureId id) {
    switch (id) {
        case FigureId::Fig2: return "fig2";
        case FigureId::Fig3: return "fig3";
        case FigureId::Fig4: return "fig4";
        case FigureId::Fig5: return "fig5";
        case FigureId::Fig6: return "fig6";
        case FigureId::Fig7: return "fig7";
    }
    throw invalid_parameter_error("unknown figure id");
}

FigureId figure_id_from_string(std::string_view s) {
    if (s == "fig2") return FigureId::Fig2;
    if (s == "fig3") return FigureId::Fig3;
    if (s == "fig4") return FigureId::Fig4;
    if (s == "fig5") return FigureId::Fig5;
    if (s == "fig6") return FigureId::Fig6;
    if (s == "fig7") return FigureId::Fig7;
    throw invalid_parameter_error("unknown figure id '" + std::string(s) +
                                  "' (expected fig2..fig7)");
}

SweepConfig figure_recipe(FigureId id) {
    SweepConfig cfg;
    cfg.abscissa = Abscissa::Rho1Db;
    cfg.abscissa_values = db_grid_0_40();
    cfg.base.gamma_th = 1.0;
    cfg.base.rho1 = 1.0;
    cfg.base.rho2 = 1.0;
    cfg.mu = 1.0;
    cfg.trials = 1000000;
    cfg.seed = 1;
    cfg.tol = 1e-6;

    auto variant = [](std::string label, int n, int m,
                      std::vector<double> rho_i,
                      std::vector<EvalMethod> methods = {}) {
        Variant v;
        v.label = std::move(label);
        v.n = n;
        v.m = m;
        v.rho_i = std::move(rho_i);
        v.methods = std::move(methods);
        return v;
    };

    switch (id) {
        case FigureId::Fig2:
            cfg.schemes = {Scheme::Mrc};
            cfg.methods = {EvalMethod::Exact, EvalMethod::LowerBound,
                           EvalMethod::HighSnr, EvalMethod::MonteCarlo};
            cfg.variants = {variant("N=2 M=1", 2, 1, {1.0}),
                            variant("N=3 M=1", 3, 1, {1.0}),
                            variant("N=3 M=2", 3, 2, {1.0, 1.0})};
            break;
        case FigureId::Fig3:
            cfg.schemes = {Scheme::Zf};
            cfg.methods = {EvalMethod::Exact, EvalMethod::HighSnr,
                           EvalMethod::MonteCarlo};
            cfg.variants = {variant("N=3 M=2", 3, 2, {1.0, 1.0}),
                            variant("N=4 M=3", 4, 3, {1.0, 1.0, 1.0}),
                            variant("N=4 M=2", 4, 2, {1.0, 1.0})};
            break;
        case FigureId::Fig4:
            cfg.schemes = {Scheme::Mmse};
            cfg.methods = {EvalMethod::Exact, EvalMethod::LowerBound,
                           EvalMethod::HighSnr, EvalMethod::MonteCarlo};
            cfg.variants = {variant("N=2 M=3", 2, 3, {1.0, 1.0, 1.0}),
                            variant("N=3 M=2", 3, 2, {1.0, 1.0})};
            break;
        case FigureId::Fig5:
            // fixed total interference power 3x the unit level, three splits
            cfg.schemes = {Scheme::Mmse};
            cfg.methods = {EvalMethod::MonteCarlo};
            cfg.variants = {
                variant("equal power", 2, 3, {1.0, 1.0, 1.0},
                        {EvalMethod::Exact, EvalMethod::MonteCarlo}),
                variant("split (2/3,1/6,1/6)", 2, 3, {2.0, 0.5, 0.5}),
                variant("split (0.8,0.1,0.1)", 2, 3, {2.4, 0.3, 0.3})};
            break;
        case FigureId::Fig6:
            cfg.schemes = {Scheme::Mrc, Scheme::Zf, Scheme::Mmse};
            cfg.methods = {EvalMethod::MonteCarlo};
            cfg.variants = {variant("rho_I=0dB", 3, 2, {1.0, 1.0}),
                            variant("rho_I=30dB", 3, 2, {1000.0, 1000.0})};
            break;
        case FigureId::Fig7:
            cfg.schemes = {Scheme::Mrc, Scheme::Zf, Scheme::Mmse};
            cfg.methods = {EvalMethod::Exact, EvalMethod::MonteCarlo};
            cfg.abscissa = Abscissa::NAntennas;
            cfg.abscissa_values = {3, 4, 5, 6, 7, 8, 9, 10};
            cfg.base.rho1 = 10.0;
            cfg.base.rho2 = 10.0;
            cfg.variants = {variant("M=2", 3, 2, {1.0, 1.0})};
            break;
    }
    cfg.base.n = cfg.variants.front().n;
    cfg.base.m = cfg.variants.front().m;
    cfg.base.rho_i = cfg.variants.front().rho_i;
    return cfg;
}

ComparisonReport compare_report(const std::vector<OutageCurve>& curves,
                                double slope_window_lo_db,
                                double slope_window_hi_db) {
    ComparisonReport rep;
    if (curves.empty()) return rep;

    const auto& ref = curves.front().points;
    for (const OutageCurve& c : curves) {
        if (c.points.size() != ref.size())
            throw invalid_parameter_error(
                "compare_report: curves do not share a common abscissa");
        for (std::size_t i = 0; i < ref.size(); ++i)
            if (c.points[i].x != ref[i].x)
                throw invalid_parameter_error(
                    "compare_report: curves do not share a common abscissa");
    }

    auto same_config = [](const OutageCurve& a, const OutageCurve& b) {
        return a.n == b.n && a.m == b.m && a.rho_i == b.rho_i;
    };

    for (const OutageCurve& a : curves) {
        if (a.method != EvalMethod::Exact) continue;
        for (const OutageCurve& b : curves) {
            if (b.method != EvalMethod::MonteCarlo) continue;
            if (a.scheme != b.scheme || !same_config(a, b)) continue;
            GapEntry e;
            e.exact_label = a.label;
            e.mc_label = b.label;
            for (std::size_t i = 0; i < ref.size(); ++i) {
                const CurvePoint& pa = a.points[i];
                const CurvePoint& pb = b.points[i];
                double gap = kNaN;
                double se = kNaN;
                if (point_usable(pa) && point_usable(pb)) {
                    gap = pa.probability - pb.probability;
                    se = pb.std_err;
                }
                e.x.push_back(pa.x);
                e.gap.push_back(gap);
                e.se.push_back(se);
                if (std::isfinite(gap)) {
                    e.max_abs_gap = std::max(e.max_abs_gap, std::fabs(gap));
                    double ratio;
                    if (se > 0.0)
                        ratio = std::fabs(gap) / se;
                    else
                        ratio = gap == 0.0
                                    ? 0.0
                                    : std::numeric_limits<double>::infinity();
                    e.max_gap_over_se = std::max(e.max_gap_over_se, ratio);
                }
            }
            rep.max_gap_over_se =
                std::max(rep.max_gap_over_se, e.max_gap_over_se);
            rep.gaps.push_back(std::move(e));
        }
    }

    for (const OutageCurve& c : curves) {
        if (c.provenance.abscissa != Abscissa::Rho1Db) continue;
        SlopeEntry s;
        s.label = c.label;
        s.window_lo_db = slope_window_lo_db;
        s.window_hi_db = slope_window_hi_db;
        double su = 0, sw = 0, suu = 0, suw = 0;
        int k = 0;
        for (const CurvePoint& pt : c.points) {
            if (pt.x < slope_window_lo_db || pt.x > slope_window_hi_db)
                continue;
            if (!point_usable(pt) || !(pt.probability > 0.0)) continue;
            const double u = pt.x / 10.0;  // log10(rho1)
            const double w = std::log10(pt.probability);
            su += u;
            sw += w;
            suu += u * u;
            suw += u * w;
            ++k;
        }
        s.points_used = k;
        if (k >= 2) {
            const double denom = suu - su * su / k;
            if (denom > 0.0) s.slope = (suw - su * sw / k) / denom;
        }
        rep.slopes.push_back(std::move(s));
    }

    for (const OutageCurve& a : curves) {
        if (a.scheme != Scheme::Mrc) continue;
        for (const OutageCurve& b : curves) {
            if (b.scheme != Scheme::Zf) continue;
            if (a.method != b.method) continue;
            if (!(a.n == b.n && a.m == b.m && a.rho_i == b.rho_i)) continue;
            CrossoverEntry e;
            e.mrc_label = a.label;
            e.zf_label = b.label;
            for (std::size_t i = 0; i + 1 < ref.size(); ++i) {
                const CurvePoint& a0 = a.points[i];
                const CurvePoint& a1 = a.points[i + 1];
                const CurvePoint& b0 = b.points[i];
                const CurvePoint& b1 = b.points[i + 1];
                if (!(point_usable(a0) && point_usable(a1) &&
                      point_usable(b0) && point_usable(b1)))
                    continue;
                const double d0 = a0.probability - b0.probability;
                const double d1 = a1.probability - b1.probability;
                if (!(d0 * d1 < 0.0)) continue;
                double t;
                if (a0.probability > 0 && a1.probability > 0 &&
                    b0.probability > 0 && b1.probability > 0) {
                    const double l0 = std::log10(a0.probability) -
                                      std::log10(b0.probability);
                    const double l1 = std::log10(a1.probability) -
                                      std::log10(b1.probability);
                    t = l0 / (l0 - l1);
                } else {
                    t = d0 / (d0 - d1);
                }
                e.crossings_db.push_back(a0.x + t * (a1.x - a0.x));
            }
            rep.crossovers.push_back(std::move(e));
        }
    }

    return rep;
}

std::string format_text(const ComparisonReport& report) {
    std::string out = "comparison report\n";
    out += "  exact-vs-mc gaps:\n";
    if (report.gaps.empty()) out += "    (none)\n";
    for (const GapEntry& e : report.gaps)
        out += "    " + e.exact_label + " vs " + e.mc_label +
               ": max |gap| = " + format_double(e.max_abs_gap) +
               ", max |gap|/se = " + format_double(e.max_gap_over_se) + "\n";
    out += "  fitted slopes (decades per decade of rho1):\n";
    if (report.slopes.empty()) out += "    (none)\n";
    for (const SlopeEntry& s : report.slopes)
        out += "    " + s.label + ": slope = " + format_double(s.slope) +
               " over [" + format_double(s.window_lo_db) + ", " +
               format_double(s.window_hi_db) + "] dB (" +
               std::to_string(s.points_used) + " points)\n";
    out += "  mrc-zf crossovers:\n";
    if (report.crossovers.empty()) out += "    (none)\n";
    for (const CrossoverEntry& e : report.crossovers) {
        out += "    " + e.mrc_label + " vs " + e.zf_label + ": ";
        if (e.crossings_db.empty()) {
            out += "none\n";
        } else {
            for (std::size_t i = 0; i < e.crossings_db.size(); ++i)
                out += (i ? ", " : "") + format_double(e.crossings_db[i]) +
                       " dB";
            out += "\n";
        }
    }
    out += "  worst gap/se ratio: " + format_double(report.max_gap_over_se) +
           "\n";
    return out;
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_header() {
    return "scheme,method,n,m,rho1_db,rho2_db,rho_i_db,gamma_th_db,value,"
           "std_err,trials,seed";
}

std::string format_csv_row(const CsvRow& row) {
    std::string out;
    out += row.scheme;
    out += ',';
    out += row.method;
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.m);
    out += ',';
    out += format_double(row.rho1_db);
    out += ',';
    out += format_double(row.rho2_db);
    out += ',';
    for (std::size_t i = 0; i < row.rho_i_db.size(); ++i) {
        if (i) out += ';';
        out += format_double(row.rho_i_db[i]);
    }
    out += ',';
    out += format_double(row.gamma_th_db);
    out += ',';
    if (row.value) out += format_double(*row.value);
    out += ',';
    if (row.std_err) out += format_double(*row.std_err);
    out += ',';
    if (row.trials) out += std::to_string(*row.trials);
    out += ',';
    if (row.seed) out += std::to_string(*row.seed);
    return out;
}

void write_csv(std::ostream& os, const std::vector<OutageCurve>& curves) {
    os << csv_header() << '\n';
    for (const OutageCurve& c : curves) {
        const SweepConfig& prov = c.provenance;
        for (const CurvePoint& pt : c.points) {
            CsvRow row;
            row.scheme = relaylink::to_string(c.scheme);
            row.method = to_string(c.method);
            row.m = c.m;
            if (prov.abscissa == Abscissa::Rho1Db) {
                row.n = c.n;
                row.rho1_db = pt.x;
                row.rho2_db = pt.x + linear_to_db(prov.mu);
            } else {
                row.n = static_cast<int>(std::llround(pt.x));
                row.rho1_db = linear_to_db(prov.base.rho1);
                row.rho2_db = linear_to_db(prov.base.rho2);
            }
            row.rho_i_db.reserve(c.rho_i.size());
            for (double r : c.rho_i) row.rho_i_db.push_back(linear_to_db(r));
            row.gamma_th_db = linear_to_db(prov.base.gamma_th);
            if (pt.error.empty() && std::isfinite(pt.probability))
                row.value = pt.probability;
            if (c.method == EvalMethod::MonteCarlo && pt.error.empty()) {
                row.std_err = pt.std_err;
                row.trials = pt.trials;
                row.seed = prov.seed;
            }
            os << format_csv_row(row) << '\n';
        }
    }
}

void write_json(std::ostream& os, const std::vector<OutageCurve>& curves) {
    nlohmann::json j;
    j["curves"] = curves;
    os << j.dump(2) << '\n';
}

std::vector<OutageCurve> read_curves_json(std::istream& is) {
    try {
        const nlohmann::json j = nlohmann::json::parse(is);
        return j.at("curves").get<std::vector<OutageCurve>>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("curve file: ") + e.what());
    }
}

void to_json(nlohmann::json& j, const Variant& v) {
    nlohmann::json methods = nlohmann::json::array();
    for (EvalMethod m : v.methods) methods.push_back(to_string(m));
    j = {{"label", v.label},
         {"n", v.n},
         {"m", v.m},
         {"rho_i", v.rho_i},
         {"methods", std::move(methods)}};
}

void from_json(const nlohmann::json& j, Variant& v) {
    v.label = j.at("label").get<std::string>();
    v.n = j.at("n").get<int>();
    v.m = j.at("m").get<int>();
    v.rho_i = j.at("rho_i").get<std::vector<double>>();
    v.methods.clear();
    for (const auto& m : j.at("methods"))
        v.methods.push_back(eval_method_from_string(m.get<std::string>()));
}

void to_json(nlohmann::json& j, const SweepConfig& cfg) {
    nlohmann::json schemes = nlohmann::json::array();
    for (Scheme s : cfg.schemes) schemes.push_back(relaylink::to_string(s));
    nlohmann::json methods = nlohmann::json::array();
    for (EvalMethod m : cfg.methods) methods.push_back(to_string(m));
    j = {{"schemes", std::move(schemes)},
         {"methods", std::move(methods)},
         {"abscissa", to_string(cfg.abscissa)},
         {"abscissa_values", cfg.abscissa_values},
         {"base", cfg.base},
         {"mu", cfg.mu},
         {"variants", cfg.variants},
         {"trials", cfg.trials},
         {"seed", cfg.seed},
         {"tol", cfg.tol}};
}

void from_json(const nlohmann::json& j, SweepConfig& cfg) {
    cfg.schemes.clear();
    for (const auto& s : j.at("schemes"))
        cfg.schemes.push_back(scheme_from_string(s.get<std::string>()));
    cfg.methods.clear();
    for (const auto& m : j.at("methods"))
        cfg.methods.push_back(eval_method_from_string(m.get<std::string>()));
    cfg.abscissa = abscissa_from_string(j.at("abscissa").get<std::string>());
    cfg.abscissa_values = j.at("abscissa_values").get<std::vector<double>>();
    cfg.base = j.at("base").get<SystemParams>();
    cfg.mu = j.at("mu").get<double>();
    cfg.variants = j.at("variants").get<std::vector<Variant>>();
    cfg.trials = j.at("trials").get<long>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.tol = j.at("tol").get<double>();
}

void to_json(nlohmann::json& j, const CurvePoint& p) {
    j = {{"x", p.x},
         {"probability", p.probability},
         {"std_err", p.std_err},
         {"trials", p.trials},
         {"reliable", p.reliable},
         {"error", p.error}};
}

void from_json(const nlohmann::json& j, CurvePoint& p) {
    p.x = j.at("x").get<double>();
    p.probability = json_double_or_nan(j, "probability");
    p.std_err = json_double_or_nan(j, "std_err");
    p.trials = j.at("trials").get<long>();
    p.reliable = j.at("reliable").get<bool>();
    p.error = j.at("error").get<std::string>();
}

void to_json(nlohmann::json& j, const OutageCurve& c) {
    j = {{"label", c.label},
         {"scheme", relaylink::to_string(c.scheme)},
         {"method", to_string(c.method)},
         {"n", c.n},
         {"m", c.m},
         {"rho_i", c.rho_i},
         {"points", c.points},
         {"provenance", c.provenance}};
}

void from_json(const nlohmann::json& j, OutageCurve& c) {
    c.label = j.at("label").get<std::string>();
    c.scheme = scheme_from_string(j.at("scheme").get<std::string>());
    c.method = eval_method_from_string(j.at("method").get<std::string>());
    c.n = j.at("n").get<int>();
    c.m = j.at("m").get<int>();
    c.rho_i = j.at("rho_i").get<std::vector<double>>();
    c.points = j.at("points").get<std::vector<CurvePoint>>();
    c.provenance = j.at("provenance").get<SweepConfig>();
}

void to_json(nlohmann::json& j, const ComparisonReport& r) {
    nlohmann::json gaps = nlohmann::json::array();
    for (const GapEntry& e : r.gaps)
        gaps.push_back({{"exact_label", e.exact_label},
                        {"mc_label", e.mc_label},
                        {"x", e.x},
                        {"gap", e.gap},
                        {"se", e.se},
                        {"max_abs_gap", e.max_abs_gap},
                        {"max_gap_over_se", e.max_gap_over_se}});
    nlohmann::json slopes = nlohmann::json::array();
    for (const SlopeEntry& s : r.slopes)
        slopes.push_back({{"label", s.label},
                          {"slope", s.slope},
                          {"points_used", s.points_used},
                          {"window_lo_db", s.window_lo_db},
                          {"window_hi_db", s.window_hi_db}});
    nlohmann::json crossings = nlohmann::json::array();
    for (const CrossoverEntry& e : r.crossovers)
        crossings.push_back({{"mrc_label", e.mrc_label},
                             {"zf_label", e.zf_label},
                             {"crossings_db", e.crossings_db}});
    j = {{"gaps", std::move(gaps)},
         {"slopes", std::move(slopes)},
         {"crossovers", std::move(crossings)},
         {"max_gap_over_se", r.max_gap_over_se}};
}

}  // namespace relaylink::experiments

namespace relaylink {

void to_json(nlohmann::json& j, const SystemParams& p) {
    j = {{"n", p.n},
         {"m", p.m},
         {"rho1", p.rho1},
         {"rho2", p.rho2},
         {"gamma_th", p.gamma_th},
         {"rho_i", p.rho_i}};
}

void from_json(const nlohmann::json& j, SystemParams& p) {
    p.n = j.at("n").get<int>();
    p.m = j.at("m").get<int>();
    p.rho1 = j.at("rho1").get<double>();
    p.rho2 = j.at("rho2").get<double>();
    p.gamma_th = j.at("gamma_th").get<double>();
    p.rho_i = j.at("rho_i").get<std::vector<double>>();
}

}  // namespace relaylink
