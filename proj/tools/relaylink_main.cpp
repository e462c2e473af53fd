// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors
//
// Command-line surface: single-point analytic evaluation, Monte Carlo
// estimation, parameter sweeps, canned figure reproduction, and a
// self-test. Data goes to stdout or --out; diagnostics go to stderr.
// Exit codes: 0 success, 1 invalid arguments or infeasible configuration,
// 2 numerical failure.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "relaylink/analytic.hpp"
#include "relaylink/errors.hpp"
#include "relaylink/experiments.hpp"
#include "relaylink/model.hpp"
#include "relaylink/montecarlo.hpp"
#include "relaylink/rng.hpp"
#include "relaylink/specfun.hpp"

namespace {

using relaylink::db_to_linear;
using relaylink::linear_to_db;
using relaylink::Scheme;
using relaylink::SystemParams;
namespace xp = relaylink::experiments;
namespace mc = relaylink::montecarlo;

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(item, &pos);
            while (pos < item.size() &&
                   std::isspace(static_cast<unsigned char>(item[pos])))
                ++pos;
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw relaylink::invalid_parameter_error(
                flag + ": cannot parse '" + item + "' as a number");
        }
    }
    if (out.empty())
        throw relaylink::invalid_parameter_error(flag + ": empty value list");
    return out;
}

// dB values for the m interferers; a single value broadcasts.
std::vector<double> broadcast_rho_i_db(const std::string& text, int m) {
    if (m == 0) return {};
    std::vector<double> vals = parse_double_list(text, "--rho-i-db");
    if (vals.size() == 1) vals.assign(static_cast<std::size_t>(m), vals[0]);
    if (vals.size() != static_cast<std::size_t>(m))
        throw relaylink::invalid_parameter_error(
            "--rho-i-db: expected 1 or " + std::to_string(m) +
            " comma-separated values, got " + std::to_string(vals.size()));
    return vals;
}

std::vector<double> to_linear(const std::vector<double>& db) {
    std::vector<double> out;
    out.reserve(db.size());
    for (double v : db) out.push_back(db_to_linear(v));
    return out;
}

void require_format(const std::string& format) {
    if (format != "csv" && format != "json")
        throw relaylink::invalid_parameter_error(
            "--format must be csv or json, got '" + format + "'");
}

void write_output(const std::string& data, const std::string& path) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw relaylink::error("cannot open output file '" + path + "'");
    f << data;
    if (!f) throw relaylink::error("write failed for '" + path + "'");
}

nlohmann::json row_to_json(const xp::CsvRow& r) {
    nlohmann::json j;
    j["scheme"] = r.scheme;
    j["method"] = r.method;
    j["n"] = r.n;
    j["m"] = r.m;
    j["rho1_db"] = r.rho1_db;
    j["rho2_db"] = r.rho2_db;
    j["rho_i_db"] = r.rho_i_db;
    j["gamma_th_db"] = r.gamma_th_db;
    j["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json();
    j["std_err"] = r.std_err ? nlohmann::json(*r.std_err) : nlohmann::json();
    j["trials"] = r.trials ? nlohmann::json(*r.trials) : nlohmann::json();
    j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json();
    return j;
}

void emit_rows(const std::vector<xp::CsvRow>& rows, const std::string& format,
               const std::string& out_path) {
    std::ostringstream buf;
    if (format == "csv") {
        buf << xp::csv_header() << '\n';
        for (const auto& r : rows) buf << xp::format_csv_row(r) << '\n';
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(row_to_json(r));
        nlohmann::json j;
        j["rows"] = std::move(arr);
        buf << j.dump(2) << '\n';
    }
    write_output(buf.str(), out_path);
}

void emit_curves(const std::vector<xp::OutageCurve>& curves,
                 const std::string& format, const std::string& out_path) {
    std::ostringstream buf;
    if (format == "csv")
        xp::write_csv(buf, curves);
    else
        xp::write_json(buf, curves);
    write_output(buf.str(), out_path);
}

struct PointOpts {
    std::string scheme = "mrc";
    std::string method = "exact";
    int n = 1;
    int m = 0;
    double rho1_db = 0.0;
    double mu = 1.0;
    double rho2_db = 0.0;
    std::string rho_i_db = "0";
    double gamma_th_db = 0.0;
    long trials = 1000000;
    std::uint64_t seed = 1;
    double tol = 1e-6;
    std::string out;
    std::string format = "csv";
    int workers = 0;
};

// ---- selftest ----

int run_selftest(int workers) {
    int failures = 0;
    auto check = [&failures](const std::string& name, bool ok,
                             const std::string& detail = "") {
        std::cerr << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!ok && !detail.empty()) std::cerr << " (" << detail << ")";
        std::cerr << '\n';
        if (!ok) ++failures;
    };

    // counter-based generator against its published test vectors
    {
        using relaylink::rng::philox4x32_10;
        const auto r1 = philox4x32_10({0, 0, 0, 0}, {0, 0});
        const bool ok1 = r1[0] == 0x6627e8d5u && r1[1] == 0xe169c58du &&
                         r1[2] == 0xbc57ac4cu && r1[3] == 0x9b00dbd8u;
        const auto r2 = philox4x32_10(
            {0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
            {0xa4093822u, 0x299f31d0u});
        const bool ok2 = r2[0] == 0xd16cfe09u && r2[1] == 0x94fdccebu &&
                         r2[2] == 0x5001e420u && r2[3] == 0x24126ea1u;
        check("random stream known-answer vectors", ok1 && ok2);
    }

    // Bessel K against its integral representation
    {
        bool ok = true;
        std::string detail;
        for (int v : {0, 1, 3}) {
            for (double x : {0.5, 2.0, 10.0}) {
                // log-space product: exp(-x cosh t) underflows while
                // cosh(v t) overflows, so combine exponents first
                const auto q = relaylink::specfun::integrate_semi_infinite(
                    [v, x](double t) {
                        const double y = v * t;
                        const double log_cosh =
                            y + std::log1p(std::exp(-2.0 * y)) -
                            0.6931471805599453;
                        return std::exp(-x * std::cosh(t) + log_cosh);
                    },
                    1e-13, 200000);
                const double ours = relaylink::specfun::bessel_k_int(v, x);
                const double rel = std::fabs(ours - q.value) /
                                   std::fabs(q.value);
                if (rel > 1e-9) {
                    ok = false;
                    detail = "v=" + std::to_string(v) +
                             " x=" + xp::format_double(x) +
                             " rel=" + xp::format_double(rel);
                }
            }
        }
        check("bessel k vs integral representation", ok, detail);
    }

    // hypergeometric family against its Euler integral
    {
        bool ok = true;
        std::string detail;
        const struct {
            double a;
            int b;
            double z;
        } cases[] = {{2.0, 3, 0.5}, {2.0, 3, 20.0}, {1.0, 1, 4.0},
                     {3.0, 2, 100.0}};
        for (const auto& c : cases) {
            // 2F1(a,b;b+1;-z) = b * int_0^1 t^(b-1) (1+z t)^(-a) dt,
            // mapped onto [0,inf) via t = u/(1+u)
            const auto q = relaylink::specfun::integrate_semi_infinite(
                [&c](double u) {
                    const double t = u / (1.0 + u);
                    return c.b * std::pow(t, c.b - 1) *
                           std::pow(1.0 + c.z * t, -c.a) /
                           ((1.0 + u) * (1.0 + u));
                },
                1e-13, 200000);
            const double ours =
                relaylink::specfun::gauss_2f1_family(c.a, c.b, c.z);
            const double rel = std::fabs(ours - q.value) / std::fabs(q.value);
            if (rel > 1e-8) {
                ok = false;
                detail = "a=" + xp::format_double(c.a) +
                         " b=" + std::to_string(c.b) +
                         " z=" + xp::format_double(c.z) +
                         " rel=" + xp::format_double(rel);
            }
        }
        check("hypergeometric family vs euler integral", ok, detail);
    }

    // partial-fraction coefficients of the interference mixture
    {
        const auto prof = relaylink::build_profile({2.0, 1.0});
        const bool known = prof.powers.size() == 2 &&
                           std::fabs(prof.chi[0][0] - 2.0) < 1e-9 &&
                           std::fabs(prof.chi[1][0] + 1.0) < 1e-9;
        const auto prof3 = relaylink::build_profile({3.0, 1.5, 0.4});
        const double res3 = relaylink::model_detail::chi_identity_residual(
            prof3.powers, prof3.tau, prof3.chi);
        check("interference mixture partial fractions",
              known && res3 < 1e-9);
    }

    // analytic formulas against simulation, N=3 M=2, 10 dB
    {
        SystemParams p;
        p.n = 3;
        p.m = 2;
        p.rho1 = 10.0;
        p.rho2 = 10.0;
        p.gamma_th = 1.0;
        p.rho_i = {1.0, 1.0};
        bool ok = true;
        std::string detail;
        for (Scheme s : {Scheme::Mrc, Scheme::Zf, Scheme::Mmse}) {
            const double exact =
                relaylink::analytic::evaluate_outage(
                    s, relaylink::analytic::Method::Exact, p, 1e-9)
                    .probability;
            const auto est = mc::estimate_outage(p, s, 200000, 7, workers);
            const double tol = 4.0 * est.std_err + 1e-5;
            if (std::fabs(exact - est.probability) > tol) {
                ok = false;
                detail = relaylink::to_string(s) +
                         ": exact=" + xp::format_double(exact) +
                         " mc=" + xp::format_double(est.probability) +
                         " se=" + xp::format_double(est.std_err);
            }
        }
        check("outage formulas vs simulation (n=3, m=2)", ok, detail);
    }

    // bounds sit below the exact values
    {
        SystemParams p;
        p.n = 3;
        p.m = 2;
        p.rho1 = 10.0;
        p.rho2 = 10.0;
        p.gamma_th = 1.0;
        p.rho_i = {1.0, 1.0};
        using relaylink::analytic::evaluate_outage;
        using relaylink::analytic::Method;
        const double mrc_lo =
            evaluate_outage(Scheme::Mrc, Method::LowerBound, p, 1e-9)
                .probability;
        const double mrc_ex =
            evaluate_outage(Scheme::Mrc, Method::Exact, p, 1e-9).probability;
        const double mmse_lo =
            evaluate_outage(Scheme::Mmse, Method::LowerBound, p, 1e-9)
                .probability;
        const double mmse_ex =
            evaluate_outage(Scheme::Mmse, Method::Exact, p, 1e-9).probability;
        check("lower bounds below exact values",
              mrc_lo <= mrc_ex + 2e-6 && mmse_lo <= mmse_ex + 2e-6);
    }

    // the two first-hop cdf routes agree
    {
        bool ok = true;
        for (const auto& nm : {std::pair{3, 2}, std::pair{2, 3}}) {
            SystemParams p;
            p.n = nm.first;
            p.m = nm.second;
            p.rho1 = 10.0;
            p.rho2 = 10.0;
            p.gamma_th = 1.0;
            p.rho_i.assign(static_cast<std::size_t>(nm.second), 1.0);
            for (double z : {0.5, 5.0, 20.0}) {
                const double a = relaylink::analytic::cdf_z_unified(p, z);
                const double b = relaylink::analytic::cdf_z_piecewise(p, z);
                if (std::fabs(a - b) >
                    1e-10 * std::max(1.0, std::fabs(b)))
                    ok = false;
            }
        }
        check("first-hop cdf route agreement", ok);
    }

    // per-draw end-to-end ratio: reduced form vs literal matrix route
    {
        SystemParams p;
        p.n = 4;
        p.m = 2;
        p.rho1 = 10.0;
        p.rho2 = 10.0;
        p.gamma_th = 1.0;
        p.rho_i = {1.0, 1.0};
        bool ok = true;
        std::string detail;
        for (std::uint64_t t = 0; t < 200 && ok; ++t) {
            const auto d = mc::draw_channel(p, 99, t);
            for (Scheme s : {Scheme::Mrc, Scheme::Zf, Scheme::Mmse}) {
                const auto a = mc::sinr_scheme(d, p, s);
                const auto b = mc::sinr_generic(d, p, s);
                const double rel = std::fabs(a.gamma - b.gamma) /
                                   std::max(std::fabs(b.gamma), 1e-300);
                if (rel > 1e-10) {
                    ok = false;
                    detail = relaylink::to_string(s) + " trial " +
                             std::to_string(t) +
                             " rel=" + xp::format_double(rel);
                }
            }
        }
        check("per-draw ratio route identity (n=4, m=2)", ok, detail);
    }

    // zero-forcing is blind to the interference level
    {
        SystemParams p1;
        p1.n = 3;
        p1.m = 2;
        p1.rho1 = 10.0;
        p1.rho2 = 10.0;
        p1.gamma_th = 1.0;
        p1.rho_i = {1.0, 1.0};
        SystemParams p2 = p1;
        p2.rho_i = {1000.0, 1000.0};
        using relaylink::analytic::evaluate_outage;
        using relaylink::analytic::Method;
        const double a1 =
            evaluate_outage(Scheme::Zf, Method::Exact, p1, 1e-9).probability;
        const double a2 =
            evaluate_outage(Scheme::Zf, Method::Exact, p2, 1e-9).probability;
        const auto m1 = mc::estimate_outage(p1, Scheme::Zf, 50000, 11, workers);
        const auto m2 = mc::estimate_outage(p2, Scheme::Zf, 50000, 11, workers);
        check("zero-forcing interference invariance",
              a1 == a2 && m1.outage_count == m2.outage_count);
    }

    std::cerr << "selftest: " << (9 - failures) << "/9 checks passed\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "outage analysis for dual-hop amplify-and-forward relay links with "
        "a multi-antenna relay under co-channel interference"};
    app.require_subcommand(1);

    PointOpts o;
    std::string sweep_schemes = "mrc,zf,mmse";
    std::string sweep_methods = "exact";
    std::string sweep_abscissa = "rho1_db";
    std::string sweep_rho1_db = "0";
    std::string sweep_n = "1";
    std::string figure_id = "fig2";

    auto add_output_flags = [&o](CLI::App* cmd) {
        cmd->add_option("--out", o.out, "output file (default: stdout)");
        cmd->add_option("--format", o.format, "csv or json")
            ->default_val("csv");
    };
    auto add_workers_flag = [&o](CLI::App* cmd) {
        cmd->add_option("--workers", o.workers,
                        "parallel worker cap (default: available cores)")
            ->envname("RELAYLINK_WORKERS");
    };

    // analytic
    auto* cmd_an = app.add_subcommand(
        "analytic", "evaluate an outage formula at one parameter point");
    cmd_an->add_option("--scheme", o.scheme, "mrc|zf|mmse")->required();
    cmd_an->add_option("--method", o.method, "exact|lower|highsnr|largen")
        ->default_val("exact");
    cmd_an->add_option("--n", o.n, "relay antennas")->required();
    cmd_an->add_option("--m", o.m, "interferers")->default_val(0);
    cmd_an->add_option("--rho1-db", o.rho1_db, "first-hop SNR in dB")
        ->required();
    cmd_an->add_option("--mu", o.mu, "rho2/rho1 ratio")->default_val(1.0);
    auto* an_rho2 =
        cmd_an->add_option("--rho2-db", o.rho2_db,
                           "second-hop SNR in dB (overrides --mu)");
    cmd_an->add_option("--rho-i-db", o.rho_i_db,
                       "interferer INRs in dB, comma list; single value "
                       "broadcasts")
        ->default_val("0");
    cmd_an->add_option("--gamma-th-db", o.gamma_th_db, "outage threshold in dB")
        ->default_val(0.0);
    cmd_an->add_option("--tol", o.tol, "quadrature tolerance")
        ->default_val(1e-6);
    add_output_flags(cmd_an);

    // simulate
    auto* cmd_sim = app.add_subcommand(
        "simulate", "Monte Carlo outage estimate at one parameter point");
    cmd_sim->add_option("--scheme", o.scheme, "mrc|zf|mmse")->required();
    cmd_sim->add_option("--n", o.n, "relay antennas")->required();
    cmd_sim->add_option("--m", o.m, "interferers")->default_val(0);
    cmd_sim->add_option("--rho1-db", o.rho1_db, "first-hop SNR in dB")
        ->required();
    cmd_sim->add_option("--mu", o.mu, "rho2/rho1 ratio")->default_val(1.0);
    auto* sim_rho2 =
        cmd_sim->add_option("--rho2-db", o.rho2_db,
                            "second-hop SNR in dB (overrides --mu)");
    cmd_sim->add_option("--rho-i-db", o.rho_i_db,
                        "interferer INRs in dB, comma list; single value "
                        "broadcasts")
        ->default_val("0");
    cmd_sim->add_option("--gamma-th-db", o.gamma_th_db,
                        "outage threshold in dB")
        ->default_val(0.0);
    cmd_sim->add_option("--trials", o.trials, "Monte Carlo trials")
        ->default_val(1000000L);
    cmd_sim->add_option("--seed", o.seed, "random seed")->default_val(1);
    add_workers_flag(cmd_sim);
    add_output_flags(cmd_sim);

    // sweep
    auto* cmd_sw = app.add_subcommand(
        "sweep", "evaluate outage curves over a parameter grid");
    cmd_sw->add_option("--scheme", sweep_schemes, "comma list of schemes")
        ->default_val("mrc,zf,mmse");
    cmd_sw->add_option("--method", sweep_methods,
                       "comma list of exact|lower|highsnr|largen|mc")
        ->default_val("exact");
    cmd_sw->add_option("--abscissa", sweep_abscissa, "rho1_db|n_antennas")
        ->default_val("rho1_db");
    cmd_sw->add_option("--rho1-db", sweep_rho1_db,
                       "grid of dB values (comma list) for a rho1_db sweep; "
                       "single fixed value for an n_antennas sweep")
        ->required();
    cmd_sw->add_option("--n", sweep_n,
                       "antenna count; comma list when sweeping n_antennas")
        ->required();
    cmd_sw->add_option("--m", o.m, "interferers")->default_val(0);
    cmd_sw->add_option("--mu", o.mu, "rho2/rho1 ratio")->default_val(1.0);
    auto* sw_rho2 = cmd_sw->add_option(
        "--rho2-db", o.rho2_db,
        "not supported for sweeps; use --mu (kept for flag parity)");
    cmd_sw->add_option("--rho-i-db", o.rho_i_db,
                       "interferer INRs in dB, comma list; single value "
                       "broadcasts")
        ->default_val("0");
    cmd_sw->add_option("--gamma-th-db", o.gamma_th_db,
                       "outage threshold in dB")
        ->default_val(0.0);
    cmd_sw->add_option("--trials", o.trials, "Monte Carlo trials per point")
        ->default_val(1000000L);
    cmd_sw->add_option("--seed", o.seed, "random seed")->default_val(1);
    cmd_sw->add_option("--tol", o.tol, "quadrature tolerance")
        ->default_val(1e-6);
    add_workers_flag(cmd_sw);
    add_output_flags(cmd_sw);

    // figure
    auto* cmd_fig = app.add_subcommand(
        "figure", "reproduce a canned outage-figure data set");
    cmd_fig->add_option("--id", figure_id, "fig2|fig3|fig4|fig5|fig6|fig7")
        ->required();
    auto* fig_trials =
        cmd_fig->add_option("--trials", o.trials, "Monte Carlo trials");
    auto* fig_seed = cmd_fig->add_option("--seed", o.seed, "random seed");
    auto* fig_tol =
        cmd_fig->add_option("--tol", o.tol, "quadrature tolerance");
    add_workers_flag(cmd_fig);
    add_output_flags(cmd_fig);

    // selftest
    auto* cmd_self = app.add_subcommand(
        "selftest", "run the built-in consistency checks (under 2 minutes)");
    add_workers_flag(cmd_self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_an->parsed() || cmd_sim->parsed()) {
            const bool simulate = cmd_sim->parsed();
            require_format(o.format);
            if (!simulate && o.method == "mc")
                throw relaylink::invalid_parameter_error(
                    "analytic: method 'mc' is simulation; use the simulate "
                    "subcommand");
            const bool has_rho2 =
                simulate ? sim_rho2->count() > 0 : an_rho2->count() > 0;
            const double rho2_db_eff =
                has_rho2 ? o.rho2_db : o.rho1_db + linear_to_db(o.mu);
            const std::vector<double> rho_i_db =
                broadcast_rho_i_db(o.rho_i_db, o.m);

            SystemParams p;
            p.n = o.n;
            p.m = o.m;
            p.rho1 = db_to_linear(o.rho1_db);
            p.rho2 = db_to_linear(rho2_db_eff);
            p.gamma_th = db_to_linear(o.gamma_th_db);
            p.rho_i = to_linear(rho_i_db);

            xp::CsvRow row;
            row.scheme = o.scheme;  // validated below via scheme_from_string
            row.n = o.n;
            row.m = o.m;
            row.rho1_db = o.rho1_db;
            row.rho2_db = rho2_db_eff;
            row.rho_i_db = rho_i_db;
            row.gamma_th_db = o.gamma_th_db;
            const Scheme scheme = relaylink::scheme_from_string(o.scheme);

            if (simulate) {
                row.method = "mc";
                const auto est = mc::estimate_outage(p, scheme, o.trials,
                                                     o.seed, o.workers);
                row.value = est.probability;
                row.std_err = est.std_err;
                row.trials = est.trials;
                row.seed = o.seed;
            } else {
                row.method = o.method;
                const auto val = relaylink::analytic::evaluate_outage(
                    scheme,
                    xp::to_analytic_method(
                        xp::eval_method_from_string(o.method)),
                    p, o.tol);
                row.value = val.probability;
            }
            emit_rows({row}, o.format, o.out);
            return 0;
        }

        if (cmd_sw->parsed()) {
            require_format(o.format);
            if (sw_rho2->count() > 0)
                throw relaylink::invalid_parameter_error(
                    "sweep: --rho2-db is not supported here; use --mu to tie "
                    "rho2 to the swept rho1");
            xp::SweepConfig cfg;
            {
                std::stringstream ss(sweep_schemes);
                std::string item;
                while (std::getline(ss, item, ','))
                    cfg.schemes.push_back(relaylink::scheme_from_string(item));
            }
            {
                std::stringstream ss(sweep_methods);
                std::string item;
                while (std::getline(ss, item, ','))
                    cfg.methods.push_back(xp::eval_method_from_string(item));
            }
            cfg.abscissa = xp::abscissa_from_string(sweep_abscissa);
            cfg.base.m = o.m;
            cfg.base.gamma_th = db_to_linear(o.gamma_th_db);
            cfg.base.rho_i =
                to_linear(broadcast_rho_i_db(o.rho_i_db, o.m));
            cfg.mu = o.mu;
            cfg.trials = o.trials;
            cfg.seed = o.seed;
            cfg.tol = o.tol;
            if (cfg.abscissa == xp::Abscissa::Rho1Db) {
                cfg.abscissa_values =
                    parse_double_list(sweep_rho1_db, "--rho1-db");
                const std::vector<double> n_vals =
                    parse_double_list(sweep_n, "--n");
                if (n_vals.size() != 1)
                    throw relaylink::invalid_parameter_error(
                        "sweep over rho1_db: --n must be a single value");
                cfg.base.n = static_cast<int>(std::llround(n_vals[0]));
                cfg.base.rho1 = 1.0;
                cfg.base.rho2 = cfg.mu;
            } else {
                cfg.abscissa_values = parse_double_list(sweep_n, "--n");
                const std::vector<double> r_vals =
                    parse_double_list(sweep_rho1_db, "--rho1-db");
                if (r_vals.size() != 1)
                    throw relaylink::invalid_parameter_error(
                        "sweep over n_antennas: --rho1-db must be a single "
                        "value");
                cfg.base.n = static_cast<int>(
                    std::llround(cfg.abscissa_values.empty()
                                     ? 1.0
                                     : cfg.abscissa_values.front()));
                cfg.base.rho1 = db_to_linear(r_vals[0]);
                cfg.base.rho2 = cfg.mu * cfg.base.rho1;
            }
            emit_curves(xp::run_sweep(cfg, o.workers), o.format, o.out);
            return 0;
        }

        if (cmd_fig->parsed()) {
            require_format(o.format);
            xp::SweepConfig cfg =
                xp::figure_recipe(xp::figure_id_from_string(figure_id));
            if (fig_trials->count() > 0) cfg.trials = o.trials;
            if (fig_seed->count() > 0) cfg.seed = o.seed;
            if (fig_tol->count() > 0) cfg.tol = o.tol;
            emit_curves(xp::run_sweep(cfg, o.workers), o.format, o.out);
            return 0;
        }

        if (cmd_self->parsed()) return run_selftest(o.workers);

        std::cerr << "error: no subcommand selected\n";
        return 1;
    } catch (const relaylink::numerical_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const relaylink::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 2;
    }
}
