#include "bellnoise/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "bellnoise/chsh.hpp"
#include "bellnoise/fit.hpp"
#include "bellnoise/separability.hpp"
#include "bellnoise/sim.hpp"
#include "bellnoise/state.hpp"

namespace bellnoise::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// Options shared by every subcommand.
struct CommonOpts {
    std::string output;  // empty = stdout
    int precision = 6;
    bool degrees = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_degrees) {
    cmd->add_option("-o,--output", opts.output,
                    "Write the result to this file instead of stdout");
    cmd->add_option("--precision", opts.precision,
                    "Decimal places for emitted floats")
        ->default_val(6)
        ->check(CLI::Range(1, 15));
    if (with_degrees)
        cmd->add_flag("--degrees", opts.degrees,
                      "Accept and emit angles in degrees instead of radians");
}

// Fixed-point formatting with a '.' separator, independent of any locale.
std::string fixed(double value, int precision) {
    value += 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, value);
    return buf;
}

double to_radians(double angle, const CommonOpts& opts) {
    return opts.degrees ? angle * kPi / 180.0 : angle;
}

double from_radians(double angle, const CommonOpts& opts) {
    return opts.degrees ? angle * 180.0 / kPi : angle;
}

// Runs `emit` against the selected sink (file or the provided stream).
void with_sink(const CommonOpts& opts, std::ostream& out,
               const std::function<void(std::ostream&)>& emit) {
    if (opts.output.empty()) {
        emit(out);
        return;
    }
    std::ofstream file(opts.output, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file: " + opts.output);
    emit(file);
}

std::vector<double> unit_grid(int n) {
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
        grid[i] = static_cast<double>(i) / (n - 1);
    return grid;
}

double parse_csv_double(const std::string& field, int line_no) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        std::ostringstream msg;
        msg << "line " << line_no << ": cannot parse number '" << field << "'";
        throw std::runtime_error(msg.str());
    }
    return value;
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

// Input schema: header `p,beta_exp`, one decimal-point float pair per line.
std::vector<ExperimentPoint> read_points_csv(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot read input file: " + path);
    std::string line;
    if (!std::getline(file, line) || trim(line) != "p,beta_exp")
        throw std::runtime_error("input file " + path +
                                 ": expected header 'p,beta_exp'");
    std::vector<ExperimentPoint> points;
    int line_no = 1;
    while (std::getline(file, line)) {
        ++line_no;
        const std::string row = trim(line);
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string::npos) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 'p,beta_exp', got '" << row
                << "'";
            throw std::runtime_error(msg.str());
        }
        points.push_back(
            {parse_csv_double(trim(row.substr(0, comma)), line_no),
             parse_csv_double(trim(row.substr(comma + 1)), line_no)});
    }
    return points;
}

AnglePolicy parse_angle_policy(const std::string& name) {
    if (name == "werner") return AnglePolicy::Werner;
    if (name == "half") return AnglePolicy::HalfColored;
    if (name == "colored") return AnglePolicy::Colored;
    throw std::runtime_error("unknown angle policy: " + name);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{
        "bellnoise: CHSH Bell-violation analysis of two-photon polarization "
        "states under colored and white noise"};
    app.require_subcommand(1);

    double p = 0.0, r = 0.0, theta = 0.0, phi = 0.0;
    int grid_n = 101;
    long long samples = 1000000;
    std::uint64_t seed = 1;
    std::string policy_name, input_path;
    double white_frac = 0.0, share = 0.9;

    CommonOpts entropy_opts;
    auto* entropy_cmd = app.add_subcommand(
        "entropy", "CSV p,r,entropy over the valid (p,r) triangle");
    entropy_cmd->add_option("--grid", grid_n, "Grid resolution per axis")
        ->default_val(101)
        ->check(CLI::Range(2, 100000));
    add_common(entropy_cmd, entropy_opts, false);

    CommonOpts separability_opts;
    auto* separability_cmd = app.add_subcommand(
        "separability",
        "CSV p,r,separable,margin,lambda_t_min over the (p,r) triangle");
    separability_cmd->add_option("--grid", grid_n, "Grid resolution per axis")
        ->default_val(101)
        ->check(CLI::Range(2, 100000));
    add_common(separability_cmd, separability_opts, false);

    CommonOpts beta_opts;
    auto* beta_cmd = app.add_subcommand(
        "beta", "Bell quantity at one parameter/angle point, with the "
                "trace-oracle magnitude");
    beta_cmd->add_option("--p", p, "Pure-state weight")->required();
    beta_cmd->add_option("--r", r, "Colored-noise weight")->required();
    beta_cmd->add_option("--theta", theta, "Analyzer angle theta")->required();
    beta_cmd->add_option("--phi", phi, "Analyzer angle phi")->required();
    add_common(beta_cmd, beta_opts, true);

    CommonOpts beta_max_opts;
    auto* beta_max_cmd = app.add_subcommand(
        "beta-max", "Maximal |beta| over analyzer angles at one (p,r)");
    beta_max_cmd->add_option("--p", p, "Pure-state weight")->required();
    beta_max_cmd->add_option("--r", r, "Colored-noise weight")->required();
    add_common(beta_max_cmd, beta_max_opts, true);

    CommonOpts surface_opts;
    auto* surface_cmd = app.add_subcommand(
        "beta-max-surface",
        "CSV p,r,beta_max,theta_star,phi_star over the (p,r) triangle");
    surface_cmd->add_option("--grid", grid_n, "Grid resolution per axis")
        ->default_val(101)
        ->check(CLI::Range(2, 100000));
    add_common(surface_cmd, surface_opts, true);

    CommonOpts angles_opts;
    auto* angles_cmd = app.add_subcommand(
        "angles", "CSV p,theta_star,phi_star of maximizing angles along a "
                  "noise-composition line");
    angles_cmd
        ->add_option("--policy", policy_name,
                     "Noise line: colored (r=1-p), half (r=(1-p)/2), werner "
                     "(r=0)")
        ->required()
        ->check(CLI::IsMember({"colored", "half", "werner"}));
    angles_cmd->add_option("--grid", grid_n, "Number of p samples")
        ->default_val(101)
        ->check(CLI::Range(2, 100000));
    add_common(angles_cmd, angles_opts, true);

    CommonOpts threshold_opts;
    auto* threshold_cmd = app.add_subcommand(
        "threshold",
        "Smallest p on a noise line above which the CHSH bound 2 is violated");
    threshold_cmd
        ->add_option("--policy", policy_name,
                     "Noise line: werner (r=0), colored (r=1-p), total "
                     "(p+r=--share)")
        ->required()
        ->check(CLI::IsMember({"werner", "colored", "total"}));
    threshold_cmd->add_option("--share", share,
                              "Total p+r along the line (total policy only)")
        ->default_val(0.9);
    add_common(threshold_cmd, threshold_opts, false);

    CommonOpts simulate_opts;
    auto* simulate_cmd = app.add_subcommand(
        "simulate",
        "Monte Carlo estimate of beta from simulated joint measurements");
    simulate_cmd->add_option("--p", p, "Pure-state weight")->required();
    simulate_cmd->add_option("--r", r, "Colored-noise weight")->required();
    simulate_cmd->add_option("--theta", theta, "Analyzer angle theta")
        ->required();
    simulate_cmd->add_option("--phi", phi, "Analyzer angle phi")->required();
    simulate_cmd->add_option("--samples", samples, "Draws per setting pair")
        ->default_val(1000000);
    simulate_cmd->add_option("--seed", seed, "RNG seed")->default_val(1);
    add_common(simulate_cmd, simulate_opts, true);

    CommonOpts fit_opts;
    auto* fit_cmd = app.add_subcommand(
        "fit", "Fit colored-noise weights to measured maximal Bell values; "
               "CSV p,r,white_pct,colored_pct,beta_fit");
    fit_cmd->add_option("--input", input_path,
                        "CSV file with header p,beta_exp")
        ->required();
    add_common(fit_cmd, fit_opts, false);

    CommonOpts curve_opts;
    auto* curve_cmd = app.add_subcommand(
        "curve", "CSV p,beta_max with the white fraction of the total noise "
                 "held fixed");
    curve_cmd
        ->add_option("--white-frac", white_frac,
                     "White share of the total noise, in [0, 1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    curve_cmd->add_option("--grid", grid_n, "Number of p samples")
        ->default_val(101)
        ->check(CLI::Range(2, 100000));
    add_common(curve_cmd, curve_opts, false);

    try {
        // CLI11's vector overload consumes the arguments back to front.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (entropy_cmd->parsed()) {
            const auto rows = entropy_surface(grid_n);
            const int prec = entropy_opts.precision;
            with_sink(entropy_opts, out, [&](std::ostream& sink) {
                sink << "p,r,entropy\n";
                for (const auto& row : rows)
                    sink << fixed(row.p, prec) << ',' << fixed(row.r, prec)
                         << ',' << fixed(row.entropy, prec) << '\n';
            });
        } else if (separability_cmd->parsed()) {
            const int prec = separability_opts.precision;
            with_sink(separability_opts, out, [&](std::ostream& sink) {
                sink << "p,r,separable,margin,lambda_t_min\n";
                const auto grid = unit_grid(grid_n);
                for (double gp : grid) {
                    for (double gr : grid) {
                        if (gp + gr > 1.0 + 1e-12) continue;
                        const NoiseParams params{gp, std::min(gr, 1.0 - gp)};
                        const auto verdict = ppt_verdict(params);
                        const auto spectrum = ppt_spectrum_closed_form(params);
                        sink << fixed(gp, prec) << ',' << fixed(gr, prec)
                             << ',' << (verdict.separable ? 1 : 0) << ','
                             << fixed(verdict.margin, prec) << ','
                             << fixed(spectrum.lambda[3], prec) << '\n';
                    }
                }
            });
        } else if (beta_cmd->parsed()) {
            const NoiseParams params{p, r};
            const AnalyzerSettings s{to_radians(theta, beta_opts),
                                     to_radians(phi, beta_opts)};
            const double beta = beta_analytic(params, s);
            const double oracle = std::abs(
                trace_product(make_state(params).matrix(), bell_operator(s)));
            const int prec = beta_opts.precision;
            with_sink(beta_opts, out, [&](std::ostream& sink) {
                sink << "beta=" << fixed(beta, prec)
                     << " trace_magnitude=" << fixed(oracle, prec) << '\n';
            });
        } else if (beta_max_cmd->parsed()) {
            const auto res = beta_max({p, r});
            const int prec = beta_max_opts.precision;
            with_sink(beta_max_opts, out, [&](std::ostream& sink) {
                sink << "beta_max=" << fixed(res.beta_max, prec)
                     << " theta_star="
                     << fixed(from_radians(res.settings.theta, beta_max_opts),
                              prec)
                     << " phi_star="
                     << fixed(from_radians(res.settings.phi, beta_max_opts),
                              prec)
                     << '\n';
            });
        } else if (surface_cmd->parsed()) {
            const auto rows = beta_max_surface(grid_n);
            const int prec = surface_opts.precision;
            with_sink(surface_opts, out, [&](std::ostream& sink) {
                sink << "p,r,beta_max,theta_star,phi_star\n";
                for (const auto& row : rows)
                    sink << fixed(row.p, prec) << ',' << fixed(row.r, prec)
                         << ',' << fixed(row.beta_max, prec) << ','
                         << fixed(from_radians(row.theta_star, surface_opts),
                                  prec)
                         << ','
                         << fixed(from_radians(row.phi_star, surface_opts),
                                  prec)
                         << '\n';
            });
        } else if (angles_cmd->parsed()) {
            const auto grid = unit_grid(grid_n);
            const auto rows =
                optimal_angle_curves(parse_angle_policy(policy_name), grid);
            const int prec = angles_opts.precision;
            with_sink(angles_opts, out, [&](std::ostream& sink) {
                sink << "p,theta_star,phi_star\n";
                for (const auto& row : rows)
                    sink << fixed(row.p, prec) << ','
                         << fixed(from_radians(row.theta_star, angles_opts),
                                  prec)
                         << ','
                         << fixed(from_radians(row.phi_star, angles_opts),
                                  prec)
                         << '\n';
            });
        } else if (threshold_cmd->parsed()) {
            ThresholdPolicy policy = ThresholdPolicy::werner();
            if (policy_name == "colored") policy = ThresholdPolicy::colored();
            if (policy_name == "total")
                policy = ThresholdPolicy::fixed_total(share);
            const double p_star = violation_threshold(policy);
            const int prec = threshold_opts.precision;
            with_sink(threshold_opts, out, [&](std::ostream& sink) {
                sink << "p_star=" << fixed(p_star, prec) << '\n';
            });
        } else if (simulate_cmd->parsed()) {
            const AnalyzerSettings s{to_radians(theta, simulate_opts),
                                     to_radians(phi, simulate_opts)};
            const auto est = estimate_beta({p, r}, s, samples, seed);
            const int prec = simulate_opts.precision;
            with_sink(simulate_opts, out, [&](std::ostream& sink) {
                sink << "beta_estimate=" << fixed(est.value, prec)
                     << " std_error=" << fixed(est.std_error, prec)
                     << " samples_per_setting=" << est.samples_per_setting
                     << '\n';
            });
        } else if (fit_cmd->parsed()) {
            const auto points = read_points_csv(input_path);
            const auto rows = fit_table(points);
            bool any_failed = false;
            with_sink(fit_opts, out, [&](std::ostream& sink) {
                sink << "p,r,white_pct,colored_pct,beta_fit\n";
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    const auto& row = rows[i];
                    if (!row.breakdown) {
                        any_failed = true;
                        err << "error: row " << i + 1 << ": " << row.error
                            << '\n';
                        continue;
                    }
                    const auto& b = *row.breakdown;
                    sink << fixed(b.p, 6) << ',' << fixed(b.r, 6) << ','
                         << fixed(b.white_pct, 6) << ','
                         << fixed(b.colored_pct, 6) << ','
                         << fixed(row.beta_fit, 6) << '\n';
                }
            });
            if (any_failed) return 1;
        } else if (curve_cmd->parsed()) {
            const auto grid = unit_grid(grid_n);
            const auto rows = fixed_white_fraction_curve(white_frac, grid);
            const int prec = curve_opts.precision;
            with_sink(curve_opts, out, [&](std::ostream& sink) {
                sink << "p,beta_max\n";
                for (const auto& row : rows)
                    sink << fixed(row.p, prec) << ','
                         << fixed(row.beta_max, prec) << '\n';
            });
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace bellnoise::cli
