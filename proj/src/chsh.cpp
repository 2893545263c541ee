#include "bellnoise/chsh.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bellnoise {

namespace {

constexpr double kPi = std::numbers::pi;

// For fixed theta, beta = x*cos(phi) + y*sin(phi); the best phi therefore
// yields |beta| = hypot(x, y) at phi = atan2(y, x).
struct PhiReduced {
    double x;
    double y;
};

PhiReduced phi_reduced(const NoiseParams& params, double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double a = 2.0 * params.p + params.r;
    return {a * (s * s + c) + params.r * c, -a * (c - 1.0) * s};
}

double beta_envelope(const NoiseParams& params, double theta) {
    const auto [x, y] = phi_reduced(params, theta);
    return std::hypot(x, y);
}

// d/dtheta of (x^2 + y^2)/2. Analytic, so it resolves the maximizer on the
// flat top where the envelope itself moves by less than one ulp.
double envelope_slope(const NoiseParams& params, double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double s2 = std::sin(2.0 * theta);
    const double c2 = std::cos(2.0 * theta);
    const double a = 2.0 * params.p + params.r;
    const double x = a * (s * s + c) + params.r * c;
    const double y = -a * (c - 1.0) * s;
    const double dx = a * (s2 - s) - params.r * s;
    const double dy = a * (c - c2);
    return x * dx + y * dy;
}

double canonical_phi(double x, double y) {
    double phi = std::atan2(y, x);
    if (phi < 0.0) phi += kPi;
    if (phi >= kPi) phi -= kPi;
    return phi;
}

// Golden-section maximization of the envelope on [lo, hi].
double refine_theta(const NoiseParams& params, double lo, double hi) {
    constexpr double kGolden = 0.6180339887498949;
    double c = hi - kGolden * (hi - lo);
    double d = lo + kGolden * (hi - lo);
    double fc = beta_envelope(params, c);
    double fd = beta_envelope(params, d);
    // Ties walk left so plateaus resolve toward the smaller theta.
    while (hi - lo > 1e-10) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - kGolden * (hi - lo);
            fc = beta_envelope(params, c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + kGolden * (hi - lo);
            fd = beta_envelope(params, d);
        }
    }
    return 0.5 * (lo + hi);
}

double uniform_step(int i, int n, double span) {
    return span * static_cast<double>(i) / (n - 1);
}

}  // namespace

Mat2c observable(double alpha) {
    if (!std::isfinite(alpha))
        throw std::invalid_argument("observable: angle must be finite");
    return std::cos(alpha) * pauli_z() + std::sin(alpha) * pauli_x();
}

Mat4c bell_operator(const AnalyzerSettings& s) {
    const Mat2c a0 = observable(0.0);
    const Mat2c a1 = observable(s.theta);
    const Mat2c b0 = observable(s.phi);
    const Mat2c b1 = observable(s.phi - s.theta);
    return cdouble{-1.0} * kron(a0, b0) - kron(a0, b1) - kron(a1, b0) +
           kron(a1, b1);
}

double beta_analytic(const NoiseParams& params, const AnalyzerSettings& s) {
    validate(params);
    const double st = std::sin(s.theta);
    const double ct = std::cos(s.theta);
    const double a = 2.0 * params.p + params.r;
    return std::cos(s.phi) * (a * (st * st + ct) + params.r * ct) -
           std::sin(s.phi) * a * (ct - 1.0) * st;
}

std::function<double(double, double)> beta_special(const NoiseParams& params,
                                                   NoiseVariant variant) {
    validate(params);
    const double p = params.p;
    if (variant == NoiseVariant::White) {
        if (params.r != 0.0) {
            std::ostringstream msg;
            msg << "beta_special: White variant requires r = 0, got r = "
                << params.r;
            throw std::invalid_argument(msg.str());
        }
        return [p](double theta, double phi) {
            const double st = std::sin(theta);
            const double ct = std::cos(theta);
            return 2.0 * p *
                   (std::cos(phi) * (st * st + ct) -
                    std::sin(phi) * (ct - 1.0) * st);
        };
    }
    if (std::abs(params.r - (1.0 - p)) > 1e-15) {
        std::ostringstream msg;
        msg << "beta_special: Colored variant requires r = 1 - p, got r = "
            << params.r;
        throw std::invalid_argument(msg.str());
    }
    return [p](double theta, double phi) {
        const double st = std::sin(theta);
        const double ct = std::cos(theta);
        return std::cos(phi) * ((1.0 + p) * st * st + 2.0 * ct) -
               std::sin(phi) * (1.0 + p) * (ct - 1.0) * st;
    };
}

BellMaxResult beta_max(const NoiseParams& params) {
    validate(params);
    if (params.p == 0.0 && params.r == 0.0) return {0.0, {0.0, 0.0}, params};

    // The envelope is even and 2*pi-periodic in theta, so [0, pi] covers
    // every attainable |beta|. 256 seeds oversample its at most handful of
    // local maxima (x and y are trigonometric polynomials of degree <= 2).
    constexpr int kSeeds = 256;
    int best = 0;
    double best_value = -1.0;
    for (int i = 0; i < kSeeds; ++i) {
        const double v = beta_envelope(params, uniform_step(i, kSeeds, kPi));
        if (v > best_value + 1e-12 * std::max(1.0, best_value)) {
            best_value = v;
            best = i;
        }
    }
    const double step = kPi / (kSeeds - 1);
    const double lo = std::max(0.0, uniform_step(best, kSeeds, kPi) - step);
    const double hi = std::min(kPi, uniform_step(best, kSeeds, kPi) + step);
    double theta = refine_theta(params, lo, hi);
    // Keep the seed when refinement drifted onto a worse point (flat
    // envelope near a domain edge).
    if (beta_envelope(params, uniform_step(best, kSeeds, kPi)) >
        beta_envelope(params, theta))
        theta = uniform_step(best, kSeeds, kPi);

    // Interior maximizers get a derivative-bisection polish; endpoint
    // maxima (slope never changes sign nearby) are left alone.
    double slope_lo = std::max(0.0, theta - 1e-6);
    double slope_hi = std::min(kPi, theta + 1e-6);
    if (envelope_slope(params, slope_lo) > 0.0 &&
        envelope_slope(params, slope_hi) < 0.0) {
        while (slope_hi - slope_lo > 1e-12) {
            const double mid = 0.5 * (slope_lo + slope_hi);
            if (envelope_slope(params, mid) > 0.0)
                slope_lo = mid;
            else
                slope_hi = mid;
        }
        theta = 0.5 * (slope_lo + slope_hi);
    }

    const auto [x, y] = phi_reduced(params, theta);
    return {std::hypot(x, y), {theta, canonical_phi(x, y)}, params};
}

std::vector<BetaMaxSample> beta_max_surface(int grid_n) {
    if (grid_n < 2)
        throw std::invalid_argument("beta_max_surface: grid_n < 2");
    std::vector<BetaMaxSample> rows;
    for (int i = 0; i < grid_n; ++i) {
        const double p = uniform_step(i, grid_n, 1.0);
        for (int j = 0; j < grid_n; ++j) {
            const double r = uniform_step(j, grid_n, 1.0);
            if (p + r > 1.0 + 1e-12) continue;
            const auto res = beta_max({p, std::min(r, 1.0 - p)});
            rows.push_back({p, r, res.beta_max, res.settings.theta,
                            res.settings.phi});
        }
    }
    return rows;
}

std::vector<AngleSample> optimal_angle_curves(AnglePolicy policy,
                                              std::span<const double> p_grid) {
    std::vector<AngleSample> rows;
    rows.reserve(p_grid.size());
    for (double p : p_grid) {
        double r = 0.0;
        switch (policy) {
            case AnglePolicy::Werner:
                r = 0.0;
                break;
            case AnglePolicy::HalfColored:
                r = 0.5 * (1.0 - p);
                break;
            case AnglePolicy::Colored:
                r = 1.0 - p;
                break;
        }
        const auto res = beta_max({p, r});
        rows.push_back({p, res.settings.theta, res.settings.phi});
    }
    return rows;
}

double violation_threshold(const ThresholdPolicy& policy) {
    double p_hi = 1.0;
    if (policy.kind == ThresholdPolicy::Kind::FixedTotal) {
        if (!(policy.share > 0.0 && policy.share <= 1.0))
            throw std::invalid_argument(
                "violation_threshold: total share must lie in (0, 1]");
        p_hi = policy.share;
    }
    const auto r_of = [&](double p) {
        switch (policy.kind) {
            case ThresholdPolicy::Kind::Werner:
                return 0.0;
            case ThresholdPolicy::Kind::Colored:
                return 1.0 - p;
            case ThresholdPolicy::Kind::FixedTotal:
                return policy.share - p;
        }
        return 0.0;
    };
    const auto excess = [&](double p) {
        return beta_max({p, r_of(p)}).beta_max - kClassicalBound;
    };

    constexpr int kProbes = 512;
    double prev_p = 0.0;
    double prev_f = excess(0.0);
    bool all_positive = true;
    double bracket_lo = -1.0;
    double bracket_hi = -1.0;
    for (int i = 1; i <= kProbes; ++i) {
        const double p = p_hi * static_cast<double>(i) / kProbes;
        const double f = excess(p);
        if (f <= 0.0) all_positive = false;
        if (bracket_lo < 0.0 && prev_f <= 0.0 && f > 0.0) {
            bracket_lo = prev_p;
            bracket_hi = p;
        }
        prev_p = p;
        prev_f = f;
    }
    if (all_positive) return 0.0;  // violated everywhere on the line
    if (bracket_lo < 0.0)
        throw std::domain_error(
            "violation_threshold: no threshold in domain, the policy line "
            "never crosses beta = 2");

    while (bracket_hi - bracket_lo > 1e-9) {
        const double mid = 0.5 * (bracket_lo + bracket_hi);
        if (excess(mid) > 0.0)
            bracket_hi = mid;
        else
            bracket_lo = mid;
    }
    return 0.5 * (bracket_lo + bracket_hi);
}

}  // namespace bellnoise
