#include <doctest.h>

#include <algorithm>
#include <random>

#include "bellnoise/separability.hpp"
#include "helpers.hpp"

using namespace bellnoise;
using testutil::max_abs_diff;

namespace {

// Test-local transpose over the second qubit: entry (ij,kl) -> (il,kj).
Mat4c partial_transpose_second(const Mat4c& m) {
    Mat4c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
    return r;
}

}  // namespace

TEST_CASE("ppt spectrum closed form") {
    SUBCASE("no white noise gives smallest eigenvalue -p/2") {
        for (double p : {0.1, 0.4, 0.9}) {
            const auto spectrum = ppt_spectrum_closed_form({p, 1.0 - p});
            CHECK(spectrum.lambda[3] == doctest::Approx(-0.5 * p).epsilon(1e-14));
        }
    }
    SUBCASE("separable interior point stays positive") {
        const auto spectrum = ppt_spectrum_closed_form({0.2, 0.2});
        CHECK(spectrum.lambda[3] == doctest::Approx(0.05).epsilon(1e-14));
    }
    SUBCASE("pure state") {
        const auto spectrum = ppt_spectrum_closed_form({1.0, 0.0});
        const std::array<double, 4> expected{0.5, 0.5, 0.5, -0.5};
        CHECK(max_abs_diff(spectrum.lambda, expected) == 0.0);
    }
    SUBCASE("ordered nonincreasing with unit sum") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 500; ++trial) {
            const auto spectrum =
                ppt_spectrum_closed_form(testutil::random_params(rng));
            CHECK(spectrum.lambda[0] >= spectrum.lambda[1]);
            CHECK(spectrum.lambda[1] >= spectrum.lambda[2]);
            CHECK(spectrum.lambda[2] >= spectrum.lambda[3]);
            const double sum = spectrum.lambda[0] + spectrum.lambda[1] +
                               spectrum.lambda[2] + spectrum.lambda[3];
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("closed-form PPT spectrum equals numeric diagonalization on a grid") {
    const auto grid = testutil::linspace(0.0, 1.0, 50);
    for (double p : grid) {
        for (double r : grid) {
            if (p + r > 1.0) continue;
            const auto numeric = hermitian_eigenvalues(
                partial_transpose_first(make_state({p, r}).matrix()));
            const auto closed = ppt_spectrum_closed_form({p, r}).lambda;
            CHECK(max_abs_diff(numeric, closed) < 1e-12);
        }
    }
}

TEST_CASE("transposing either qubit gives the same spectrum") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const Mat4c rho = make_state(testutil::random_params(rng)).matrix();
        const auto first = hermitian_eigenvalues(partial_transpose_first(rho));
        const auto second =
            hermitian_eigenvalues(partial_transpose_second(rho));
        CHECK(max_abs_diff(first, second) < 1e-12);
    }
}

TEST_CASE("ppt verdict") {
    CHECK(ppt_verdict({0.33, 0.0}).separable);
    CHECK_FALSE(ppt_verdict({0.34, 0.0}).separable);

    const auto inside = ppt_verdict({0.3, 0.05});
    CHECK(inside.separable);
    CHECK(inside.margin == doctest::Approx(0.05).epsilon(1e-12));

    const auto outside = ppt_verdict({0.5, 0.1});
    CHECK_FALSE(outside.separable);
    CHECK(outside.margin == doctest::Approx(-0.6).epsilon(1e-12));

    // The boundary itself has a zero PPT eigenvalue and counts as separable.
    CHECK(ppt_verdict({0.2, 0.4}).separable);
}

TEST_CASE("majorization verdict") {
    const auto entangled = majorization_verdict({0.5, 0.1});
    CHECK_FALSE(entangled.separable);  // largest eigenvalue 0.65 > 1/2
    CHECK(entangled.criterion == Criterion::Majorization);

    CHECK(majorization_verdict({0.0, 0.0}).separable);
}

TEST_CASE("majorization and PPT verdicts agree on the whole triangle") {
    const auto grid = testutil::linspace(0.0, 1.0, 60);
    for (double p : grid) {
        for (double r : grid) {
            if (p + r > 1.0) continue;
            CHECK(majorization_verdict({p, r}).separable ==
                  ppt_verdict({p, r}).separable);
        }
    }
}

TEST_CASE("raising r flips a weakly noisy state to entangled exactly once") {
    for (double p : {0.05, 0.15, 0.25, 0.32}) {
        const double r_flip = 1.0 - 3.0 * p;
        const double step = (1.0 - p) / 399;
        int flips = 0;
        bool prev = true;
        for (double r : testutil::linspace(0.0, 1.0 - p, 400)) {
            const bool sep = ppt_verdict({p, r}).separable;
            if (sep != prev) {
                ++flips;
                CHECK(std::abs(r - r_flip) < 1.01 * step);
            }
            prev = sep;
        }
        CHECK(flips == 1);
    }
}

TEST_CASE("separability boundary line") {
    CHECK(separability_boundary(0.0).r == 1.0);
    CHECK(separability_boundary(0.0).inside_domain);
    CHECK(separability_boundary(1.0 / 3.0).r ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(separability_boundary(0.2).r == doctest::Approx(0.4).epsilon(1e-14));

    const auto outside = separability_boundary(0.5);
    CHECK(outside.r == 0.0);
    CHECK_FALSE(outside.inside_domain);

    CHECK_THROWS_AS(separability_boundary(-0.1), std::invalid_argument);
}
