#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "apw/circle_core.hpp"
#include "helpers.hpp"

using namespace apw;
namespace tt = apw::testing;

TEST_CASE("grid constraints") {
    CHECK_THROWS_AS(CircleGrid(6), std::invalid_argument);
    CHECK_THROWS_AS(CircleGrid(48), std::invalid_argument);
    CircleGrid g(64);
    CHECK(g.point(0) == 0.0);
    CHECK(g.point(32) == doctest::Approx(std::numbers::pi));
}

TEST_CASE("fourier_coefficients picks out single modes") {
    CircleGrid g(64);
    std::vector<Complex> vals(64);
    for (std::size_t j = 0; j < 64; ++j) vals[j] = std::polar(1.0, 3.0 * g.point(j));
    auto s = fourier_coefficients(GridFunction(g, vals), 4);
    for (int k = -4; k <= 4; ++k) {
        CHECK(std::abs(s.coeff(k) - (k == 3 ? Complex{1, 0} : Complex{})) < 1e-12);
    }

    auto ones = fourier_coefficients(GridFunction::constant(g, {1, 0}), 2);
    for (int k = -2; k <= 2; ++k) {
        CHECK(std::abs(ones.coeff(k) - (k == 0 ? Complex{1, 0} : Complex{})) < 1e-14);
    }

    CHECK_THROWS_AS(fourier_coefficients(GridFunction::constant(g, {1, 0}), 32), ResolutionError);
}

TEST_CASE("fft path agrees with the direct sum") {
    auto g64 = CircleGrid(64);
    auto rng = tt::rng(11);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<Complex> vals(64);
        for (auto& v : vals) v = Complex{tt::uniform(rng, -2, 2), tt::uniform(rng, -2, 2)};
        GridFunction f(g64, vals);
        CHECK(tt::max_coeff_diff(fourier_coefficients(f, 20), tt::dft_direct(f, 20)) < 1e-12);
    }
    auto s = tt::random_polynomial(rng, 7);
    CHECK(tt::max_value_diff(synthesize(s, g64), tt::synthesize_direct(s, g64)) < 1e-12);
}

TEST_CASE("analysis/synthesis round-trips band-limited input") {
    CircleGrid g(64);
    auto rng = tt::rng(7);
    auto s = tt::random_polynomial(rng, 8);
    auto f = synthesize(s, g);
    auto back = fourier_coefficients(f, 8);
    CHECK(tt::max_coeff_diff(s, back) < 1e-12);

    // round-trip also exact well below Nyquist, M <= n/4
    auto s2 = tt::random_polynomial(rng, 16);
    CHECK(tt::max_coeff_diff(s2, fourier_coefficients(synthesize(s2, g), 16)) < 1e-12);
}

TEST_CASE("synthesize of delta spectra") {
    CircleGrid g(32);
    Spectrum d0(0);
    d0.set_coeff(0, {1, 0});
    auto c = synthesize(d0, g);
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(c[j] - Complex{1, 0}) < 1e-13);

    Spectrum d1(1);
    d1.set_coeff(1, {1, 0});
    auto e = synthesize(d1, g);
    for (std::size_t j = 0; j < g.size(); ++j) {
        CHECK(std::abs(e[j] - std::polar(1.0, g.point(j))) < 1e-13);
    }
}

TEST_CASE("ap_norm closed forms") {
    Spectrum one(0);
    one.set_coeff(0, std::polar(1.0, 0.7));
    CHECK(ap_norm(one, 1.0) == doctest::Approx(1.0));
    CHECK(ap_norm(one, 3.7) == doctest::Approx(1.0));

    Spectrum two(2);
    two.set_coeff(0, {3, 0});
    two.set_coeff(2, {0, 4});
    CHECK(ap_norm(two, 1.0) == doctest::Approx(7.0));
    CHECK(ap_norm(two, 2.0) == doctest::Approx(5.0));

    const int N = 5;
    Spectrum flat(N);
    for (int k = -N; k <= N; ++k) flat.set_coeff(k, {1, 0});
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
        CHECK(ap_norm(flat, p) == doctest::Approx(std::pow(2.0 * N + 1.0, 1.0 / p)));
    }

    CHECK_THROWS_AS(ap_norm(one, 0.5), std::invalid_argument);
}

TEST_CASE("lq_norm closed forms") {
    CircleGrid g(32);
    CHECK(lq_norm(GridFunction::constant(g, {-2.5, 0}), 3.0) == doctest::Approx(2.5));

    std::vector<Complex> vals(32);
    for (std::size_t j = 0; j < 32; ++j) vals[j] = std::polar(1.0, g.point(j));
    CHECK(lq_norm(GridFunction(g, vals), 1.0) == doctest::Approx(1.0));
    CHECK(lq_norm(GridFunction(g, vals), 5.0) == doctest::Approx(1.0));

    std::vector<Complex> half(32, Complex{});
    for (std::size_t j = 0; j < 16; ++j) half[j] = {1, 0};
    CHECK(lq_norm(GridFunction(g, half), 2.0) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("partial_sum truncates and is a projection") {
    auto d3 = dirichlet_kernel(3);
    auto s1 = partial_sum(d3, 1);
    CHECK(tt::max_coeff_diff(s1, dirichlet_kernel(1)) == 0.0);

    auto rng = tt::rng(3);
    auto s = tt::random_polynomial(rng, 9);
    auto s0 = partial_sum(s, 0);
    CHECK(s0.coeff(0) == s.coeff(0));
    for (int k = 1; k <= 9; ++k) {
        CHECK(s0.coeff(k) == Complex{});
        CHECK(s0.coeff(-k) == Complex{});
    }
    CHECK(tt::max_coeff_diff(partial_sum(s, 9), s) == 0.0);
    CHECK(tt::max_coeff_diff(partial_sum(partial_sum(s, 4), 4), partial_sum(s, 4)) == 0.0);
    // commutes with band projection
    CHECK(tt::max_coeff_diff(partial_sum(band_projection(s, 2), 5),
                             band_projection(partial_sum(s, 5), 2)) == 0.0);
}

TEST_CASE("fejer kernel coefficients and positivity") {
    auto f0 = fejer_kernel(0);
    CHECK(f0.coeff(0) == Complex{1, 0});

    // averaging dirichlet kernels directly gives the triangular weights
    auto f2 = fejer_kernel(2);
    Spectrum avg(2);
    for (int m = 0; m <= 2; ++m) avg = spectrum_add(avg, dirichlet_kernel(m));
    avg = spectrum_scale(avg, Complex{1.0 / 3.0, 0});
    CHECK(tt::max_coeff_diff(f2, avg) < 1e-15);
    CHECK(f2.coeff(0).real() == doctest::Approx(1.0));
    CHECK(f2.coeff(1).real() == doctest::Approx(2.0 / 3.0));
    CHECK(f2.coeff(2).real() == doctest::Approx(1.0 / 3.0));

    CircleGrid g(256);
    for (int m : {1, 5, 17, 64}) {
        auto vals = synthesize(fejer_kernel(m), g);
        for (std::size_t j = 0; j < g.size(); ++j) {
            CHECK(vals[j].real() > -1e-10);
            CHECK(std::abs(vals[j].imag()) < 1e-10);
        }
    }
}

TEST_CASE("band projection boundaries and tiling") {
    Spectrum e5(5);
    e5.set_coeff(5, {1, 0});
    CHECK(std::abs(band_projection(e5, 2).coeff(5) - Complex{1, 0}) == 0.0);

    Spectrum e8(8);
    e8.set_coeff(8, {1, 0});
    CHECK(band_projection(e8, 2).coeff(8) == Complex{});  // 8 not in [4,8)
    CHECK(std::abs(band_projection(e8, 3).coeff(8) - Complex{1, 0}) == 0.0);

    // bands are disjoint and, with the mean term, recover the spectrum
    auto rng = tt::rng(21);
    auto s = tt::random_polynomial(rng, 25);
    Spectrum acc(25);
    acc.set_coeff(0, s.coeff(0));
    for (int j = 0; j <= 5; ++j) acc = spectrum_add(acc, band_projection(s, j));
    CHECK(tt::max_coeff_diff(acc, s) < 1e-15);

    for (int j = 0; j <= 4; ++j) {
        for (int i = j + 1; i <= 5; ++i) {
            auto overlap = band_projection(band_projection(s, j), i);
            CHECK(ap_norm(overlap, 1.0) == 0.0);
        }
    }
}

TEST_CASE("convolution multiplies spectra") {
    CircleGrid g(64);
    auto rng = tt::rng(5);
    auto f = synthesize(tt::random_polynomial(rng, 10), g);

    auto cf = convolve(f, GridFunction::constant(g, {1, 0}));
    const Complex mf = mean(f);
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(cf[j] - mf) < 1e-12);

    std::vector<Complex> e(64);
    for (std::size_t j = 0; j < 64; ++j) e[j] = std::polar(1.0, g.point(j));
    GridFunction expix(g, e);
    CHECK(tt::max_value_diff(convolve(expix, expix), expix) < 1e-12);

    auto h = synthesize(tt::random_polynomial(rng, 9), g);
    auto prod = fourier_coefficients(convolve(f, h), 19);
    auto fs = fourier_coefficients(f, 10);
    auto hs = fourier_coefficients(h, 9);
    for (int k = -19; k <= 19; ++k) {
        CHECK(std::abs(prod.coeff(k) - fs.coeff(k) * hs.coeff(k)) < 1e-10);
    }

    CHECK_THROWS_AS(convolve(f, GridFunction::constant(CircleGrid(32), {1, 0})),
                    std::invalid_argument);
}

TEST_CASE("hausdorff-young and parseval over random polynomials") {
    CircleGrid g(512);
    auto rng = tt::rng(2024);
    int checked = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const int deg = tt::uniform_int(rng, 0, 128);
        auto s = tt::random_polynomial(rng, deg);
        auto f = synthesize(s, g);
        const double p = tt::uniform(rng, 1.0 + 1e-6, 2.0);
        const double q = p / (p - 1.0);
        CHECK(lq_norm(f, q) <= ap_norm(s, p) + 1e-9);

        const double parseval_lhs = std::pow(lq_norm(f, 2.0), 2);
        const double parseval_rhs = std::pow(ap_norm(s, 2.0), 2);
        CHECK(std::abs(parseval_lhs - parseval_rhs) < 1e-10 * (1.0 + parseval_rhs));
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("spectral pairing agrees with quadrature pairing") {
    CircleGrid g(128);
    auto rng = tt::rng(77);
    // includes non-band-limited samples: the ring pairing must still match
    std::vector<Complex> av(128), bv(128);
    for (std::size_t j = 0; j < 128; ++j) {
        av[j] = Complex{tt::uniform(rng, -1, 1), tt::uniform(rng, -1, 1)};
        bv[j] = Complex{tt::uniform(rng, -1, 1), 0.0};
    }
    GridFunction a(g, av), b(g, bv);
    CHECK(std::abs(inner_mean(a, b) - spectral_inner_mean(a, b)) < 1e-12);
}
