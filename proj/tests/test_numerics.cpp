#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "framelab/numerics.hpp"
#include "framelab/synth.hpp"

using namespace framelab;

namespace {

SampledSignal make_random(const Grid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  SampledSignal f(grid);
  for (auto& v : f.samples) v = cplx{d(rng), d(rng)};
  return f;
}

}  // namespace

TEST_CASE("inner product of constants is exact") {
  const Grid grid{0.0, 1.0 / 128.0, 128};  // covers [0, 1)
  SampledSignal f(grid);
  for (auto& v : f.samples) v = 1.0;
  CHECK(inner_product(f, f).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(inner_product(f, f).imag() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("orthogonal exponentials on [0,2]") {
  const Grid grid{0.0, 2.0 / 4096.0, 4096};
  SampledSignal f(grid), g(grid);
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double x = grid.point(k);
    f.samples[k] = std::polar(1.0, kPi * x);
    g.samples[k] = std::polar(1.0, 2.0 * kPi * x);
  }
  CHECK(std::abs(inner_product(f, g)) < 1e-12);
}

TEST_CASE("inner product equals elementwise oracle on random data") {
  const Grid grid{-1.0, 2.0 / 64.0, 64};
  const SampledSignal f = make_random(grid, 11);
  const SampledSignal g = make_random(grid, 12);
  cplx expected{};
  for (std::size_t k = 0; k < 64; ++k)
    expected += std::conj(f.samples[k]) * g.samples[k] * grid.dx;
  const cplx got = inner_product(f, g);
  CHECK(std::abs(got - expected) < 1e-14);
}

TEST_CASE("inner product properties") {
  const Grid grid{-2.0, 4.0 / 256.0, 256};
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const SampledSignal f = make_random(grid, 100 + seed);
    const SampledSignal g = make_random(grid, 200 + seed);
    const cplx ff = inner_product(f, f);
    CHECK(ff.real() >= 0.0);
    CHECK(std::abs(ff.imag()) < 1e-13 * ff.real());
    CHECK(std::abs(std::conj(inner_product(f, g)) - inner_product(g, f)) < 1e-13);
  }
}

TEST_CASE("inner product rejects mismatched grids") {
  const SampledSignal f(Grid{0.0, 0.1, 32});
  const SampledSignal g(Grid{0.5, 0.1, 32});
  CHECK_THROWS_AS((void)inner_product(f, g), std::invalid_argument);
}

TEST_CASE("weighted norm reduces to plain norm at eps = 0") {
  const Grid grid = Grid::centered(4.0, 512);
  SampledSignal f = random_compact_signal(grid, 3.0, 5);
  CHECK(weighted_norm_sq(f, 0.0) == doctest::Approx(f.norm_sq()).epsilon(1e-14));
}

TEST_CASE("weighted norm of the unit indicator matches the closed form e - 1") {
  const std::size_t n = 1 << 20;
  const Grid grid{0.0, 1.0 / static_cast<double>(n), n};
  SampledSignal f(grid);
  for (auto& v : f.samples) v = 1.0;
  CHECK(weighted_norm_sq(f, 1.0) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-6));
}

TEST_CASE("weighted norm obeys the pointwise support bound") {
  const Grid grid = Grid::centered(2.0, 1024);
  const double support = 1.5;
  const SampledSignal f = random_compact_signal(grid, support, 7);
  for (double eps : {0.1, 0.5, 1.0})
    CHECK(weighted_norm_sq(f, eps) <= std::exp(eps * support) * f.norm_sq() * (1 + 1e-12));
}

TEST_CASE("gaussian is a fixed point of the transform") {
  const Grid grid = Grid::centered(16.0, 2048);
  SampledSignal f(grid);
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double x = grid.point(k);
    f.samples[k] = std::exp(-x * x / 2.0);
  }
  const SampledSignal F = fourier(f);
  double worst = 0.0;
  for (std::size_t j = 0; j < F.size(); ++j) {
    const double w = F.grid.point(j);
    worst = std::max(worst, std::abs(F.samples[j] - std::exp(-w * w / 2.0)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("transform is unitary (Parseval)") {
  const Grid grid = Grid::centered(5.0, 1024);
  const SampledSignal f = make_random(grid, 42);
  const SampledSignal F = fourier(f);
  CHECK(std::abs(F.norm_sq() - f.norm_sq()) < 1e-10 * f.norm_sq());
}

TEST_CASE("shift theorem against direct quadrature") {
  const Grid grid = Grid::centered(8.0, 1024);
  const SampledSignal f = random_compact_signal(grid, 3.0, 21);
  const double s = 16.0 * grid.dx;  // grid-aligned shift, support stays inside
  SampledSignal shifted(grid);
  for (std::size_t k = 16; k < grid.count; ++k)
    shifted.samples[k] = f.samples[k - 16];

  const SampledSignal F = fourier(f);
  const SampledSignal Fs = fourier(shifted);
  double worst = 0.0;
  for (std::size_t j = 0; j < F.size(); ++j) {
    const double w = F.grid.point(j);
    // oracle: direct quadrature of the defining integral of the shifted signal
    worst = std::max(worst,
                     std::abs(Fs.samples[j] - std::polar(1.0, -w * s) * F.samples[j]));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("inverse transform round trip on centered grids") {
  const Grid grid = Grid::centered(7.0, 512);
  const SampledSignal f = make_random(grid, 77);
  const SampledSignal back = inv_fourier(fourier(f));
  REQUIRE(back.grid.matches(grid));
  double worst = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k)
    worst = std::max(worst, std::abs(back.samples[k] - f.samples[k]));
  CHECK(worst < 1e-12);
}

TEST_CASE("round trip on random band-limited signals") {
  const Grid grid = Grid::centered(20.0, 2048);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const SampledSignal f = random_bandlimited_signal(grid, 0.5, 10.0, seed);
    const SampledSignal back = inv_fourier(fourier(f));
    double err = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k)
      err += std::norm(back.samples[k] - f.samples[k]);
    CHECK(std::sqrt(err * grid.dx) < 1e-10);
  }
}

TEST_CASE("odd sample counts keep the transform unitary and invertible") {
  const Grid grid{-3.0 * 6.0 / 7.0, 6.0 / 7.0, 7};
  REQUIRE(grid.is_centered());
  const SampledSignal f = make_random(grid, 3);
  const SampledSignal F = fourier(f);
  CHECK(std::abs(F.norm_sq() - f.norm_sq()) < 1e-12 * f.norm_sq());
  const SampledSignal back = inv_fourier(F);
  for (std::size_t k = 0; k < f.size(); ++k)
    CHECK(std::abs(back.samples[k] - f.samples[k]) < 1e-12);
}

TEST_CASE("fractional shift preserves the norm and matches exact shifts") {
  const Grid grid = Grid::centered(10.0, 1024);
  const SampledSignal f = random_compact_signal(grid, 4.0, 9);
  const SampledSignal g = fractional_shift(f, 0.377);
  CHECK(g.norm_sq() == doctest::Approx(f.norm_sq()).epsilon(1e-12));

  // analytic check: shifting a pure exponential multiplies by a phase
  SampledSignal e(grid);
  const double w = 2.0 * kTwoPi / (grid.dx * 1024);  // an exact grid frequency
  for (std::size_t k = 0; k < grid.count; ++k)
    e.samples[k] = std::polar(1.0, w * grid.point(k));
  const SampledSignal es = fractional_shift(e, 1.234);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.count; ++k)
    worst = std::max(worst, std::abs(es.samples[k] -
                                     std::polar(1.0, w * (grid.point(k) + 1.234))));
  CHECK(worst < 1e-11);
}

TEST_CASE("fourier_at agrees with the gridded transform at grid frequencies") {
  const Grid grid = Grid::centered(6.0, 256);
  const SampledSignal f = make_random(grid, 55);
  const SampledSignal F = fourier(f);
  std::vector<double> pts;
  for (std::size_t j = 0; j < F.size(); j += 17) pts.push_back(F.grid.point(j));
  const std::vector<cplx> vals = fourier_at(f, pts);
  std::size_t i = 0;
  for (std::size_t j = 0; j < F.size(); j += 17, ++i)
    CHECK(std::abs(vals[i] - F.samples[j]) < 1e-11);
}

TEST_CASE("interp_at reproduces samples and smooth off-grid values") {
  const Grid grid = Grid::centered(8.0, 512);
  SampledSignal f(grid);
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double x = grid.point(k);
    f.samples[k] = std::exp(-x * x / 2.0);
  }
  CHECK(std::abs(interp_at(f, grid.point(100)) - f.samples[100]) < 1e-12);
  const double x = 0.3141;
  CHECK(std::abs(interp_at(f, x) - std::exp(-x * x / 2.0)) < 1e-9);
}

TEST_CASE("simpson integrates smooth functions to high order") {
  const std::size_t n = 513;
  const double dx = 1.0 / static_cast<double>(n - 1);
  std::vector<double> vals(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = dx * static_cast<double>(k);
    vals[k] = std::exp(-2.0 * x);
  }
  const double expected = (1.0 - std::exp(-2.0)) / 2.0;
  CHECK(std::abs(simpson(vals, dx) - expected) < 1e-12);

  // odd interval count goes through the 3/8 tail
  std::vector<double> vals2(vals.begin(), vals.end() - 1);
  const double expected2 = (1.0 - std::exp(-2.0 * (1.0 - dx))) / 2.0;
  CHECK(std::abs(simpson(vals2, dx) - expected2) < 1e-12);
}
