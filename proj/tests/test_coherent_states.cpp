#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "framelab/coherent_states.hpp"
#include "framelab/frames.hpp"
#include "framelab/synth.hpp"

using namespace framelab;

namespace {

double rel_dist(const SampledSignal& a, const SampledSignal& b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::norm(a.samples[k] - b.samples[k]);
  return std::sqrt(acc * a.grid.dx) / b.norm();
}

}  // namespace

TEST_CASE("coherent state at the origin is the fiducial") {
  const Grid grid = Grid::centered(12.0, 512);
  const SampledSignal psi = gaussian_signal(grid);
  const HeisRepParams p{1.0, 0.0};
  CHECK(rel_dist(coherent_state_heis(p, {0.0, 0.0}, psi), psi) < 1e-13);
  const ContractionSchedule sched{1.0, 0.0, 0.0, 0.0};
  CHECK(rel_dist(coherent_state_eps(sched, 0.5, {0.0, 0.0}, psi), psi) < 1e-13);
}

TEST_CASE("canonical gaussian coherent states match the closed form") {
  const Grid grid = Grid::centered(12.0, 1024);
  const SampledSignal psi = gaussian_signal(grid);
  const HeisRepParams p{1.0, 0.0};
  const double q = 1.3, pp = -0.7;

  // state at (-q, p) is pi^{-1/4} e^{-i p (q/2 - x)} e^{-(x-q)^2/2}
  const SampledSignal cs = coherent_state_heis(p, {-q, pp}, psi);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double x = grid.point(k);
    const cplx expected = std::pow(kPi, -0.25) *
                          std::polar(std::exp(-(x - q) * (x - q) / 2.0),
                                     -pp * (q / 2.0 - x));
    worst = std::max(worst, std::abs(cs.samples[k] - expected));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("coherent-state norms are preserved for random phase points") {
  const Grid grid = Grid::centered(14.0, 1024);
  const SampledSignal psi = gaussian_signal(grid);
  const HeisRepParams p{1.0, 0.0};
  const ContractionSchedule sched{1.0, 0.0, 0.0, 0.0};
  for (double q : {-2.0, 0.7, 3.1})
    for (double pp : {-1.5, 2.2}) {
      CHECK(coherent_state_heis(p, {q, pp}, psi).norm() ==
            doctest::Approx(psi.norm()).epsilon(1e-10));
      CHECK(coherent_state_eps(sched, 0.3, {q, pp}, psi).norm() ==
            doctest::Approx(psi.norm()).epsilon(1e-10));
    }
}

TEST_CASE("coherent states contract pointwise in eps at first order") {
  const Grid grid = Grid::centered(12.0, 1024);
  const SampledSignal psi = gaussian_signal(grid);
  const ContractionSchedule sched{1.0, 0.0, 0.0, 0.0};
  const PhasePoint pt{1.2, -0.8};
  const SampledSignal limit = coherent_state_heis({1.0, 0.0}, pt, psi);

  double prev = 1e300;
  std::vector<double> dist;
  for (double eps : {0.02, 0.01, 0.005}) {
    const double d = rel_dist(coherent_state_eps(sched, eps, pt, psi), limit);
    CHECK(d < prev);
    dist.push_back(d);
    prev = d;
  }
  CHECK(dist[0] / dist[1] == doctest::Approx(2.0).epsilon(0.15));
  CHECK(dist[1] / dist[2] == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("admissibility closed forms and their homogeneity") {
  const Grid grid = Grid::centered(12.0, 2048);
  SampledSignal psi = gaussian_signal(grid);
  const double c = admissibility_heis({1.0, 0.0}, psi);
  CHECK(c == doctest::Approx(kTwoPi).epsilon(1e-10));
  CHECK(admissibility_heis({2.0, 0.0}, psi) == doctest::Approx(c / 2.0).epsilon(1e-12));

  SampledSignal psi2 = psi;
  for (auto& v : psi2.samples) v *= 2.0;
  CHECK(admissibility_heis({1.0, 0.0}, psi2) == doctest::Approx(16.0 * c).epsilon(1e-12));

  const SampledSignal zero(grid);
  CHECK_THROWS_AS((void)coherent_state_heis({1.0, 0.0}, {0.1, 0.2}, zero),
                  std::invalid_argument);
}

TEST_CASE("eps-admissibility: limit, indicator closed form, singular parameters") {
  const Grid grid = Grid::centered(12.0, 2048);
  const SampledSignal psi = gaussian_signal(grid);
  const ContractionSchedule sched{1.0, 0.0, 0.0, 0.0};

  CHECK(std::abs(admissibility_eps(sched, 1e-6, psi) -
                 admissibility_heis({1.0, 0.0}, psi)) < 1e-6);

  // indicator of [0, 1] at eps = 1: C = 2 pi (e - 1)
  const std::size_t n = 1 << 20;
  SampledSignal ind(Grid{0.0, 1.0 / static_cast<double>(n), n});
  for (auto& v : ind.samples) v = 1.0;
  CHECK(admissibility_eps(sched, 1.0, ind) ==
        doctest::Approx(kTwoPi * (std::exp(1.0) - 1.0)).epsilon(1e-5));

  const ContractionSchedule singular{1.0, 2.0, 0.0, 2.0};
  CHECK_THROWS_AS((void)admissibility_eps(singular, 0.5, psi), std::invalid_argument);

  // continuity in eps on (0, 1]
  double prev = admissibility_eps(sched, 1e-3, psi);
  for (double eps : {0.9e-3, 0.8e-3}) {
    const double cur = admissibility_eps(sched, eps, psi);
    CHECK(std::abs(cur - prev) < 1e-3);
    prev = cur;
  }
}

TEST_CASE("appendix double integral matches the factored closed form") {
  const Grid grid = Grid::centered(4.0 * kPi, 4096);
  const MotherWavelet mw = build_mother_wavelet(kPi, kPi, 1.0, grid);
  const ContractionSchedule sched{1.0, 0.3, 0.1, 0.2};
  for (double eps : {0.1, 0.5, 1.0}) {
    const double closed = admissibility_eps(sched, eps, mw.psi);
    const double quad = admissibility_eps_quadrature(
        sched, eps, kPi, 4096, [&](double x) { return mw.eval(x); });
    CHECK(std::abs(quad - closed) < 1e-6 * closed);
  }
}

TEST_CASE("phase-space weight: positivity, value at zero, eps -> 0 limit") {
  CHECK(phase_space_weight(0.5, 0.0) == 1.0);
  CHECK(phase_space_weight(0.0, 3.0) == 1.0);
  for (double q : {-5.0, -0.5, 1e-10, 2.0, 6.0}) {
    CHECK(phase_space_weight(0.25, q) > 0.0);
    CHECK(std::abs(phase_space_weight(1e-9, q) - 1.0) < 1e-8);
  }
  // increasing in q for eps > 0
  CHECK(phase_space_weight(0.5, 2.0) > phase_space_weight(0.5, -2.0));
}

TEST_CASE("resolution of the identity for the gaussian fiducial") {
  const Grid grid = Grid::centered(12.0, 512);
  const SampledSignal psi = gaussian_signal(grid);
  const ContractionSchedule sched{1.0, 0.0, 0.0, 0.0};
  const ResolutionWindow window{6.0, 6.0, 64, 64};

  // overlap against the closed-form gaussian oracle |<psi|cs>|^2 = e^{-(q^2+p^2)/2}
  for (double q : {0.5, 2.0})
    for (double p : {-1.0, 1.5}) {
      const SampledSignal cs = coherent_state_heis({1.0, 0.0}, {q, p}, psi);
      const double overlap = std::norm(inner_product(psi, cs));
      CHECK(overlap == doctest::Approx(std::exp(-(q * q + p * p) / 2.0)).epsilon(1e-8));
    }

  const double res = resolution_identity_residual(
      ResolutionKind::heisenberg, sched, 0.0, psi, psi, psi, window);
  CHECK(res <= 2e-2);

  // orthogonal pair: both sides vanish within the truncation tolerance
  SampledSignal odd(grid);
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double x = grid.point(k);
    odd.samples[k] = x * std::exp(-x * x / 2.0);
  }
  const double on = odd.norm();
  for (auto& v : odd.samples) v /= on;
  CHECK(std::abs(inner_product(psi, odd)) < 1e-12);
  const double res_orth = resolution_identity_residual(
      ResolutionKind::heisenberg, sched, 0.0, psi, psi, odd, window);
  CHECK(res_orth <= 2e-2);

  // eps family approaches the heisenberg residual
  const double res_half = resolution_identity_residual(
      ResolutionKind::eps_family, sched, 0.5, psi, psi, psi, window);
  const double res_quarter = resolution_identity_residual(
      ResolutionKind::eps_family, sched, 0.25, psi, psi, psi, window);
  CHECK(std::abs(res_quarter - res) < 2e-2);
  CHECK(std::abs(res_quarter - res) <= std::abs(res_half - res) + 1e-3);
}

TEST_CASE("doubling the quadrature window does not hurt the residual") {
  const Grid grid = Grid::centered(12.0, 512);
  const SampledSignal psi = gaussian_signal(grid);
  const ContractionSchedule sched{1.0, 0.0, 0.0, 0.0};
  const double small = resolution_identity_residual(
      ResolutionKind::heisenberg, sched, 0.0, psi, psi, psi, {3.0, 3.0, 32, 32});
  const double large = resolution_identity_residual(
      ResolutionKind::heisenberg, sched, 0.0, psi, psi, psi, {6.0, 6.0, 64, 64});
  CHECK(large <= small * 1.1 + 1e-12);
}
