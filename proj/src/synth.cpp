#include "framelab/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace framelab {

namespace {

void normalize(SampledSignal& f) {
  const double n = f.norm();
  if (n <= 0.0) throw std::runtime_error("synth: degenerate zero signal");
  for (auto& v : f.samples) v /= n;
}

}  // namespace

double smooth_bump(double t) {
  const double s = t * t;
  if (s >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - s));
}

SampledSignal random_compact_signal(const Grid& grid, double halfwidth,
                                    std::uint64_t seed, int terms) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> freq(0.3, 2.5);

  std::vector<double> a(terms), b(terms), w(terms);
  for (int j = 0; j < terms; ++j) {
    a[j] = coeff(rng);
    b[j] = coeff(rng);
    w[j] = freq(rng) * static_cast<double>(j + 1) / halfwidth;
  }

  SampledSignal f(grid);
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double x = grid.point(k);
    const double env = smooth_bump(x / halfwidth);
    if (env == 0.0) continue;
    cplx acc{};
    for (int j = 0; j < terms; ++j)
      acc += cplx{a[j] * std::cos(w[j] * x), b[j] * std::sin(w[j] * x)};
    f.samples[k] = env * acc;
  }
  normalize(f);
  return f;
}

SampledSignal random_gaussian_mix_signal(const Grid& grid, double halfwidth,
                                         std::uint64_t seed, int terms) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(0.3, 1.0);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  std::uniform_real_distribution<double> center(-0.4, 0.4);
  std::uniform_real_distribution<double> width(0.25, 0.45);
  std::uniform_real_distribution<double> modulation(-0.6, 0.6);

  std::vector<double> a(terms), th(terms), c(terms), s(terms), mu(terms);
  for (int j = 0; j < terms; ++j) {
    a[j] = amp(rng);
    th[j] = phase(rng);
    c[j] = center(rng) * halfwidth;
    s[j] = width(rng) * halfwidth;
    mu[j] = modulation(rng);
  }

  SampledSignal f(grid);
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double x = grid.point(k);
    const double t = 6.0 * x / halfwidth;
    if (std::abs(t) >= 6.0) continue;
    const double env = std::exp(-t * t / 2.0);
    cplx acc{};
    for (int j = 0; j < terms; ++j) {
      const double u = (x - c[j]) / s[j];
      acc += std::polar(a[j] * std::exp(-u * u / 2.0), th[j] + mu[j] * x);
    }
    f.samples[k] = env * acc;
  }
  normalize(f);
  return f;
}

SampledSignal random_bandlimited_signal(const Grid& grid, double w_lo, double w_hi,
                                        std::uint64_t seed, int terms) {
  if (!(0.0 < w_lo && w_lo < w_hi))
    throw std::invalid_argument("random_bandlimited_signal: need 0 < w_lo < w_hi");
  const Grid wgrid = grid.conjugate();
  if (w_hi >= wgrid.x0 + wgrid.dx * static_cast<double>(wgrid.count))
    throw std::invalid_argument("random_bandlimited_signal: band exceeds the grid Nyquist");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> rate(0.5, 3.0);

  // Gaussian profile cut at 6 sigma: supported exactly in [w_lo, w_hi] with a
  // ~1e-8 edge step, so the signal decays into desk-scale windows (a C-infty
  // bump profile only reaches ~1e-4 there).
  const double mid = (w_lo + w_hi) / 2.0;
  const double sigma = (w_hi - w_lo) / 12.0;
  std::vector<double> a(terms), b(terms), r(terms);
  for (int j = 0; j < terms; ++j) {
    a[j] = coeff(rng);
    b[j] = coeff(rng);
    r[j] = rate(rng) * 2.0;
  }

  SampledSignal spec(wgrid);
  for (std::size_t k = 0; k < wgrid.count; ++k) {
    const double w = wgrid.point(k);
    const double t = (w - mid) / sigma;
    if (w <= 0.0 || std::abs(t) >= 6.0) continue;
    cplx acc{};
    for (int j = 0; j < terms; ++j)
      acc += cplx{a[j] * std::cos(r[j] * (w - mid)), b[j] * std::sin(r[j] * (w - mid))};
    spec.samples[k] = std::exp(-t * t / 2.0) * acc;
  }
  SampledSignal f = inv_fourier(spec);
  normalize(f);
  return f;
}

SampledSignal gaussian_signal(const Grid& grid) {
  SampledSignal f(grid);
  const double scale = std::pow(kPi, -0.25);
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double x = grid.point(k);
    f.samples[k] = scale * std::exp(-x * x / 2.0);
  }
  return f;
}

}  // namespace framelab
