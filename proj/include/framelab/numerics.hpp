// Sampled signals on uniform grids, quadrature inner products, and the
// unitary Fourier transform pair F(f)(w) = (2*pi)^{-1/2} Int f(x) e^{-iwx} dx.
//
// All operations are pure functions on value types and safe to call
// concurrently.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace framelab {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

/// Uniform sampling lattice x_k = x0 + k*dx, k = 0..count-1.
struct Grid {
  double x0 = 0.0;
  double dx = 1.0;
  std::size_t count = 0;

  double point(std::size_t k) const { return x0 + dx * static_cast<double>(k); }
  double back() const { return point(count - 1); }

  /// Grid of `count` samples with spacing 2*halfwidth/count, placed so that
  /// x0 = -floor(count/2)*dx.  For even counts this covers [-halfwidth,
  /// halfwidth).  Centered grids are the fixed point of the transform pair:
  /// inv_fourier(fourier(f)) reproduces f exactly only on such grids.
  static Grid centered(double halfwidth, std::size_t count);

  /// Conjugate (frequency) grid: spacing 2*pi/(count*dx), centered, so the
  /// frequencies span [-pi/dx, pi/dx).
  Grid conjugate() const;

  bool is_centered(double rel_tol = 1e-9) const;
  bool matches(const Grid& other, double rel_tol = 1e-9) const;
};

struct SampledSignal {
  Grid grid;
  std::vector<cplx> samples;

  SampledSignal() = default;
  explicit SampledSignal(const Grid& g) : grid(g), samples(g.count, cplx{}) {}
  SampledSignal(const Grid& g, std::vector<cplx> s);

  std::size_t size() const { return samples.size(); }

  double norm_sq() const;  // Sum |f_k|^2 dx
  double norm() const;
};

/// <f,g> = Sum conj(f_k) g_k dx.  Skew-linear in f, linear in g.
/// Throws std::invalid_argument on grid mismatch.
cplx inner_product(const SampledSignal& f, const SampledSignal& g);

/// Sum |f_k|^2 e^{eps x_k} dx; equals norm_sq() at eps = 0.
double weighted_norm_sq(const SampledSignal& f, double eps);

/// Unitary forward transform onto the conjugate grid.
SampledSignal fourier(const SampledSignal& f);

/// Unitary inverse transform.  Output grid is centered with spacing
/// 2*pi/(count*dw); exact inverse of fourier() for centered input grids.
SampledSignal inv_fourier(const SampledSignal& f);

/// Samples of the trigonometric interpolant of f at x_k + shift.
/// Exactly norm-preserving on the grid.
SampledSignal fractional_shift(const SampledSignal& f, double shift);

/// F(f) evaluated at arbitrary frequencies by direct quadrature:
/// (dx/sqrt(2 pi)) Sum_k f_k e^{-i w x_k}.
std::vector<cplx> fourier_at(const SampledSignal& f, std::span<const double> freqs);

/// Trigonometric interpolant of the samples evaluated at arbitrary points.
std::vector<cplx> interp_at(const SampledSignal& f, std::span<const double> points);
cplx interp_at(const SampledSignal& f, double point);

/// Composite Simpson rule over uniformly spaced values (3/8 rule on the tail
/// when the interval count is odd).  Used where left-endpoint sums are too
/// coarse, e.g. the half-line isometry checks.
double simpson(std::span<const double> values, double dx);

}  // namespace framelab
