#include "framelab/representations.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace framelab {

namespace {

constexpr double kHardyWarnFraction = 1e-2;

void check_eps(double eps) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("representation: eps must lie in (0, 1]");
}

void require_centered(const SampledSignal& f, const char* who) {
  if (!f.grid.is_centered())
    throw std::invalid_argument(std::string(who) + ": signal grid must be centered");
}

double spectral_neg_fraction(const SampledSignal& spectrum) {
  double neg = 0.0, total = 0.0;
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    const double e = std::norm(spectrum.samples[j]);
    total += e;
    if (spectrum.grid.point(j) <= 0.0) neg += e;
  }
  return total > 0.0 ? neg / total : 0.0;
}

void fill_diag(HardyDiagnostics* diag, double fraction) {
  if (!diag) return;
  diag->neg_energy_fraction = fraction;
  diag->warning = fraction > kHardyWarnFraction;
}

}  // namespace

SampledSignal heis_rep_apply(const HeisRepParams& p, const HeisenbergElement& g,
                             const SampledSignal& f) {
  if (p.A == 0.0) throw std::invalid_argument("heis_rep_apply: A must be nonzero");
  SampledSignal out = fractional_shift(f, g.c);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double x = out.grid.point(k);
    out.samples[k] *= std::polar(1.0, p.A * (g.v1 + x * g.v2) + p.B * g.v2);
  }
  return out;
}

SampledSignal ea_rep_apply(const EARepParams& p, const EAElement& g,
                           const SampledSignal& f) {
  check_eps(p.eps);
  if (p.b == 0.0) throw std::invalid_argument("ea_rep_apply: b must be nonzero");
  if (!(g.alpha > 0.0)) throw std::invalid_argument("ea_rep_apply: alpha must be > 0");
  const double shift = -std::log(g.alpha) / p.eps;
  SampledSignal out = fractional_shift(f, shift);
  const double base = p.a * g.gamma;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double x = out.grid.point(k);
    out.samples[k] *= std::polar(1.0, base + p.b * g.beta * std::exp(-p.eps * x));
  }
  return out;
}

SampledSignal ea_rep_hardy_apply(const EARepParams& p, const EAElement& g,
                                 const SampledSignal& f, HardyDiagnostics* diag) {
  check_eps(p.eps);
  if (!(g.alpha > 0.0))
    throw std::invalid_argument("ea_rep_hardy_apply: alpha must be > 0");
  require_centered(f, "ea_rep_hardy_apply");

  const Grid wgrid = f.grid.conjugate();
  if (diag) fill_diag(diag, spectral_neg_fraction(fourier(f)));

  const double dilation = std::exp(std::log(g.alpha) / p.eps);  // alpha^{1/eps}
  const double w_lo = wgrid.x0;
  const double w_hi = wgrid.x0 + wgrid.dx * static_cast<double>(wgrid.count);

  // Dilated spectrum F(f)(alpha^{1/eps} w) at the positive grid frequencies,
  // by direct quadrature of the transform integral.
  std::vector<std::size_t> idx;
  std::vector<double> pts;
  idx.reserve(wgrid.count / 2);
  pts.reserve(wgrid.count / 2);
  for (std::size_t j = 0; j < wgrid.count; ++j) {
    const double w = wgrid.point(j);
    if (w <= 0.0) continue;
    const double s = dilation * w;
    if (s < w_lo || s >= w_hi) continue;  // out of range reads as zero
    idx.push_back(j);
    pts.push_back(s);
  }
  const std::vector<cplx> vals = fourier_at(f, pts);

  SampledSignal spec(wgrid);
  const double bbeta = p.b * g.beta;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const double w = wgrid.point(idx[i]);
    spec.samples[idx[i]] = vals[i] * std::polar(1.0, bbeta * std::pow(w, p.eps));
  }

  SampledSignal out = inv_fourier(spec);
  const cplx scale =
      std::polar(std::exp(std::log(g.alpha) / (2.0 * p.eps)), p.a * g.gamma);
  for (auto& v : out.samples) v *= scale;
  return out;
}

SampledSignal halfline_pullback(double eps, const SampledSignal& line) {
  check_eps(eps);
  return line;
}

PullbackNorms halfline_pullback_norms(double eps, const SampledSignal& line,
                                      const SampledSignal& halfline) {
  check_eps(eps);
  std::vector<double> a(line.size());
  for (std::size_t k = 0; k < line.size(); ++k) a[k] = std::norm(line.samples[k]);

  std::vector<double> b(halfline.size());
  for (std::size_t k = 0; k < halfline.size(); ++k) {
    const double y = halfline.grid.point(k);
    if (!(y > 0.0))
      throw std::invalid_argument("halfline_pullback_norms: halfline grid must be positive");
    b[k] = std::norm(halfline.samples[k]) / y;
  }

  return {eps * simpson(a, line.grid.dx), simpson(b, halfline.grid.dx)};
}

SampledSignal hardy_intertwiner(const SampledSignal& f) {
  require_centered(f, "hardy_intertwiner");
  const Grid wgrid = f.grid.conjugate();
  const double x_lo = f.grid.x0;
  const double x_hi = f.grid.x0 + f.grid.dx * static_cast<double>(f.grid.count);

  // -log w must land inside the sampled window; elsewhere f reads as zero
  // (the interpolant is periodic and would otherwise wrap around).
  std::vector<std::size_t> idx;
  std::vector<double> pts;
  for (std::size_t j = 0; j < wgrid.count; ++j) {
    const double w = wgrid.point(j);
    if (w <= 0.0) continue;
    const double t = -std::log(w);
    if (t < x_lo || t >= x_hi) continue;
    idx.push_back(j);
    pts.push_back(t);
  }
  const std::vector<cplx> vals = interp_at(f, pts);

  SampledSignal spec(wgrid);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const double w = wgrid.point(idx[i]);
    spec.samples[idx[i]] = vals[i] / std::sqrt(w);
  }
  return inv_fourier(spec);
}

SampledSignal hardy_intertwiner_inv(const SampledSignal& f, HardyDiagnostics* diag) {
  require_centered(f, "hardy_intertwiner_inv");
  if (diag) fill_diag(diag, spectral_neg_fraction(fourier(f)));

  const Grid wgrid = f.grid.conjugate();
  const double w_hi = wgrid.x0 + wgrid.dx * static_cast<double>(wgrid.count);

  std::vector<std::size_t> idx;
  std::vector<double> pts;
  for (std::size_t k = 0; k < f.grid.count; ++k) {
    const double w = std::exp(-f.grid.point(k));
    if (w >= w_hi) continue;  // beyond the resolvable band
    idx.push_back(k);
    pts.push_back(w);
  }
  const std::vector<cplx> vals = fourier_at(f, pts);

  SampledSignal out(f.grid);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const double x = f.grid.point(idx[i]);
    out.samples[idx[i]] = std::exp(-x / 2.0) * vals[i];
  }
  return out;
}

SampledSignal heis_rep_hardy_apply(const HeisRepParams& p,
                                   const HeisenbergElement& g,
                                   const SampledSignal& f, HardyDiagnostics* diag) {
  return hardy_intertwiner(heis_rep_apply(p, g, hardy_intertwiner_inv(f, diag)));
}

double heis_rep_hardy_closed_form_gap(const HeisRepParams& p,
                                      const HeisenbergElement& g,
                                      const SampledSignal& f) {
  const SampledSignal chain = heis_rep_hardy_apply(p, g, f);
  const double x_lo = f.grid.x0;
  const double x_hi = f.grid.x0 + f.grid.dx * static_cast<double>(f.grid.count);

  std::vector<std::size_t> idx;
  std::vector<double> pts;
  for (std::size_t k = 0; k < f.grid.count; ++k) {
    const double arg = g.c + std::exp(p.A * g.v2 - f.grid.point(k));
    if (!(arg > 0.0)) continue;
    const double t = -std::log(arg);
    if (t < x_lo || t >= x_hi) continue;
    idx.push_back(k);
    pts.push_back(t);
  }
  const std::vector<cplx> vals = interp_at(f, pts);
  const cplx phase = std::polar(1.0, p.A * g.v2 + p.B * g.v1);

  double acc = 0.0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const cplx closed = phase * vals[i];
    acc += std::norm(chain.samples[idx[i]] - closed);
  }
  const double den = f.norm();
  return den > 0.0 ? std::sqrt(acc * f.grid.dx) / den : 0.0;
}

double contraction_residual(const ContractionSchedule& sched, double eps,
                            const HeisenbergElement& g, const SampledSignal& f) {
  check_eps(eps);
  if (std::abs(sched.a0 + sched.b0 - sched.B) > 1e-12)
    throw std::invalid_argument("contraction_residual: schedule requires a0 + b0 = B");
  const SampledSignal lhs =
      ea_rep_apply(sched.rep_params(eps), to_extended_affine(eps, g), f);
  const SampledSignal rhs = heis_rep_apply({sched.A, sched.B}, g, f);
  double acc = 0.0;
  for (std::size_t k = 0; k < lhs.size(); ++k)
    acc += std::norm(lhs.samples[k] - rhs.samples[k]);
  const double den = f.norm();
  return den > 0.0 ? std::sqrt(acc * f.grid.dx) / den : 0.0;
}

}  // namespace framelab
