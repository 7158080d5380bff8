#include "framelab/frames.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "framelab/parallel.hpp"

namespace framelab {

namespace {

// C-infinity ramp with nu(t) + nu(1 - t) = 1 and flat endpoints.  Flatness
// makes the wavelet infinitely smooth across the seams, so its spectrum
// decays fast enough for the log-frequency constructions at grid scale; a
// polynomial ramp is only C^1 and stalls those at ~1e-4.
double ramp(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

// log(alpha_n)/(alpha_n - 1) expressed in u = eps n q0, i.e. u/(1 - e^{-u}),
// continued by 1 at u = 0.
double gamma_ratio(double u) {
  if (std::abs(u) < 1e-8) return 1.0 + u / 2.0 + u * u / 12.0;
  return u / (-std::expm1(-u));
}

void check_consistent(const FrameConfig& cfg, const MotherWavelet& mw) {
  if (std::abs(cfg.L - mw.L) > 1e-9 || std::abs(cfg.q0 - mw.q0) > 1e-9 ||
      std::abs(cfg.chi - mw.chi) > 1e-9)
    throw std::invalid_argument("frames: config and mother wavelet disagree on (L, q0, chi)");
}

void require_even_centered(const Grid& grid, const char* who) {
  if (grid.count % 2 != 0 || !grid.is_centered())
    throw std::invalid_argument(std::string(who) + ": grid must be centered with even count");
}

double grid_halfwidth(const Grid& grid) {
  return grid.dx * static_cast<double>(grid.count) / 2.0;
}

std::size_t padded_count(const Grid& grid, double reach, double spread) {
  const double half = grid_halfwidth(grid);
  const double needed = half + reach + spread;
  std::size_t factor = 1;
  while (factor < 64 && half * static_cast<double>(factor) < needed) factor *= 2;
  return grid.count * factor;
}

SampledSignal restrict_to(const SampledSignal& padded, const Grid& grid) {
  if (padded.grid.count == grid.count) return padded;
  const std::size_t offset = (padded.grid.count - grid.count) / 2;
  SampledSignal out(grid);
  for (std::size_t k = 0; k < grid.count; ++k)
    out.samples[k] = padded.samples[offset + k];
  return out;
}

}  // namespace

void FrameConfig::validate() const {
  if (A == 0.0) throw std::invalid_argument("FrameConfig: A must be nonzero");
  if (!(L > 0.0)) throw std::invalid_argument("FrameConfig: L must be positive");
  if (q0 == 0.0) throw std::invalid_argument("FrameConfig: q0 must be nonzero");
  if (!(chi > 0.0)) throw std::invalid_argument("FrameConfig: chi must be positive");
  if (std::abs(a0 + b0 - B) > 1e-12 * std::max(1.0, std::abs(B)))
    throw std::invalid_argument("FrameConfig: schedule requires a0 + b0 = B");
  if (!(std::abs(q0) < 2.0 * std::abs(A) * L))
    throw std::invalid_argument("FrameConfig: lattice requires |q0| < 2|A|L");
  if (eps < 0.0 || eps > 1.0)
    throw std::invalid_argument("FrameConfig: eps must lie in [0, 1]");
  if (eps > 0.0 && std::abs(A - b0 * eps) <= 1e-12 * std::max(1.0, std::abs(A)))
    throw std::invalid_argument("FrameConfig: singular eps, b(eps) = 0 at eps = A/b0");
}

double MotherWavelet::eval(double x) const {
  if (x <= -q0 || x >= q0) return 0.0;
  const double root = std::sqrt(chi);
  if (x < 0.0) return root * std::sin(kPi / 2.0 * ramp((x + q0) / q0));
  return root * std::cos(kPi / 2.0 * ramp(x / q0));
}

double MotherWavelet::partition_deviation() const {
  // Two translates cover every point of [-q0, 0); scanning one period
  // suffices since the sampled psi is exactly q0-periodic in the sum.
  const long step = std::lround(q0 / psi.grid.dx);
  double worst = 0.0;
  for (long k = 0; k < step; ++k) {
    const double x = -q0 + static_cast<double>(k) * psi.grid.dx;
    double acc = 0.0;
    for (long n = -1; n <= 1; ++n) {
      const double v = eval(x + static_cast<double>(n) * q0);
      acc += v * v;
    }
    worst = std::max(worst, std::abs(acc - chi));
  }
  return worst;
}

MotherWavelet build_mother_wavelet(double L, double q0, double chi, const Grid& grid) {
  if (!(L > 0.0)) throw std::invalid_argument("build_mother_wavelet: L must be positive");
  if (!(q0 > 0.0)) throw std::invalid_argument("build_mother_wavelet: q0 must be positive");
  if (q0 > L)
    throw std::invalid_argument(
        "build_mother_wavelet: unsupported construction, q0 > L needs more than "
        "two overlapping translates");
  if (!(chi > 0.0)) throw std::invalid_argument("build_mother_wavelet: chi must be positive");

  const double steps = q0 / grid.dx;
  if (std::abs(steps - std::round(steps)) > 1e-9 * steps)
    throw std::invalid_argument("build_mother_wavelet: q0 must be an integer number of grid steps");
  if (grid.x0 > -q0 || grid.back() < q0)
    throw std::invalid_argument("build_mother_wavelet: grid does not cover [-q0, q0]");

  MotherWavelet mw{SampledSignal(grid), L, q0, chi};
  for (std::size_t k = 0; k < grid.count; ++k)
    mw.psi.samples[k] = mw.eval(grid.point(k));
  return mw;
}

EAElement lattice_element(const FrameConfig& cfg, const AtomIndex& idx) {
  cfg.validate();
  if (cfg.eps == 0.0)
    throw std::invalid_argument("lattice_element: eps = 0 uses the Gabor branch, not the lattice");
  const LatticePhases ph = lattice_phases(cfg, idx);
  const double u = cfg.eps * static_cast<double>(idx.n) * cfg.q0;
  const double beta = ph.b_beta * cfg.eps / (cfg.b0 * cfg.eps - cfg.A);
  return {std::exp(-u), beta, beta * gamma_ratio(u)};
}

LatticePhases lattice_phases(const FrameConfig& cfg, const AtomIndex& idx) {
  if (cfg.eps == 0.0)
    throw std::invalid_argument("lattice_phases: eps = 0 uses the Gabor branch");
  const double u = cfg.eps * static_cast<double>(idx.n) * cfg.q0;
  const double b_beta = -std::exp(-u) * kPi * static_cast<double>(idx.m) /
                        std::sinh(cfg.eps * cfg.L);
  // a(eps)/b(eps) = (a0 eps + A)/(b0 eps - A); the product stays finite as
  // eps -> 0 even though a, b and gamma separately do not.
  const double a_gamma = b_beta * (cfg.a0 * cfg.eps + cfg.A) /
                         (cfg.b0 * cfg.eps - cfg.A) * gamma_ratio(u);
  return {b_beta, a_gamma};
}

const char* lattice_gamma_convention_note() {
  return "gamma_mn = beta_mn * log(alpha_n)/(alpha_n - 1) = beta_mn * u/(1 - e^{-u}), "
         "u = eps*n*q0.  The variant with e^{-u} - 1 in the denominator (opposite "
         "sign) breaks the tight-frame identity and the Gabor limit; it is treated "
         "as an erratum and not implemented.";
}

SampledSignal time_atom(const FrameConfig& cfg, const MotherWavelet& mw,
                        const AtomIndex& idx, const Grid& grid) {
  cfg.validate();
  check_consistent(cfg, mw);
  const double shift = static_cast<double>(idx.n) * cfg.q0;
  SampledSignal out(grid);

  if (cfg.eps == 0.0) {
    const double md = static_cast<double>(idx.m);
    const double theta0 =
        cfg.A * md * static_cast<double>(idx.n) * cfg.q0 * cfg.p0() / 2.0 +
        cfg.B * md * cfg.p0();
    const double omega = cfg.A * cfg.p0() * md;
    for (std::size_t k = 0; k < grid.count; ++k) {
      const double x = grid.point(k);
      const double env = mw.eval(x + shift);
      if (env != 0.0) out.samples[k] = std::polar(env, theta0 + omega * x);
    }
    return out;
  }

  const LatticePhases ph = lattice_phases(cfg, idx);
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double x = grid.point(k);
    const double env = mw.eval(x + shift) * std::exp(-cfg.eps / 2.0 * (x + shift));
    if (env != 0.0)
      out.samples[k] =
          std::polar(env, ph.a_gamma + ph.b_beta * std::exp(-cfg.eps * x));
  }
  return out;
}

SampledSignal freq_atom(const FrameConfig& cfg, const MotherWavelet& mw,
                        const AtomIndex& idx, const Grid& grid) {
  cfg.validate();
  check_consistent(cfg, mw);
  require_even_centered(grid, "freq_atom");

  const double nd = static_cast<double>(idx.n);
  const double md = static_cast<double>(idx.m);
  const double shift = nd * cfg.q0;
  // Spectral support: psi(shift - log w) != 0 iff w in e^{shift} [e^{-S}, e^{S}].
  const double support = mw.q0;
  const double w_min = std::exp(shift - support);
  const double w_max = std::exp(shift + support);
  if (w_max >= kPi / grid.dx)
    throw std::invalid_argument("freq_atom: grid cannot resolve the atom spectrum (raise count or shrink dx)");

  double reach;  // maximum group delay of the modulation phase
  double b_beta = 0.0, a_gamma = 0.0, theta0 = 0.0;
  if (cfg.eps == 0.0) {
    theta0 = cfg.A * nd * cfg.q0 * md * cfg.p0() / 2.0 + cfg.B * md * cfg.p0();
    reach = std::abs(cfg.A * cfg.p0() * md) / w_min;
  } else {
    const LatticePhases ph = lattice_phases(cfg, idx);
    b_beta = ph.b_beta;
    a_gamma = ph.a_gamma;
    reach = std::abs(b_beta) * cfg.eps * std::pow(w_min, cfg.eps - 1.0);
  }
  const double spread = 16.0 / w_min;

  const Grid padded{0.0, grid.dx, padded_count(grid, reach, spread)};
  const Grid pgrid{-padded.dx * static_cast<double>(padded.count / 2), padded.dx,
                   padded.count};
  const Grid wgrid = pgrid.conjugate();

  SampledSignal spec(wgrid);
  const std::size_t j_lo = static_cast<std::size_t>(
      std::max(0.0, std::ceil((w_min - wgrid.x0) / wgrid.dx)));
  for (std::size_t j = j_lo; j < wgrid.count; ++j) {
    const double w = wgrid.point(j);
    if (w <= 0.0) continue;
    if (w > w_max) break;
    if (cfg.eps == 0.0) {
      const double env = mw.eval(shift - std::log(w)) / std::sqrt(w);
      if (env != 0.0)
        spec.samples[j] = std::polar(env, -cfg.A * cfg.p0() * md * std::log(w));
    } else {
      const double y = std::exp(-shift) * w;
      const double env =
          mw.eval(-std::log(y)) * std::pow(y, (cfg.eps - 1.0) / 2.0);
      if (env != 0.0)
        spec.samples[j] = std::polar(env, b_beta * std::pow(w, cfg.eps));
    }
  }

  SampledSignal atom = restrict_to(inv_fourier(spec), grid);
  const cplx scale = cfg.eps == 0.0
                         ? std::polar(1.0, theta0)
                         : std::polar(std::exp(-shift / 2.0), a_gamma);
  for (auto& v : atom.samples) v *= scale;
  return atom;
}

SampledSignal frame_atom(const FrameConfig& cfg, const MotherWavelet& mw,
                         FrameKind kind, const AtomIndex& idx, const Grid& grid) {
  return kind == FrameKind::time ? time_atom(cfg, mw, idx, grid)
                                 : freq_atom(cfg, mw, idx, grid);
}

double frame_constant(const FrameConfig& cfg) {
  cfg.validate();
  if (cfg.eps == 0.0) return 2.0 * cfg.chi * cfg.L;
  return 2.0 * cfg.chi * std::sinh(cfg.eps * cfg.L) / cfg.eps;
}

std::size_t IndexWindow::size() const {
  if (n1 > n2 || m1 > m2)
    throw std::invalid_argument("IndexWindow: requires n1 <= n2 and m1 <= m2");
  return static_cast<std::size_t>(n_count()) * static_cast<std::size_t>(m_count());
}

cplx& CoefficientTable::at(long n, long m) {
  return const_cast<cplx&>(static_cast<const CoefficientTable&>(*this).at(n, m));
}

const cplx& CoefficientTable::at(long n, long m) const {
  if (n < window.n1 || n > window.n2 || m < window.m1 || m > window.m2)
    throw std::out_of_range("CoefficientTable: index outside window");
  const std::size_t i = static_cast<std::size_t>(n - window.n1) *
                            static_cast<std::size_t>(window.m_count()) +
                        static_cast<std::size_t>(m - window.m1);
  return entries[i];
}

namespace {

// Essential support [xa, xb] of |f| at a 1e-6 relative floor (loose enough
// to ignore quadrature-level tails of computed signals; the discarded mass
// is far below the 1e-8 coefficient-energy rule).
bool essential_support(const SampledSignal& f, double* xa, double* xb) {
  double peak = 0.0;
  for (const auto& v : f.samples) peak = std::max(peak, std::abs(v));
  if (peak <= 0.0) return false;
  const double floor = 1e-6 * peak;
  std::size_t lo = 0, hi = f.size() - 1;
  while (lo < f.size() && std::abs(f.samples[lo]) < floor) ++lo;
  while (hi > lo && std::abs(f.samples[hi]) < floor) --hi;
  *xa = f.grid.point(lo);
  *xb = f.grid.point(hi);
  return true;
}

// Largest |m| whose time atom the grid still resolves: the chirp's
// instantaneous frequency is bounded by pi m eps e^{eps L}/sinh(eps L) over
// the support (pi m / L at eps = 0).
long alias_cap(const FrameConfig& cfg, const Grid& grid) {
  const double budget = 0.85 * kPi / grid.dx;
  const double per_m = cfg.eps == 0.0
                           ? kPi / cfg.L
                           : kPi * cfg.eps * std::exp(cfg.eps * cfg.L) /
                                 std::sinh(cfg.eps * cfg.L);
  return std::max(8L, static_cast<long>(budget / per_m));
}

// Scan |m| outward until twelve consecutive levels carry less than 1e-8 of
// the running coefficient energy; the levels are Fourier coefficients of the
// windowed product, but their mass can sit away from m = 0, so a short quiet
// run is not trusted.
long scan_m(const FrameConfig& cfg, const MotherWavelet& mw, FrameKind kind,
            const SampledSignal& f, long n, long cap) {
  double total = 0.0;
  int quiet = 0;
  for (long m = 0; m <= cap; ++m) {
    double level =
        std::norm(inner_product(frame_atom(cfg, mw, kind, {n, m}, f.grid), f));
    if (m > 0)
      level +=
          std::norm(inner_product(frame_atom(cfg, mw, kind, {n, -m}, f.grid), f));
    total += level;
    if (total > 0.0 && level < 1e-8 * total) {
      if (++quiet >= 12) return m;
    } else {
      quiet = 0;
    }
  }
  return cap;
}

}  // namespace

IndexWindow default_window(const FrameConfig& cfg, const MotherWavelet& mw,
                           FrameKind kind, const SampledSignal& f) {
  cfg.validate();
  check_consistent(cfg, mw);

  long n1 = 0, n2 = 0, cap = 0;
  if (kind == FrameKind::time) {
    double xa = 0.0, xb = 0.0;
    if (!essential_support(f, &xa, &xb)) return {0, 0, 0, 0};
    n1 = static_cast<long>(std::ceil((-mw.q0 - xb) / cfg.q0));
    n2 = static_cast<long>(std::floor((mw.q0 - xa) / cfg.q0));
    cap = alias_cap(cfg, f.grid);
  } else {
    // translates act on the log-frequency axis: the n-range comes from the
    // pullback, clamped to what the grid can resolve spectrally
    const SampledSignal g = hardy_intertwiner_inv(f);
    double ua = 0.0, ub = 0.0;
    if (!essential_support(g, &ua, &ub)) return {0, 0, 0, 0};
    n1 = static_cast<long>(std::ceil((-mw.q0 - ub) / cfg.q0));
    n2 = static_cast<long>(std::floor((mw.q0 - ua) / cfg.q0));
    const double dw = kTwoPi / (f.grid.dx * static_cast<double>(f.grid.count));
    const long n_hi = static_cast<long>(
        std::floor((std::log(0.95 * kPi / f.grid.dx) - mw.q0) / cfg.q0));
    const long n_lo = static_cast<long>(
        std::ceil((std::log(4.0 * dw) + mw.q0) / cfg.q0));
    n1 = std::max(n1, n_lo);
    n2 = std::min(n2, n_hi);
    if (n1 > n2) return {0, 0, 0, 0};
    // frequency atoms are built on padded grids and do not alias in m
    cap = 1024;
  }

  long M = 0;
  for (long n = std::min(n1, n2); n <= std::max(n1, n2); ++n)
    M = std::max(M, scan_m(cfg, mw, kind, f, n, cap));
  return {std::min(n1, n2), std::max(n1, n2), -M, M};
}

std::vector<SampledSignal> build_atoms(const FrameConfig& cfg,
                                       const MotherWavelet& mw, FrameKind kind,
                                       const IndexWindow& window, const Grid& grid) {
  const std::size_t total = window.size();
  std::vector<SampledSignal> atoms(total);
  parallel_for(total, [&](std::size_t i) {
    const long n = window.n1 + static_cast<long>(i) / window.m_count();
    const long m = window.m1 + static_cast<long>(i) % window.m_count();
    atoms[i] = frame_atom(cfg, mw, kind, {n, m}, grid);
  });
  return atoms;
}

CoefficientTable analyze(const FrameConfig& cfg, const MotherWavelet& mw,
                         FrameKind kind, const SampledSignal& f,
                         const IndexWindow& window) {
  cfg.validate();
  check_consistent(cfg, mw);
  const std::vector<SampledSignal> atoms = build_atoms(cfg, mw, kind, window, f.grid);
  CoefficientTable table{window, kind, cfg.eps, std::vector<cplx>(window.size())};
  parallel_for(atoms.size(),
               [&](std::size_t i) { table.entries[i] = inner_product(atoms[i], f); });
  return table;
}

SampledSignal synthesize(const FrameConfig& cfg, const MotherWavelet& mw,
                         const CoefficientTable& table, const Grid& grid) {
  cfg.validate();
  check_consistent(cfg, mw);
  if (std::abs(table.eps - cfg.eps) > 1e-12)
    throw std::invalid_argument("synthesize: table eps does not match config");
  if (table.entries.size() != table.window.size())
    throw std::invalid_argument("synthesize: table entries do not fill the window");

  const std::vector<SampledSignal> atoms =
      build_atoms(cfg, mw, table.kind, table.window, grid);
  SampledSignal out(grid);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const cplx c = table.entries[i];
    for (std::size_t k = 0; k < grid.count; ++k)
      out.samples[k] += c * atoms[i].samples[k];
  }
  const double inv_const = 1.0 / frame_constant(cfg);
  for (auto& v : out.samples) v *= inv_const;
  return out;
}

double tightness_ratio(const FrameConfig& cfg, const MotherWavelet& mw,
                       FrameKind kind, const SampledSignal& f,
                       const IndexWindow& window) {
  const double n2 = f.norm_sq();
  if (n2 <= 0.0) throw std::invalid_argument("tightness_ratio: zero-norm input");
  const CoefficientTable table = analyze(cfg, mw, kind, f, window);
  double acc = 0.0;
  for (const cplx& c : table.entries) acc += std::norm(c);
  return acc / n2;
}

double freq_atom_closed_form_gap(const FrameConfig& cfg, const MotherWavelet& mw,
                                 const AtomIndex& idx, const Grid& grid) {
  FrameConfig cfg0 = cfg;
  cfg0.eps = 0.0;
  const SampledSignal chain = freq_atom(cfg0, mw, idx, grid);
  const SampledSignal base = freq_atom(cfg0, mw, {0, 0}, grid);  // psi~ = I psi

  const double md = static_cast<double>(idx.m);
  const double nd = static_cast<double>(idx.n);
  const double phase = cfg.A * md * cfg.p0() +
                       cfg.B * nd * cfg.q0 * md * cfg.p0() / 2.0;
  const double x_lo = grid.x0;
  const double x_hi = grid.x0 + grid.dx * static_cast<double>(grid.count);

  std::vector<std::size_t> valid;
  std::vector<double> pts;
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double arg =
        nd * cfg.q0 + std::exp(cfg.A * md * cfg.p0() - grid.point(k));
    if (!(arg > 0.0)) continue;
    const double t = -std::log(arg);
    if (t < x_lo || t >= x_hi) continue;
    valid.push_back(k);
    pts.push_back(t);
  }
  const std::vector<cplx> vals = interp_at(base, pts);

  double acc = 0.0;
  for (std::size_t i = 0; i < valid.size(); ++i) {
    const cplx closed = std::polar(1.0, phase) * vals[i];
    acc += std::norm(chain.samples[valid[i]] - closed);
  }
  const double den = base.norm();
  return den > 0.0 ? std::sqrt(acc * grid.dx) / den : 0.0;
}

std::vector<std::pair<double, double>> atom_contraction_report(
    const FrameConfig& cfg_base, const MotherWavelet& mw, FrameKind kind,
    const AtomIndex& idx, std::span<const double> eps_list, const Grid& grid) {
  FrameConfig cfg0 = cfg_base;
  cfg0.eps = 0.0;
  const SampledSignal base = frame_atom(cfg0, mw, kind, idx, grid);
  const double den = base.norm();
  if (den <= 0.0)
    throw std::invalid_argument("atom_contraction_report: base atom vanishes on the grid");

  std::vector<std::pair<double, double>> report;
  report.reserve(eps_list.size());
  for (double e : eps_list) {
    FrameConfig cfg = cfg_base;
    cfg.eps = e;
    const SampledSignal atom = frame_atom(cfg, mw, kind, idx, grid);
    double acc = 0.0;
    for (std::size_t k = 0; k < grid.count; ++k)
      acc += std::norm(atom.samples[k] - base.samples[k]);
    report.emplace_back(e, std::sqrt(acc * grid.dx) / den);
  }
  return report;
}

}  // namespace framelab
