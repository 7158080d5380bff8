#include "framelab/numerics.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace framelab {

namespace {

// FFTW planning is not thread-safe; executing a plan on fresh buffers is.
// Plans are created once per size/direction with FFTW_ESTIMATE|FFTW_UNALIGNED
// so they can run on any caller-provided buffer.
class PlanCache {
 public:
  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<cplx> scratch(n);
    fftw_plan p = fftw_plan_dft_1d(
        static_cast<int>(n), reinterpret_cast<fftw_complex*>(scratch.data()),
        reinterpret_cast<fftw_complex*>(scratch.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

void dft_inplace(std::vector<cplx>& data, int sign) {
  fftw_plan p = plan_cache().get(data.size(), sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data.data()),
                   reinterpret_cast<fftw_complex*>(data.data()));
}

// Signed frequency index for the [-pi/dx, pi/dx) centering; for even n the
// Nyquist bin maps to -n/2.
long signed_index(std::size_t j, std::size_t n) {
  return j >= (n + 1) / 2 ? static_cast<long>(j) - static_cast<long>(n)
                          : static_cast<long>(j);
}

void check_nonempty(const SampledSignal& f, const char* who) {
  if (f.samples.empty())
    throw std::invalid_argument(std::string(who) + ": empty signal");
}

}  // namespace

Grid Grid::centered(double halfwidth, std::size_t count) {
  if (count < 2) throw std::invalid_argument("Grid: count must be >= 2");
  if (!(halfwidth > 0.0)) throw std::invalid_argument("Grid: halfwidth must be > 0");
  const double dx = 2.0 * halfwidth / static_cast<double>(count);
  return Grid{-dx * static_cast<double>(count / 2), dx, count};
}

Grid Grid::conjugate() const {
  const double dw = kTwoPi / (dx * static_cast<double>(count));
  return Grid{-dw * static_cast<double>(count / 2), dw, count};
}

bool Grid::is_centered(double rel_tol) const {
  const double expected = -dx * static_cast<double>(count / 2);
  return std::abs(x0 - expected) <= rel_tol * dx * static_cast<double>(count);
}

bool Grid::matches(const Grid& other, double rel_tol) const {
  if (count != other.count) return false;
  const double scale = std::abs(dx) * static_cast<double>(count);
  return std::abs(dx - other.dx) <= rel_tol * std::abs(dx) &&
         std::abs(x0 - other.x0) <= rel_tol * scale;
}

SampledSignal::SampledSignal(const Grid& g, std::vector<cplx> s)
    : grid(g), samples(std::move(s)) {
  if (samples.size() != grid.count)
    throw std::invalid_argument("SampledSignal: sample count does not match grid");
}

double SampledSignal::norm_sq() const {
  double acc = 0.0;
  for (const cplx& v : samples) acc += std::norm(v);
  return acc * grid.dx;
}

double SampledSignal::norm() const { return std::sqrt(norm_sq()); }

cplx inner_product(const SampledSignal& f, const SampledSignal& g) {
  if (!f.grid.matches(g.grid))
    throw std::invalid_argument("inner_product: signals live on different grids");
  cplx acc{};
  for (std::size_t k = 0; k < f.samples.size(); ++k)
    acc += std::conj(f.samples[k]) * g.samples[k];
  return acc * f.grid.dx;
}

double weighted_norm_sq(const SampledSignal& f, double eps) {
  if (eps < 0.0) throw std::invalid_argument("weighted_norm_sq: eps must be >= 0");
  double acc = 0.0;
  for (std::size_t k = 0; k < f.samples.size(); ++k)
    acc += std::norm(f.samples[k]) * std::exp(eps * f.grid.point(k));
  return acc * f.grid.dx;
}

SampledSignal fourier(const SampledSignal& f) {
  check_nonempty(f, "fourier");
  const std::size_t n = f.size();
  const Grid wgrid = f.grid.conjugate();
  const std::size_t j0 = n / 2;

  std::vector<cplx> work(n);
  if (n % 2 == 0) {
    for (std::size_t k = 0; k < n; ++k)
      work[k] = (k % 2 == 0) ? f.samples[k] : -f.samples[k];
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      const double phase = kTwoPi * static_cast<double>(j0) *
                           static_cast<double>(k) / static_cast<double>(n);
      work[k] = f.samples[k] * std::polar(1.0, phase);
    }
  }
  dft_inplace(work, FFTW_FORWARD);

  const double scale = f.grid.dx / std::sqrt(kTwoPi);
  SampledSignal out(wgrid);
  for (std::size_t j = 0; j < n; ++j)
    out.samples[j] = scale * std::polar(1.0, -wgrid.point(j) * f.grid.x0) * work[j];
  return out;
}

SampledSignal inv_fourier(const SampledSignal& f) {
  check_nonempty(f, "inv_fourier");
  const std::size_t n = f.size();
  const Grid wgrid = f.grid;  // input lives on a frequency grid
  const double dx = kTwoPi / (wgrid.dx * static_cast<double>(n));
  const Grid xgrid{-dx * static_cast<double>(n / 2), dx, n};

  std::vector<cplx> work(n);
  if (n % 2 == 0) {
    for (std::size_t k = 0; k < n; ++k)
      work[k] = (k % 2 == 0) ? f.samples[k] : -f.samples[k];
  } else {
    for (std::size_t k = 0; k < n; ++k)
      work[k] = f.samples[k] * std::polar(1.0, xgrid.x0 * wgrid.dx * static_cast<double>(k));
  }
  dft_inplace(work, FFTW_BACKWARD);

  const double scale = wgrid.dx / std::sqrt(kTwoPi);
  SampledSignal out(xgrid);
  for (std::size_t j = 0; j < n; ++j)
    out.samples[j] = scale * std::polar(1.0, xgrid.point(j) * wgrid.x0) * work[j];
  return out;
}

SampledSignal fractional_shift(const SampledSignal& f, double shift) {
  check_nonempty(f, "fractional_shift");
  const std::size_t n = f.size();
  const double dw = kTwoPi / (f.grid.dx * static_cast<double>(n));

  std::vector<cplx> work(f.samples);
  dft_inplace(work, FFTW_FORWARD);
  for (std::size_t j = 0; j < n; ++j) {
    const double w = dw * static_cast<double>(signed_index(j, n));
    work[j] *= std::polar(1.0, w * shift);
  }
  dft_inplace(work, FFTW_BACKWARD);

  SampledSignal out(f.grid);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) out.samples[k] = work[k] * inv_n;
  return out;
}

std::vector<cplx> fourier_at(const SampledSignal& f, std::span<const double> freqs) {
  check_nonempty(f, "fourier_at");
  const std::size_t n = f.size();
  const double scale = f.grid.dx / std::sqrt(kTwoPi);
  std::vector<cplx> out(freqs.size());
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    const double w = freqs[j];
    const cplx step = std::polar(1.0, -w * f.grid.dx);
    cplx rot = std::polar(1.0, -w * f.grid.x0);
    cplx acc{};
    for (std::size_t k = 0; k < n; ++k) {
      acc += f.samples[k] * rot;
      rot *= step;
      if ((k & 1023u) == 1023u)
        rot = std::polar(1.0, -w * f.grid.point(k + 1));  // curb rounding drift
    }
    out[j] = acc * scale;
  }
  return out;
}

std::vector<cplx> interp_at(const SampledSignal& f, std::span<const double> points) {
  check_nonempty(f, "interp_at");
  const std::size_t n = f.size();
  const double dw = kTwoPi / (f.grid.dx * static_cast<double>(n));
  const long s0 = -static_cast<long>(n / 2);

  // DFT reordered to monotone frequencies s0..s0+n-1.
  std::vector<cplx> spec(f.samples);
  dft_inplace(spec, FFTW_FORWARD);
  std::vector<cplx> ordered(n);
  for (std::size_t j = 0; j < n; ++j) {
    const long s = signed_index(j, n);
    ordered[static_cast<std::size_t>(s - s0)] = spec[j];
  }

  std::vector<cplx> out(points.size());
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double t = points[i] - f.grid.x0;
    const cplx step = std::polar(1.0, dw * t);
    cplx rot = std::polar(1.0, dw * t * static_cast<double>(s0));
    cplx acc{};
    for (std::size_t j = 0; j < n; ++j) {
      acc += ordered[j] * rot;
      rot *= step;
      if ((j & 1023u) == 1023u)
        rot = std::polar(1.0, dw * t * static_cast<double>(s0 + static_cast<long>(j) + 1));
    }
    out[i] = acc * inv_n;
  }
  return out;
}

cplx interp_at(const SampledSignal& f, double point) {
  return interp_at(f, std::span<const double>(&point, 1))[0];
}

double simpson(std::span<const double> values, double dx) {
  const std::size_t n = values.size();
  if (n < 2) throw std::invalid_argument("simpson: need at least 2 values");
  if (n == 2) return 0.5 * dx * (values[0] + values[1]);

  const std::size_t intervals = n - 1;
  double acc = 0.0;
  std::size_t last = intervals;  // apply Simpson on [0, last]
  if (intervals % 2 != 0) {
    if (intervals < 3) return 0.5 * dx * (values[0] + values[1]);
    last = intervals - 3;  // leave 3 intervals for the 3/8 rule
  }
  for (std::size_t k = 0; k + 2 <= last; k += 2)
    acc += dx / 3.0 * (values[k] + 4.0 * values[k + 1] + values[k + 2]);
  if (intervals % 2 != 0) {
    const std::size_t b = last;
    acc += 3.0 * dx / 8.0 *
           (values[b] + 3.0 * values[b + 1] + 3.0 * values[b + 2] + values[b + 3]);
  }
  return acc;
}

}  // namespace framelab
