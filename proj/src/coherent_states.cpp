#include "framelab/coherent_states.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "framelab/parallel.hpp"

namespace framelab {

namespace {

void check_psi(const SampledSignal& psi) {
  if (psi.norm_sq() <= 0.0)
    throw std::invalid_argument("coherent state: fiducial psi must be nonzero");
}

HeisenbergElement section_element(const PhasePoint& pt) {
  return {pt.q, pt.q * pt.p / 2.0, pt.p};
}

}  // namespace

SampledSignal coherent_state_heis(const HeisRepParams& p, const PhasePoint& pt,
                                  const SampledSignal& psi) {
  check_psi(psi);
  return heis_rep_apply(p, section_element(pt), psi);
}

SampledSignal coherent_state_eps(const ContractionSchedule& sched, double eps,
                                 const PhasePoint& pt, const SampledSignal& psi) {
  check_psi(psi);
  return ea_rep_apply(sched.rep_params(eps),
                      to_extended_affine(eps, section_element(pt)), psi);
}

double admissibility_heis(const HeisRepParams& p, const SampledSignal& psi) {
  if (p.A == 0.0) throw std::invalid_argument("admissibility_heis: A must be nonzero");
  const double n2 = psi.norm_sq();
  return kTwoPi * n2 * n2 / std::abs(p.A);
}

double admissibility_eps(const ContractionSchedule& sched, double eps,
                         const SampledSignal& psi) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("admissibility_eps: eps must lie in (0, 1]");
  const double denom = sched.A - sched.b0 * eps;
  if (denom == 0.0)
    throw std::invalid_argument("admissibility_eps: singular parameters, A - b0*eps = 0");
  return kTwoPi / std::abs(denom) * psi.norm_sq() * weighted_norm_sq(psi, eps);
}

double admissibility_eps_quadrature(const ContractionSchedule& sched, double eps,
                                    double support_halfwidth, std::size_t steps,
                                    const std::function<double(double)>& eval) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("admissibility_eps_quadrature: eps must lie in (0, 1]");
  const double denom = sched.A - sched.b0 * eps;
  if (denom == 0.0)
    throw std::invalid_argument("admissibility_eps_quadrature: singular parameters");
  const double h = 2.0 * support_halfwidth / static_cast<double>(steps);

  std::vector<double> sq(steps), node(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    node[i] = -support_halfwidth + (static_cast<double>(i) + 0.5) * h;
    const double v = eval(node[i]);
    sq[i] = v * v;
  }

  double acc = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < steps; ++j) row += sq[j] * std::exp(eps * node[j]);
    acc += sq[i] * row;
  }
  return kTwoPi / std::abs(denom) * acc * h * h;
}

double phase_space_weight(double eps, double q) {
  const double u = eps * q;
  if (std::abs(u) < 1e-8) return 1.0 + u / 2.0 + u * u / 6.0;
  return std::expm1(u) / u;
}

double resolution_identity_residual(ResolutionKind kind,
                                    const ContractionSchedule& sched, double eps,
                                    const SampledSignal& psi,
                                    const SampledSignal& f, const SampledSignal& g,
                                    const ResolutionWindow& window) {
  check_psi(psi);
  const HeisRepParams heis{sched.A, sched.B};
  const double C = kind == ResolutionKind::heisenberg
                       ? admissibility_heis(heis, psi)
                       : admissibility_eps(sched, eps, psi);

  const double hq = 2.0 * window.Q / static_cast<double>(window.nq);
  const double hp = 2.0 * window.P / static_cast<double>(window.np);

  // Midpoint rule; one task per q column, reduced in index order so the
  // result does not depend on the thread count.
  std::vector<cplx> column(window.nq, cplx{});
  parallel_for(window.nq, [&](std::size_t i) {
    const double q = -window.Q + (static_cast<double>(i) + 0.5) * hq;
    const double mu =
        kind == ResolutionKind::heisenberg ? 1.0 : phase_space_weight(eps, q);
    cplx acc{};
    for (std::size_t j = 0; j < window.np; ++j) {
      const double p = -window.P + (static_cast<double>(j) + 0.5) * hp;
      const SampledSignal cs =
          kind == ResolutionKind::heisenberg
              ? coherent_state_heis(heis, {q, p}, psi)
              : coherent_state_eps(sched, eps, {q, p}, psi);
      acc += inner_product(f, cs) * inner_product(cs, g);
    }
    column[i] = acc * mu;
  });

  cplx integral{};
  for (const cplx& c : column) integral += c;
  integral *= hq * hp * psi.norm_sq() / C;

  return std::abs(inner_product(f, g) - integral);
}

}  // namespace framelab
