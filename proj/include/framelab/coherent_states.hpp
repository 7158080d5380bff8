// Coherent-state families over phase space, admissibility constants, and
// resolution-of-identity quadrature residuals for the Heisenberg
// representations and the eps-interpolating family.

#pragma once

#include <cstddef>
#include <functional>

#include "framelab/representations.hpp"

namespace framelab {

/// Point (q, p) on the phase plane; the section is fixed to z = q p / 2.
struct PhasePoint {
  double q = 0.0;
  double p = 0.0;
};

/// |psi_(q,p)> = eta^{A,B}(q, (q p/2, p)) psi.
SampledSignal coherent_state_heis(const HeisRepParams& p, const PhasePoint& pt,
                                  const SampledSignal& psi);

/// The interpolating family: rho_eps^{a(eps),b(eps)} at the chart image of
/// (q, (q p/2, p)).
SampledSignal coherent_state_eps(const ContractionSchedule& sched, double eps,
                                 const PhasePoint& pt, const SampledSignal& psi);

/// C_{psi, eta^{A,B}} = 2 pi |psi|^4 / |A|.
double admissibility_heis(const HeisRepParams& p, const SampledSignal& psi);

/// C_{psi, rho~_eps} = (2 pi / |A - b0 eps|) |psi|^2 |psi|^2_{e^{eps x} dx};
/// converges to admissibility_heis as eps -> 0+.
double admissibility_eps(const ContractionSchedule& sched, double eps,
                         const SampledSignal& psi);

/// The same constant by 2-d midpoint quadrature of the defining double
/// integral 2 pi Int Int |psi(x)|^2 |psi(s)|^2 e^{eps s} / |A - b0 eps| dx ds,
/// with psi evaluated through `eval` on an independent lattice.
double admissibility_eps_quadrature(const ContractionSchedule& sched, double eps,
                                    double support_halfwidth, std::size_t steps,
                                    const std::function<double(double)>& eval);

/// Phase-space measure density (e^{eps q} - 1)/(eps q), value 1 at q = 0 and
/// for eps = 0.
double phase_space_weight(double eps, double q);

enum class ResolutionKind { heisenberg, eps_family };

struct ResolutionWindow {
  double Q = 6.0;
  double P = 6.0;
  std::size_t nq = 64;
  std::size_t np = 64;
};

/// | <f|g> - (|psi|^2 / C) Int <f|cs(q,p)> <cs(q,p)|g> mu(q) dq dp | with a
/// tensor midpoint rule on [-Q,Q] x [-P,P].  eps is ignored for the
/// Heisenberg kind.
double resolution_identity_residual(ResolutionKind kind,
                                    const ContractionSchedule& sched, double eps,
                                    const SampledSignal& psi,
                                    const SampledSignal& f, const SampledSignal& g,
                                    const ResolutionWindow& window);

}  // namespace framelab
