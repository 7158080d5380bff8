// Unitary representations on sampled signals: the Heisenberg representations
// on L^2(R), the extended-affine family in its line realization, the
// band-limited (Hardy-space) realization, the intertwiner between them, and
// the strong-contraction residual.

#pragma once

#include "framelab/groups.hpp"
#include "framelab/numerics.hpp"

namespace framelab {

/// Parameters of the Heisenberg representation
/// (f -> e^{i[A(v1 + x v2) + B v2]} f(c + x)), A != 0.
struct HeisRepParams {
  double A = 1.0;
  double B = 0.0;
};

/// Parameters of the extended-affine representation in the line realization
/// (f -> e^{i a gamma} e^{i b beta e^{-eps x}} f(x - log(alpha)/eps)).
struct EARepParams {
  double a = 0.0;
  double b = -1.0;
  double eps = 1.0;
};

/// Contraction schedule a(eps) = a0 + A/eps, b(eps) = b0 - A/eps with
/// a0 + b0 = B.
struct ContractionSchedule {
  double A = 1.0;
  double B = 0.0;
  double a0 = 0.0;
  double b0 = 0.0;

  double a(double eps) const { return a0 + A / eps; }
  double b(double eps) const { return b0 - A / eps; }
  EARepParams rep_params(double eps) const { return {a(eps), b(eps), eps}; }
};

/// Fraction of spectral energy at w <= 0; populated by the Hardy-space
/// operations.  warning is set when the fraction exceeds 1e-2.
struct HardyDiagnostics {
  double neg_energy_fraction = 0.0;
  bool warning = false;
};

SampledSignal heis_rep_apply(const HeisRepParams& p, const HeisenbergElement& g,
                             const SampledSignal& f);

SampledSignal ea_rep_apply(const EARepParams& p, const EAElement& g,
                           const SampledSignal& f);

/// The band-limited realization acting on the Hardy-type subspace
/// (spectra supported in w > 0):
///   f -> e^{i a gamma} alpha^{1/(2 eps)}
///        InvF( e^{i b beta w^eps} F(f)(alpha^{1/eps} w) ).
/// The dilated spectrum is resampled by direct quadrature of the transform
/// integral; frequencies outside the grid read as zero, and the multiplier
/// vanishes for w <= 0.
SampledSignal ea_rep_hardy_apply(const EARepParams& p, const EAElement& g,
                                 const SampledSignal& f,
                                 HardyDiagnostics* diag = nullptr);

/// Pullback onto the line: the stored samples of f(e^{-eps x}) pass through
/// unchanged; the isometry content lives in halfline_pullback_norms.
SampledSignal halfline_pullback(double eps, const SampledSignal& line);

/// The two sides of the isometry relation
///   eps * |f o exp(-eps .)|^2_{L2(R,dx)}  =  |f|^2_{L2(R+, dx/x)}.
/// `line` samples f(e^{-eps x}) on an x-grid, `halfline` samples f on a
/// matching positive grid; both integrals use Simpson quadrature.
struct PullbackNorms {
  double scaled_line = 0.0;
  double halfline = 0.0;
};
PullbackNorms halfline_pullback_norms(double eps, const SampledSignal& line,
                                      const SampledSignal& halfline);

/// Unitary intertwiner onto the Hardy-type subspace:
/// I(f) = InvF( 1_{w>0} w^{-1/2} f(-log w) ), with f(-log w) read off the
/// trigonometric interpolant of the samples.  For f supported in [-L, L] the
/// output spectrum is supported in [e^{-L}, e^{L}].
SampledSignal hardy_intertwiner(const SampledSignal& f);

/// Inverse intertwiner I^{-1}(f)(x) = e^{-x/2} F(f)(e^{-x}); spectral energy
/// at w <= 0 is reported through diag and discarded.
SampledSignal hardy_intertwiner_inv(const SampledSignal& f,
                                    HardyDiagnostics* diag = nullptr);

/// The Heisenberg representation conjugated onto the Hardy-type subspace.
/// Normative definition: hardy_intertwiner o heis_rep_apply o
/// hardy_intertwiner_inv.
SampledSignal heis_rep_hardy_apply(const HeisRepParams& p,
                                   const HeisenbergElement& g,
                                   const SampledSignal& f,
                                   HardyDiagnostics* diag = nullptr);

/// Diagnostic only: relative L2 gap between heis_rep_hardy_apply and the
/// closed form e^{i(A v2 + B v1)} f(-log(c + e^{A v2 - x})), evaluated where
/// the log argument is positive.  The closed form is known to disagree with
/// the operator chain; the gap is reported, not reconciled.
double heis_rep_hardy_closed_form_gap(const HeisRepParams& p,
                                      const HeisenbergElement& g,
                                      const SampledSignal& f);

/// || rho_eps^{a(eps),b(eps)}(P_eps(g)) f - eta^{A,B}(g) f || / ||f||.
double contraction_residual(const ContractionSchedule& sched, double eps,
                            const HeisenbergElement& g, const SampledSignal& f);

}  // namespace framelab
