#pragma once

// Closed-form observables of the polarization-coupled Gaussian pointer:
// weak value, output intensity, mean position, overlap factor gamma,
// amplification, optimal post-selection angle, power ratio and loss.

#include "weakint/model.hpp"

namespace weakint::analytics {

/// Diagonal system observable in the {H, V} basis. Defaults to the
/// sigma_z-like eigenvalues (+1, -1) that make <x>/Delta = Re of the
/// weak value for the antisymmetric displacement Delta1 = -Delta2.
struct WeakObservable {
    double eigen_h = 1.0;
    double eigen_v = -1.0;
};

/// <post|A|pre> / <post|pre>. Throws OrthogonalPostSelection when the
/// overlap is too small to represent the quotient.
Complex weak_value(const PolarizationState& pre, const PolarizationState& post, WeakObservable obs = {});

/// Output intensity |cos(a) Phi(x-d1) + sin(a) Phi(x-d2) e^{i theta}|^2.
/// Requires the balanced pre-selection (throws UnsupportedPreSelection).
double intensity_at(const MeasurementSetup& setup, double x);

/// Pointer overlap gamma = exp(-(d1-d2)^2 / (4 w0^2)), in (0, 1].
double gamma_factor(const CouplingParams& coupling, const GaussianPointer& pointer);

/// Mean pointer position d+/2 + (d-/2) cos(2a) / (1 + gamma sin(2a) cos(theta)).
/// Throws DarkPort when the post-selected power is numerically zero.
double mean_position(const MeasurementSetup& setup);

/// Amplification of d-/2: cos(2a) / (1 + gamma sin(2a) cos(theta)).
double amplification(const MeasurementSetup& setup);

struct OptimalAngle {
    double alpha0 = 0.0;   // post-selection angle of maximum |amplification|
    double a_max = 1.0;    // (1 - gamma^2 cos^2 theta)^{-1/2}
    bool diverges = false; // gamma cos(theta) = 1 exactly: a_max reported as +inf
};

/// Angle and value of the maximum amplification for given gamma, theta.
OptimalAngle optimal_angle(double gamma, double theta);

/// P_out / P_in = (1 + gamma sin(2a) cos(theta)) / 2, in [0, 1].
double power_ratio(const MeasurementSetup& setup);

/// (P_out - P_in) / P_in = (gamma sin(2a) cos(theta) - 1) / 2, in [-1, 0].
/// power_ratio == fractional_loss + 1 at full precision.
double fractional_loss(const MeasurementSetup& setup);

/// 10 log10(power_ratio). Throws ZeroPower at exactly zero.
double loss_db(double power_ratio);

/// Evaluate every closed form at once. Dark-port setups are reported with
/// the dark_port flag set instead of throwing; mean/amplification are then
/// meaningless and set to zero.
MeasurementResult measure(const MeasurementSetup& setup);

}  // namespace weakint::analytics
