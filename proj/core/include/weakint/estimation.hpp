#pragma once

// Inverse problem: recover the displacement |d-| from a measured fractional
// loss in the high-signal regime, plus sensitivity and detection-floor
// analysis.

#include "weakint/model.hpp"

namespace weakint::estimation {

struct EstimationInput {
    double measured_fractional_loss = 0.0;  // in [-1, 0]
    double alpha = kPi / 4;                 // rad; sin(2 alpha) cos(theta) must be > 0
    double theta = 0.0;                     // rad
    double waist = 10e-6;                   // m
    double noise_floor = 1e-7;              // smallest resolvable |loss|, > 0
};

struct EstimateReport {
    double delta_minus = 0.0;     // |d1 - d2| (m); the sign is unobservable
    double gamma_inferred = 1.0;  // in (0, 1]
    double sensitivity = 0.0;     // d(loss)/d(d-) at the estimate (1/m)
    double min_detectable = 0.0;  // smallest resolvable shift at the noise floor (m)
};

/// Invert loss = (gamma sin(2a) cos(t) - 1)/2 for the displacement:
/// gamma = (2 loss + 1) / (sin(2a) cos(t)), d- = 2 w0 sqrt(-ln gamma).
/// Throws NonInvertible when sin(2a) cos(t) <= 0 and OutOfRange when the
/// measured loss is inconsistent with the model (inferred gamma outside (0, 1]).
EstimateReport invert_fractional_loss(const EstimationInput& input);

/// Smallest displacement whose shift-induced loss reaches the noise floor:
/// d- = 2 w0 sqrt(-ln(1 - 2 floor / (sin(2a) cos(t)))).
double min_detectable_shift(double noise_floor, double alpha, double theta, double waist);

/// Analytic derivative d(loss)/d(d-) = -sin(2a) cos(t) gamma d- / (4 w0^2).
double sensitivity(double delta_minus, double alpha, double theta, double waist);

}  // namespace weakint::estimation
