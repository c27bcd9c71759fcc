#include "weakint/estimation.hpp"

#include <algorithm>
#include <stdexcept>

namespace weakint::estimation {

namespace {

/// Interference strength sin(2a) cos(theta); must be positive for inversion.
double interference_sign(double alpha, double theta) {
    return std::sin(2.0 * alpha) * std::cos(theta);
}

/// Rounding of the loss arithmetic can push the inferred gamma a few ulp
/// above 1 for shifts near zero; treat that band as exactly lossless.
constexpr double kGammaClampTolerance = 1e-12;

}  // namespace

EstimateReport invert_fractional_loss(const EstimationInput& input) {
    const double f = input.measured_fractional_loss;
    if (!(f <= 0.0) || f < -1.0) {
        throw OutOfRange("measured fractional loss must lie in [-1, 0]");
    }
    if (!(input.waist > 0.0)) throw std::invalid_argument("waist must be strictly positive");

    const double s = interference_sign(input.alpha, input.theta);
    if (s <= 0.0) {
        throw NonInvertible("sin(2 alpha) cos(theta) must be positive to invert the loss");
    }

    double gamma = (2.0 * f + 1.0) / s;
    if (gamma > 1.0 && gamma <= 1.0 + kGammaClampTolerance) gamma = 1.0;
    if (!(gamma > 0.0) || gamma > 1.0) {
        throw OutOfRange("measured loss is inconsistent with the model: inferred gamma outside (0, 1]");
    }

    EstimateReport report;
    report.gamma_inferred = gamma;
    report.delta_minus = 2.0 * input.waist * std::sqrt(std::max(0.0, -std::log(gamma)));
    report.sensitivity = sensitivity(report.delta_minus, input.alpha, input.theta, input.waist);
    report.min_detectable = min_detectable_shift(input.noise_floor, input.alpha, input.theta, input.waist);
    return report;
}

double min_detectable_shift(double noise_floor, double alpha, double theta, double waist) {
    if (!(noise_floor > 0.0)) throw std::invalid_argument("noise floor must be strictly positive");
    if (!(waist > 0.0)) throw std::invalid_argument("waist must be strictly positive");
    const double s = interference_sign(alpha, theta);
    if (s <= 0.0) {
        throw NonInvertible("sin(2 alpha) cos(theta) must be positive to invert the loss");
    }
    const double t = 2.0 * noise_floor / s;
    if (t >= 1.0) {
        throw OutOfRange("noise floor unreachable: the model's loss never exceeds sin(2a)cos(t)/2");
    }
    return 2.0 * waist * std::sqrt(-std::log1p(-t));
}

double sensitivity(double delta_minus, double alpha, double theta, double waist) {
    if (!(waist > 0.0)) throw std::invalid_argument("waist must be strictly positive");
    const double w2 = waist * waist;
    const double gamma = std::exp(-delta_minus * delta_minus / (4.0 * w2));
    return -interference_sign(alpha, theta) * gamma * delta_minus / (4.0 * w2);
}

}  // namespace weakint::estimation
