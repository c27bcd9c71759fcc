#include "weakint/analytics.hpp"

#include <limits>

namespace weakint::analytics {

namespace {

constexpr double kDarkPortThreshold = 1e-15;
constexpr double kMinOverlap = 1e-300;

/// 1 + gamma sin(2a) cos(theta): the post-selected power up to the factor 1/2.
double interference_denominator(const MeasurementSetup& setup, double gamma) {
    return 1.0 + gamma * std::sin(2.0 * setup.post.alpha) * std::cos(setup.theta());
}

void require_balanced(const MeasurementSetup& setup) {
    if (!setup.balanced_pre()) throw UnsupportedPreSelection();
}

}  // namespace

Complex weak_value(const PolarizationState& pre, const PolarizationState& post, WeakObservable obs) {
    const Complex denom = overlap(pre, post);
    if (std::abs(denom) <= kMinOverlap) throw OrthogonalPostSelection();
    const Complex num = std::conj(post.a_h()) * obs.eigen_h * pre.a_h() +
                        std::conj(post.a_v()) * obs.eigen_v * pre.a_v();
    return num / denom;
}

double intensity_at(const MeasurementSetup& setup, double x) {
    require_balanced(setup);
    const double ca = std::cos(setup.post.alpha);
    const double sa = std::sin(setup.post.alpha);
    const Complex field = ca * setup.pointer.amplitude(x - setup.coupling.delta1) +
                          sa * setup.pointer.amplitude(x - setup.coupling.delta2) *
                              std::polar(1.0, setup.theta());
    return std::norm(field);
}

double gamma_factor(const CouplingParams& coupling, const GaussianPointer& pointer) {
    const double d = coupling.delta_minus();
    const double w = pointer.waist();
    return std::exp(-d * d / (4.0 * w * w));
}

double mean_position(const MeasurementSetup& setup) {
    require_balanced(setup);
    return setup.coupling.delta_plus() / 2.0 + setup.coupling.delta_minus() / 2.0 * amplification(setup);
}

double amplification(const MeasurementSetup& setup) {
    require_balanced(setup);
    const double denom = interference_denominator(setup, gamma_factor(setup.coupling, setup.pointer));
    if (denom <= kDarkPortThreshold) throw DarkPort();
    return std::cos(2.0 * setup.post.alpha) / denom;
}

OptimalAngle optimal_angle(double gamma, double theta) {
    const double k = gamma * std::cos(theta);
    OptimalAngle result;
    result.alpha0 = -0.5 * std::asin(k);
    const double one_minus_k2 = (1.0 - k) * (1.0 + k);
    if (one_minus_k2 <= 0.0) {
        result.a_max = std::numeric_limits<double>::infinity();
        result.diverges = true;
    } else {
        result.a_max = 1.0 / std::sqrt(one_minus_k2);
    }
    return result;
}

double fractional_loss(const MeasurementSetup& setup) {
    require_balanced(setup);
    const double g = gamma_factor(setup.coupling, setup.pointer) *
                     std::sin(2.0 * setup.post.alpha) * std::cos(setup.theta());
    return (g - 1.0) / 2.0;
}

double power_ratio(const MeasurementSetup& setup) {
    // Derived from the loss so the pair stays consistent at full precision
    // in the small-loss regime (1 + f is exact there).
    return 1.0 + fractional_loss(setup);
}

double loss_db(double power_ratio) {
    if (power_ratio == 0.0) throw ZeroPower();
    if (power_ratio < 0.0) throw std::invalid_argument("power ratio must be nonnegative");
    return 10.0 * std::log10(power_ratio);
}

MeasurementResult measure(const MeasurementSetup& setup) {
    require_balanced(setup);
    MeasurementResult result;
    result.gamma = gamma_factor(setup.coupling, setup.pointer);
    result.overlap = overlap(setup.pre, setup.post.to_state());
    result.fractional_loss = fractional_loss(setup);
    result.power_ratio = result.fractional_loss + 1.0;

    const double denom = interference_denominator(setup, result.gamma);
    if (denom <= kDarkPortThreshold) {
        result.dark_port = true;
        return result;
    }
    result.amplification = std::cos(2.0 * setup.post.alpha) / denom;
    result.mean_position =
        setup.coupling.delta_plus() / 2.0 + setup.coupling.delta_minus() / 2.0 * result.amplification;
    return result;
}

}  // namespace weakint::analytics
