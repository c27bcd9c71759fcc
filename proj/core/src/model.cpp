#include "weakint/model.hpp"

#include <stdexcept>

namespace weakint {

namespace {
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

double reduce_angle(double angle) {
    double r = std::remainder(angle, kTwoPi);
    if (r <= -kPi) r += kTwoPi;
    return r;
}

PolarizationState::PolarizationState(Complex a_h, Complex a_v) : a_h_(a_h), a_v_(a_v) {
    const double norm2 = std::norm(a_h_) + std::norm(a_v_);
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("PolarizationState amplitudes must have unit norm");
    }
}

PolarizationState PolarizationState::normalized(Complex a_h, Complex a_v) {
    const double norm2 = std::norm(a_h) + std::norm(a_v);
    if (!(norm2 > 0.0)) {
        throw std::invalid_argument("cannot normalize the zero polarization vector");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    return PolarizationState(a_h * inv, a_v * inv);
}

bool PolarizationState::is_balanced() const {
    return std::abs(a_h_ - Complex(kInvSqrt2, 0.0)) <= kNormTolerance &&
           std::abs(a_v_ - Complex(kInvSqrt2, 0.0)) <= kNormTolerance;
}

PolarizationState make_balanced_pre() {
    return PolarizationState(Complex(kInvSqrt2, 0.0), Complex(kInvSqrt2, 0.0));
}

PolarizationState make_post(double alpha, double xi) {
    return PolarizationState(Complex(std::cos(alpha), 0.0), std::polar(std::sin(alpha), xi));
}

Complex overlap(const PolarizationState& pre, const PolarizationState& post) {
    return std::conj(post.a_h()) * pre.a_h() + std::conj(post.a_v()) * pre.a_v();
}

GaussianPointer::GaussianPointer(double waist, double center) : waist_(waist), center_(center) {
    if (!(waist > 0.0)) {
        throw std::invalid_argument("pointer waist must be strictly positive");
    }
    norm_ = std::pow(kPi * waist_ * waist_, -0.25);
    inv_two_w2_ = 1.0 / (2.0 * waist_ * waist_);
}

MeasurementSetup make_balanced_setup(PostSelectionAngles post, CouplingParams coupling, GaussianPointer pointer) {
    return MeasurementSetup{make_balanced_pre(), post, coupling, pointer};
}

}  // namespace weakint
