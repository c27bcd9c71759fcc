#pragma once

// Value types shared by every module: polarization states, couplings,
// Gaussian pointers and the measurement setup built from them.
// All quantities are SI (meters, radians); all types are immutable values.

#include <cmath>
#include <complex>

#include "weakint/errors.hpp"

namespace weakint {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Tolerance used for unit-norm and balanced-state checks.
inline constexpr double kNormTolerance = 1e-12;

/// Reduce an angle to (-pi, pi].
double reduce_angle(double angle);

/// Two-component complex polarization vector over the {H, V} basis.
/// Unit norm is a construction invariant (checked to 1e-12).
class PolarizationState {
public:
    PolarizationState(Complex a_h, Complex a_v);

    /// Rescales (a_h, a_v) to unit norm; throws if both are zero.
    static PolarizationState normalized(Complex a_h, Complex a_v);

    Complex a_h() const { return a_h_; }
    Complex a_v() const { return a_v_; }

    /// True iff this state equals (1/sqrt2, 1/sqrt2) component-wise within 1e-12.
    bool is_balanced() const;

private:
    Complex a_h_;
    Complex a_v_;
};

/// The balanced linear input state (1/sqrt2, 1/sqrt2).
PolarizationState make_balanced_pre();

/// Post-selection state (cos(alpha), e^{i xi} sin(alpha)).
PolarizationState make_post(double alpha, double xi);

/// Inner product <post|pre> = conj(a_h^post) a_h^pre + conj(a_v^post) a_v^pre.
Complex overlap(const PolarizationState& pre, const PolarizationState& post);

/// Post-selection parameterized by the polarizer angles (radians).
struct PostSelectionAngles {
    double alpha = 0.0;
    double xi = 0.0;

    PolarizationState to_state() const { return make_post(alpha, xi); }
};

/// Polarization-dependent displacements and phase picked up in the interaction.
struct CouplingParams {
    double delta1 = 0.0;  // H displacement (m)
    double delta2 = 0.0;  // V displacement (m)
    double phi = 0.0;     // polarization-dependent phase (rad)

    double delta_plus() const { return delta1 + delta2; }
    double delta_minus() const { return delta1 - delta2; }  // sign convention: delta1 - delta2
};

/// Unit-power 1-D Gaussian pointer.
///
/// Amplitude convention: Phi(x) = (pi w0^2)^{-1/4} exp(-(x-center)^2 / (2 w0^2)),
/// so two pointers displaced by d overlap as exp(-d^2 / (4 w0^2)) -- the factor
/// every closed form in analytics relies on.
class GaussianPointer {
public:
    explicit GaussianPointer(double waist, double center = 0.0);

    double waist() const { return waist_; }
    double center() const { return center_; }

    double amplitude(double x) const {
        const double u = x - center_;
        return norm_ * std::exp(-u * u * inv_two_w2_);
    }

private:
    double waist_;
    double center_;
    double norm_;         // (pi w0^2)^{-1/4}
    double inv_two_w2_;   // 1 / (2 w0^2)
};

/// Pre-selection + coupling + pointer + post-selection.
struct MeasurementSetup {
    PolarizationState pre;
    PostSelectionAngles post;
    CouplingParams coupling;
    GaussianPointer pointer;

    /// theta = phi - xi reduced to (-pi, pi].
    double theta() const { return reduce_angle(coupling.phi - post.xi); }

    /// The closed forms of analytics require this to be true.
    bool balanced_pre() const { return pre.is_balanced(); }
};

/// Convenience constructor for the balanced-input setup used throughout.
MeasurementSetup make_balanced_setup(PostSelectionAngles post, CouplingParams coupling, GaussianPointer pointer);

/// Outputs of a full closed-form evaluation (see analytics::measure).
struct MeasurementResult {
    double mean_position = 0.0;     // m
    double power_ratio = 0.0;       // in [0, 1]
    double fractional_loss = 0.0;   // power_ratio - 1, in [-1, 0]
    double amplification = 0.0;
    double gamma = 1.0;             // pointer overlap, in (0, 1]
    Complex overlap;                // <post|pre>
    bool dark_port = false;         // mean/amplification undefined when set
};

}  // namespace weakint
