#pragma once

// N-mode generalization in the frequency domain: OAM modes through a rotating
// element pick up mode-dependent shifts 2 m Omega; post-selected spectra and
// mean shifts reduce to the two-level core model at N = 2.

#include <vector>

#include "weakint/model.hpp"
#include "weakint/quadrature.hpp"

namespace weakint::oam {

struct OamMode {
    int m = 0;                  // OAM index
    Complex amp_in;             // input amplitude
    Complex amp_post;           // post-selection amplitude
    double extra_phase = 0.0;   // per-mode phase (rad), e^{i phase} applied to the in-amplitude
};

/// Unit-power Gaussian spectrum, amplitude exp(-(w - center)^2 / (2 sigma^2)).
/// Same functional form as the spatial pointer with waist = sigma, which is
/// exactly the width bridge the two-mode reduction relies on.
struct SpectralPointer {
    double center_omega = 0.0;  // rad/s
    double sigma_omega = 1.0;   // rad/s, > 0
};

/// Rotational frequency shift 2 m Omega (signed; the spectrum argument is
/// Phi(omega + 2 m Omega), so positive m * Omega moves the spectrum down).
double mode_shift(int m, double omega_rot);

class OamSetup {
public:
    /// Validates: at least one mode, distinct indices, sigma > 0, and both
    /// amplitude vectors unit norm within 1e-12.
    OamSetup(std::vector<OamMode> modes, double omega_rot, SpectralPointer pointer);

    const std::vector<OamMode>& modes() const { return modes_; }
    double omega_rot() const { return omega_rot_; }
    const SpectralPointer& pointer() const { return pointer_; }

private:
    std::vector<OamMode> modes_;
    double omega_rot_;
    SpectralPointer pointer_;
};

/// Post-selected spectral density
///   |sum_m conj(amp_post) amp_in e^{i phase} Phi(omega + 2 m Omega)|^2.
double output_spectrum(const OamSetup& setup, double omega);

struct SpectrumIntegral {
    double power = 0.0;       // post-selected fraction of the input power
    double mean_shift = 0.0;  // mean frequency relative to the spectral center (rad/s)
};

/// Integrate the output spectrum on a window covering every shifted mode.
/// All arithmetic is done in offsets from the spectral center, so the result
/// is independent of the absolute center frequency.
SpectrumIntegral integrate_spectrum(const OamSetup& setup, const quadrature::QuadratureGrid& grid = {});

/// Mean frequency relative to the spectral center. Throws DarkPort when the
/// post-selected power is numerically zero.
double mean_frequency(const OamSetup& setup, const quadrature::QuadratureGrid& grid = {});

}  // namespace weakint::oam
