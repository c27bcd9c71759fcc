#include "weakint/oam.hpp"

#include <algorithm>
#include <stdexcept>

namespace weakint::oam {

namespace {

constexpr double kDarkPortThreshold = 1e-15;

/// Unit-power Gaussian amplitude at offset u from its own center.
double spectral_amplitude(double u, double sigma) {
    return std::pow(kPi * sigma * sigma, -0.25) * std::exp(-u * u / (2.0 * sigma * sigma));
}

/// Field as a function of the offset from the spectral center. Working in
/// offsets keeps the integration exact regardless of the absolute center.
Complex field_at_offset(const OamSetup& setup, double u) {
    Complex acc(0.0, 0.0);
    const double sigma = setup.pointer().sigma_omega;
    for (const OamMode& mode : setup.modes()) {
        const double shift = mode_shift(mode.m, setup.omega_rot());
        acc += std::conj(mode.amp_post) * mode.amp_in * std::polar(1.0, mode.extra_phase) *
               spectral_amplitude(u + shift, sigma);
    }
    return acc;
}

/// Center and half width of an integration window covering every displaced
/// mode (mode m sits at offset -2 m Omega) plus the requested tail extent.
struct Window {
    double center_offset;
    double half_extent;
};

Window spectrum_window(const OamSetup& setup, const quadrature::QuadratureGrid& grid) {
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const OamMode& mode : setup.modes()) {
        const double offset = -mode_shift(mode.m, setup.omega_rot());
        lo = first ? offset : std::min(lo, offset);
        hi = first ? offset : std::max(hi, offset);
        first = false;
    }
    const double tails = grid.half_extent_in_waists * setup.pointer().sigma_omega;
    return {(lo + hi) / 2.0, (hi - lo) / 2.0 + tails};
}

}  // namespace

double mode_shift(int m, double omega_rot) {
    return 2.0 * m * omega_rot;
}

OamSetup::OamSetup(std::vector<OamMode> modes, double omega_rot, SpectralPointer pointer)
    : modes_(std::move(modes)), omega_rot_(omega_rot), pointer_(pointer) {
    if (modes_.empty()) throw std::invalid_argument("an OAM setup needs at least one mode");
    if (!(pointer_.sigma_omega > 0.0)) throw std::invalid_argument("spectral width must be strictly positive");

    double norm_in = 0.0, norm_post = 0.0;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        norm_in += std::norm(modes_[i].amp_in);
        norm_post += std::norm(modes_[i].amp_post);
        for (std::size_t j = i + 1; j < modes_.size(); ++j) {
            if (modes_[i].m == modes_[j].m) throw std::invalid_argument("mode indices must be distinct");
        }
    }
    if (std::abs(norm_in - 1.0) > kNormTolerance || std::abs(norm_post - 1.0) > kNormTolerance) {
        throw std::invalid_argument("mode amplitude vectors must have unit norm");
    }
}

double output_spectrum(const OamSetup& setup, double omega) {
    return std::norm(field_at_offset(setup, omega - setup.pointer().center_omega));
}

SpectrumIntegral integrate_spectrum(const OamSetup& setup, const quadrature::QuadratureGrid& grid) {
    quadrature::validate(grid);
    const Window window = spectrum_window(setup, grid);
    const double sigma = setup.pointer().sigma_omega;

    const auto out = quadrature::detail::simpson_moments(
        [&](double u) { return field_at_offset(setup, u); },
        window.center_offset, window.half_extent, grid.samples);
    const auto in = quadrature::detail::simpson_moments(
        [&](double u) { return Complex(spectral_amplitude(u, sigma), 0.0); },
        0.0, window.half_extent, grid.samples);

    SpectrumIntegral result;
    result.power = out.power / in.power;
    if (result.power >= kDarkPortThreshold) {
        result.mean_shift = window.center_offset + out.moment / out.power;
    }
    return result;
}

double mean_frequency(const OamSetup& setup, const quadrature::QuadratureGrid& grid) {
    const SpectrumIntegral integral = integrate_spectrum(setup, grid);
    if (integral.power < kDarkPortThreshold) throw DarkPort();
    return integral.mean_shift;
}

}  // namespace weakint::oam
