#pragma once

// Brute-force oracle for the closed forms: evaluates the projected output
// field on a uniform grid and integrates with composite Simpson. Works for
// arbitrary pre-selections, not just the balanced input the closed forms
// assume.

#include "weakint/model.hpp"

namespace weakint::quadrature {

struct QuadratureGrid {
    double half_extent_in_waists = 8.0;  // >= 4
    int samples = 4001;                  // odd, >= 3
};

/// Throws std::invalid_argument if the grid violates its invariants.
void validate(const QuadratureGrid& grid);

/// Projected output field
///   conj(aH_post) aH_pre Phi(x-d1) + conj(aV_post) aV_pre e^{i phi} Phi(x-d2).
Complex output_field_at(const PolarizationState& pre, const PolarizationState& post,
                        const CouplingParams& coupling, const GaussianPointer& pointer, double x);

struct Integration {
    double power_ratio = 0.0;  // P_out / P_in, both from the same grid
    double mean_x = 0.0;       // first moment of |field|^2 (m)
};

/// Composite-Simpson integrals of |field|^2 and x |field|^2 over
/// [c - H w0, c + H w0] with c = pointer.center + (d1+d2)/2.
/// Throws DarkPort when P_out / P_in < 1e-15.
Integration integrate(const PolarizationState& pre, const PolarizationState& post,
                      const CouplingParams& coupling, const GaussianPointer& pointer,
                      const QuadratureGrid& grid = {});

enum class CompareStatus { kPass, kFail, kDarkPort };

struct DiscrepancyReport {
    CompareStatus status = CompareStatus::kPass;
    double rel_err_mean = 0.0;
    double rel_err_power = 0.0;
    int samples = 0;
    double half_extent_in_waists = 0.0;
};

/// Relative-error threshold above which compare_with_analytics flags FAIL.
inline constexpr double kCompareTolerance = 1e-7;

/// Scale floor used for the mean-position relative error, in units of the
/// waist: positions are compared against max(|a|, |q|, waist/1000) so setups
/// whose mean sits at zero do not divide by zero.
inline constexpr double kMeanScaleFloorInWaists = 1e-3;

/// Evaluate mean position and power ratio through both routes and report the
/// relative discrepancies. Dark-port setups yield status kDarkPort (with no
/// mean comparison); a dark-port mismatch between the routes is a kFail.
DiscrepancyReport compare_with_analytics(const MeasurementSetup& setup, const QuadratureGrid& grid = {});

namespace detail {

struct MomentIntegral {
    double power = 0.0;   // integral of |f|^2
    double moment = 0.0;  // integral of (x - center) |f|^2
};

/// Composite Simpson of |field(x)|^2 over [center - half, center + half] on
/// `samples` points (odd). Mirror-image grid offsets are accumulated pairwise
/// so the first moment of an even profile cancels exactly, and the summation
/// order is fixed for reproducibility.
template <typename FieldFn>
MomentIntegral simpson_moments(FieldFn&& field, double center, double half_extent, int samples) {
    const int mid = (samples - 1) / 2;
    const double h = half_extent / mid;
    auto simpson_weight = [samples](int i) -> double {
        if (i == 0 || i == samples - 1) return 1.0;
        return (i % 2 == 1) ? 4.0 : 2.0;
    };

    double power = 0.0;
    double moment = 0.0;
    for (int k = 0; k < mid; ++k) {
        const double d = (mid - k) * h;  // exact mirror offsets
        const double lo = std::norm(field(center - d));
        const double hi = std::norm(field(center + d));
        const double w = simpson_weight(k);  // == weight of the mirror index
        power += w * (lo + hi);
        moment += w * d * (hi - lo);
    }
    power += simpson_weight(mid) * std::norm(field(center));

    const double scale = h / 3.0;
    return {power * scale, moment * scale};
}

}  // namespace detail

}  // namespace weakint::quadrature
