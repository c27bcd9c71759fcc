#pragma once

#include <stdexcept>
#include <string>

namespace weakint {

/// Base class for all domain errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Post-selection orthogonal to the pre-selection: the weak value diverges.
class OrthogonalPostSelection : public Error {
public:
    OrthogonalPostSelection() : Error("post-selection is orthogonal to the pre-selection; weak value diverges") {}
    explicit OrthogonalPostSelection(const std::string& what) : Error(what) {}
};

/// Closed forms requested for a pre-selection they are not derived for.
class UnsupportedPreSelection : public Error {
public:
    UnsupportedPreSelection() : Error("operation requires the balanced (1/sqrt2, 1/sqrt2) pre-selection") {}
    explicit UnsupportedPreSelection(const std::string& what) : Error(what) {}
};

/// Post-selected power is numerically zero; the mean pointer reading is undefined.
class DarkPort : public Error {
public:
    DarkPort() : Error("dark port: post-selected power is numerically zero") {}
    explicit DarkPort(const std::string& what) : Error(what) {}
};

/// dB conversion of an exactly zero power ratio.
class ZeroPower : public Error {
public:
    ZeroPower() : Error("power ratio is zero; dB value undefined") {}
    explicit ZeroPower(const std::string& what) : Error(what) {}
};

/// A measured quantity is inconsistent with the model's admissible range.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// The interference term is absent or has the wrong sign; inversion impossible.
class NonInvertible : public Error {
public:
    using Error::Error;
};

}  // namespace weakint
