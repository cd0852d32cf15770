#pragma once

#include <stdexcept>
#include <string>

namespace levo {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed configuration, unparsable polynomial, ring mismatch.
class InputError : public Error {
public:
    using Error::Error;
};

// A hypersurface vanishes identically on a component, or a slice at p is
// not proper.  `stage` and `component` locate the failure.
class ImproperIntersection : public Error {
public:
    ImproperIntersection(std::string stage, std::string component)
        : Error("improper intersection at " + stage + " on " + component),
          stage_(std::move(stage)), component_(std::move(component)) {}
    const std::string& stage() const { return stage_; }
    const std::string& component() const { return component_; }

private:
    std::string stage_;
    std::string component_;
};

class NonGenericSlice : public Error {
public:
    NonGenericSlice() : Error("non-generic slice") {}
};

class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace levo
