#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace gfq {

class UnsupportedDegree : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidGeometry : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a state has rho <= 0, p <= 0 or non-finite entries.
class AdmissibilityError : public std::runtime_error {
public:
    explicit AdmissibilityError(const std::string& what,
                                double x = std::numeric_limits<double>::quiet_NaN(),
                                double y = std::numeric_limits<double>::quiet_NaN())
        : std::runtime_error(what), x_(x), y_(y) {}
    double x() const { return x_; }
    double y() const { return y_; }

private:
    double x_, y_;
};

}  // namespace gfq
