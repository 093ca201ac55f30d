#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- geometry / sampling ----------------------------------------------------

struct NonPositiveWarping : Error {
    explicit NonPositiveWarping(const std::string& msg) : Error(msg) {}
};

struct PoleRegularityViolated : Error {
    explicit PoleRegularityViolated(const std::string& msg) : Error(msg) {}
};

// -- flow -------------------------------------------------------------------

struct NumericalBlowup : Error {
    explicit NumericalBlowup(const std::string& msg) : Error(msg) {}
};

struct SphereExtinct : Error {
    explicit SphereExtinct(const std::string& msg) : Error(msg) {}
};

struct InvalidProfileParameters : Error {
    explicit InvalidProfileParameters(const std::string& msg) : Error(msg) {}
};

struct InsufficientSnapshots : Error {
    explicit InsufficientSnapshots(const std::string& msg) : Error(msg) {}
};

struct EmptyHistory : Error {
    explicit EmptyHistory(const std::string& msg) : Error(msg) {}
};

// -- decomposition ----------------------------------------------------------

struct DimensionTooSmall : Error {
    explicit DimensionTooSmall(const std::string& msg) : Error(msg) {}
};

struct BianchiViolation : Error {
    BianchiViolation(const std::string& msg, double defect)
        : Error(msg), trace_defect(defect) {}
    double trace_defect;
};

// -- monitors ---------------------------------------------------------------

struct RadiusTooLarge : Error {
    explicit RadiusTooLarge(const std::string& msg) : Error(msg) {}
};

struct HorizonExceeded : Error {
    explicit HorizonExceeded(const std::string& msg) : Error(msg) {}
};

// -- configuration / persistence ---------------------------------------------

struct ParseError : Error {
    ParseError(const std::string& msg, int line_number)
        : Error(msg + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
    int line;
};

struct RangeError : Error {
    RangeError(const std::string& msg, std::string key_name)
        : Error(msg), key(std::move(key_name)) {}
    std::string key;
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace ricci
