#pragma once

#include <stdexcept>
#include <string>

namespace redtwo {

// Base for all library errors; subclasses carry the failure kind in the type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotEisenstein : Error {
    using Error::Error;
};
struct UnsupportedDegree : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct InsufficientPrecision : Error {
    using Error::Error;
};
struct NegativeValuation : Error {
    using Error::Error;
};
struct RingMismatch : Error {
    using Error::Error;
};
struct DegreeTooSmall : Error {
    using Error::Error;
};
struct NotDivisible : Error {
    using Error::Error;
};
struct NotInSubmodule : Error {
    using Error::Error;
};
struct NonIntegral : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct UnsupportedRegime : Error {
    using Error::Error;
};
struct SlopeOutOfRange : Error {
    using Error::Error;
};
struct WeightTooSmall : Error {
    using Error::Error;
};
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};
struct UnsupportedCompositum : Error {
    using Error::Error;
};
struct NonSquareFree : Error {
    using Error::Error;
};

}  // namespace redtwo
