#pragma once

#include <stdexcept>
#include <string>

namespace gfc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A curve failed validation. `reason()` names the violated constraint.
class InvalidCurveError : public Error {
public:
    enum class Reason {
        ForbiddenLambdaValue,  // some lambda is 0 or 1
        DuplicateLambda,       // two lambdas coincide
        GenusBelowTwo,         // (n-1)(k-1) <= 2
        LambdaCountMismatch,   // lambda list length != n-2 (or k/n out of range)
    };

    InvalidCurveError(Reason reason, const std::string& what)
        : Error(what), reason_(reason) {}

    Reason reason() const { return reason_; }

    static const char* reason_name(Reason r) {
        switch (r) {
        case Reason::ForbiddenLambdaValue: return "forbidden-lambda-value";
        case Reason::DuplicateLambda: return "duplicate-lambda";
        case Reason::GenusBelowTwo: return "genus-below-two";
        case Reason::LambdaCountMismatch: return "lambda-count-mismatch";
        }
        return "unknown";
    }

private:
    Reason reason_;
};

/// A generic-point expansion was requested at a branch value.
class BranchCollisionError : public Error {
public:
    using Error::Error;
};

/// Adaptive truncation doubling hit the hard cap without resolving.
class PrecisionCapExceededError : public Error {
public:
    using Error::Error;
};

/// A computed quantity contradicts a structural identity that holds for
/// every valid curve. Signals an implementation bug or a genuine
/// counterexample; never swallowed.
class TheoremViolationError : public Error {
public:
    using Error::Error;
};

/// Second difference of wedge orders came out negative (impossible for a
/// well-formed frame; upstream bug).
class NegativeIndexError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A formula was queried outside its domain (e.g. the n>=3 weight bound
/// at n=2).
class NotApplicableError : public Error {
public:
    using Error::Error;
};

}  // namespace gfc
