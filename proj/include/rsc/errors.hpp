#pragma once

#include <stdexcept>
#include <string>

namespace rsc {

// All failures that are part of an operation's contract are thrown as typed
// exceptions; plain std::logic_error is reserved for internal invariant breaks.

struct ZeroDenominatorAfterSpecialization : std::runtime_error {
    explicit ZeroDenominatorAfterSpecialization(const std::string& what_arg)
        : std::runtime_error("ZeroDenominatorAfterSpecialization: " + what_arg) {}
};

struct DenominatorVanishes : std::runtime_error {
    explicit DenominatorVanishes(const std::string& what_arg)
        : std::runtime_error("DenominatorVanishes: " + what_arg) {}
};

struct NotInCoweightLattice : std::runtime_error {
    explicit NotInCoweightLattice(const std::string& what_arg)
        : std::runtime_error("NotInCoweightLattice: " + what_arg) {}
};

struct NonpolynomialResult : std::runtime_error {
    explicit NonpolynomialResult(const std::string& what_arg)
        : std::runtime_error("NonpolynomialResult: " + what_arg) {}
};

struct ShiftNotInLattice : std::runtime_error {
    explicit ShiftNotInLattice(const std::string& what_arg)
        : std::runtime_error("ShiftNotInLattice: " + what_arg) {}
};

struct RetryExhausted : std::runtime_error {
    explicit RetryExhausted(const std::string& what_arg)
        : std::runtime_error("RetryExhausted: " + what_arg) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what_arg)
        : std::runtime_error("ParseError: " + what_arg) {}
};

} // namespace rsc
