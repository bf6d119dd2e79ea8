#pragma once

#include <stdexcept>
#include <string>

namespace rbm {

// Parameter record violates a family or recurrence constraint.
struct InvalidParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A table-backed operator was asked for a monomial above its declared coverage.
struct CoverageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A support point whose closed-form denominator vanishes.
struct DegenerateDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownPreset : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAProgression : std::runtime_error {
    NotAProgression(const std::string& what, long first_bad)
        : std::runtime_error(what), element(first_bad) {}
    long element;
};

// No classified family reproduces a coefficient table.
struct Unclassifiable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed JSON or a schema mismatch in serialized input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rbm
