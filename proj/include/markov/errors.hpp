#pragma once

#include <stdexcept>
#include <string>

namespace markov {

// Semantic outcomes surfaced as exceptions. Callers that treat an outcome as
// a normal result (forbidden mutations, membership rejections) use the
// optional-returning variants instead of catching these.
struct MarkovError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeExponent : MarkovError {
    using MarkovError::MarkovError;
};

struct NotSymmetric : MarkovError {
    using MarkovError::MarkovError;
};

struct ZeroPoint : MarkovError {
    using MarkovError::MarkovError;
};

// Exact evaluation of a Laurent polynomial at an integer/Gaussian point left
// a nonzero remainder (only possible with negative exponents at |x| != 1).
struct NotExactEvaluation : MarkovError {
    using MarkovError::MarkovError;
};

struct OutOfRange : MarkovError {
    using MarkovError::MarkovError;
};

struct NotUnimodular : MarkovError {
    using MarkovError::MarkovError;
};

struct NotConstant : MarkovError {
    using MarkovError::MarkovError;
};

struct NonRealValue : MarkovError {
    using MarkovError::MarkovError;
};

// Two algebraically equivalent computation routes disagreed. Must never fire.
struct InternalInconsistency : MarkovError {
    using MarkovError::MarkovError;
};

struct AmbiguousMax : MarkovError {
    using MarkovError::MarkovError;
};

}  // namespace markov
