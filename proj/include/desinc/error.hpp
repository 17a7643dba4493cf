#pragma once

#include <stdexcept>
#include <string>

namespace desinc {

/// Argument outside the mathematical domain of an operation (non-finite
/// input, h <= 0, d outside (0, pi/2), ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Analytic parameters fall outside the regime in which a mesh rule or an
/// error bound is proved. The message names the violated condition.
class RegimeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Caller broke an operation's contract (missing samples, absent constants).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A user function produced a non-finite value at a finite argument.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace desinc
