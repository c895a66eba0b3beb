#pragma once

#include <stdexcept>
#include <string>

namespace lebx {

/// Argument outside the mathematical domain of an operation (x <= 0 for log_gamma,
/// a numerator pole in a binomial, n below an operation's minimum degree, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Work or memory cap exceeded (node-grid cap, maximizer evaluation budget).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Point rejected as a barycentric coordinate vector.
class BarycentricError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Interpolation data does not cover every node.
class MissingNodeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// The configured S-regions do not partition the index set for this offset.
class PartitionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Hypotheses of a reduction inequality are not met by the supplied offset.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace lebx
