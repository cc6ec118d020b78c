#pragma once

#include <stdexcept>
#include <string>

namespace metallic {

// Input outside the mathematical domain of an operation (e.g. n <= 0,
// a label outside V_n, sigma applied to 00(n+1)).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A tile that matches none of the metallic families.
class ClassificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Concatenation or substitution with incompatible block dimensions.
class AlignmentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A search or enumeration hit its configured cap. Never swallowed:
// callers treat "absent" as a proof of nonexistence.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A block boundary that is not a tau-image, or a grid that is not a
// Cartesian product of junction lines.
class RecognizabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal invariant broken; indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A pipeline stage (markers, fusion, equivalence) could not proceed.
class PipelineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A pattern refers to a letter the tile set does not have.
class RenderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace metallic
