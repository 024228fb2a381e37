#pragma once

#include <stdexcept>
#include <string>

namespace netbound {

/// Base class for all netbound errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Rotation system is not a valid connected plane embedding (asymmetric
/// adjacency, loops, parallel edges, Euler violation, bad anchor, ...).
class EmbeddingInvalid : public Error {
public:
    using Error::Error;
};

/// A caller-supplied parameter is malformed (wrong size, out of domain).
class BadParameter : public Error {
public:
    using Error::Error;
};

/// A vertex or walk index is outside its valid range.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// An induced subgraph was requested on an empty vertex set.
class EmptySubgraph : public Error {
public:
    using Error::Error;
};

/// The coloring inherited by a component cannot be expressed as a frame:
/// the colored vertices are not a contiguous stretch of the component's
/// peripheral walk in either traversal direction.
class RecolorContradiction : public Error {
public:
    using Error::Error;
};

/// A brute-force oracle was asked to handle more vertices than its limit.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// A constructed object failed its own validity check (e.g. a tree
/// decomposition that does not satisfy the decomposition axioms).
class ValidationFailure : public Error {
public:
    using Error::Error;
};

/// An input file does not conform to its format.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An internal invariant the algorithms rely on was violated; indicates a
/// bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace netbound
