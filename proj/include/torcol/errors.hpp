#pragma once

#include <stdexcept>
#include <string>

namespace torcol {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// u lists v as a neighbor but v does not list u.
class AsymmetricAdjacency : public Error {
public:
    using Error::Error;
};

/// Self-loop or repeated neighbor; only simple graphs are supported.
class MultigraphInput : public Error {
public:
    using Error::Error;
};

/// A rotation is not a permutation of the vertex's incident edges.
class NonPermutationRotation : public Error {
public:
    using Error::Error;
};

/// Embeddings are defined per connected cellular surface; disconnected
/// input has no single genus under the Euler computation used here.
class DisconnectedGraph : public Error {
public:
    using Error::Error;
};

/// Requested cycle length exceeds the search cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Operation needs face structure but no embedding was supplied.
class EmbeddingRequired : public Error {
public:
    using Error::Error;
};

/// Text input did not match the expected format.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& detail)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                ": " + detail),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Two rules in one set can both fire on the same (source degree, target
/// degree) pair; transfers are additive, so this is almost always a bug.
class OverlappingSelectors : public Error {
public:
    using Error::Error;
};

/// Audit was asked to judge a charge state that is not final.
class StageError : public Error {
public:
    using Error::Error;
};

/// Exhaustive search exceeded its node budget before deciding.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A color list is smaller than the operation requires.
class ListTooSmall : public Error {
public:
    using Error::Error;
};

/// Residual lists are below the sizes the reduction argument guarantees.
class GuaranteeViolated : public Error {
public:
    using Error::Error;
};

/// Residual lists met their guarantees but no valid extension exists.
/// Reachable only if the extension case analysis is wrong.
class ExtensionFailed : public Error {
public:
    using Error::Error;
};

/// Input was not a valid graph6 string.
class MalformedGraph6 : public Error {
public:
    using Error::Error;
};

/// Declared genus in a rotation file disagrees with the traced genus.
class GenusMismatch : public Error {
public:
    using Error::Error;
};

/// A file names a vertex outside the graph's id range.
class UnknownVertex : public Error {
public:
    using Error::Error;
};

/// Generator parameters below the smallest supported instance.
class ParameterTooSmall : public Error {
public:
    using Error::Error;
};

}  // namespace torcol
