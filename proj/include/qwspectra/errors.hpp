#pragma once

#include <stdexcept>
#include <string>

namespace qwspectra {

// Everything thrown on purpose derives from Error, so callers (notably the
// CLI) can map failures onto their exit-code contract in one catch clause.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input: edge lists, graph6 bytes, rational literals, JSON
// payloads whose shape is wrong.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Input ended before the announced amount of data.
class TruncatedError : public ParseError {
public:
    explicit TruncatedError(const std::string& msg) : ParseError(msg) {}
};

class VertexOutOfRangeError : public Error {
public:
    explicit VertexOutOfRangeError(const std::string& msg) : Error(msg) {}
};

// Operands whose shapes do not fit the requested operation.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Exact polynomial division hit a nonzero remainder.
class NonzeroRemainderError : public Error {
public:
    explicit NonzeroRemainderError(const std::string& msg) : Error(msg) {}
};

// Exact mode hit a weight or probability whose square root leaves Q.
class IrrationalWeightError : public Error {
public:
    explicit IrrationalWeightError(const std::string& msg) : Error(msg) {}
};

class NotSymmetricError : public Error {
public:
    explicit NotSymmetricError(const std::string& msg) : Error(msg) {}
};

// A structural precondition of an operation does not hold for this input
// (isolated vertex, irregular graph where regularity is required, ...).
// Distinct from ParseError so the CLI can report it as exit code 3.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

} // namespace qwspectra
