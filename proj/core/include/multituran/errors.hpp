#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multituran
{
    /// Base of everything the library throws on purpose.
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Bad arguments: out-of-range indices, parameters below their minimum,
    /// malformed families.
    class InvalidArgument : public Error
    {
        public:
            using Error::Error;
    };

    /// A graph that breaks the partite contract (self loop, duplicate edge,
    /// edge inside a part).
    class InvalidGraph : public InvalidArgument
    {
        public:
            using InvalidArgument::InvalidArgument;
    };

    /// Input exceeds the exact desk-scale limit of an operation, or the
    /// cooperative deadline expired.
    class ResourceLimitExceeded : public Error
    {
        public:
            using Error::Error;
    };

    /// A mathematical hypothesis of a lemma-level operation does not hold on
    /// the supplied instance. The message names the witness.
    class HypothesisViolation : public Error
    {
        public:
            using Error::Error;
    };

    /// Text input that could not be parsed; carries a 1-based position.
    class ParseError : public Error
    {
        public:
            ParseError(const std::string & message, std::size_t line, std::size_t column) :
                Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
                _line(line),
                _column(column)
            {
            }

            auto line() const -> std::size_t { return _line; }
            auto column() const -> std::size_t { return _column; }

        private:
            std::size_t _line, _column;
    };
}
