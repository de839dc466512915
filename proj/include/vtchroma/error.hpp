#pragma once

#include <stdexcept>
#include <string>

namespace vtchroma
{
    /// Base class for every error raised by the toolkit.
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A precondition on the arguments was violated.
    class InvalidArgument : public Error
    {
        public:
            using Error::Error;
    };

    /// The graph would not fit in a VertexSet.
    class CapacityExceeded : public Error
    {
        public:
            using Error::Error;
    };

    /// An exact search ran out of its node or output budget. The answer is
    /// undecided, never guessed.
    class BudgetExceeded : public Error
    {
        public:
            using Error::Error;
    };

    /// A proved structural statement failed on a concrete input. This only
    /// fires on an implementation bug (or a counterexample to a theorem).
    class LemmaFalsified : public Error
    {
        public:
            using Error::Error;
    };

    class ParseError : public Error
    {
        public:
            ParseError(const std::string & what, std::size_t position) :
                Error(what + " (at byte " + std::to_string(position) + ")"),
                _position(position)
            {
            }

            auto position() const -> std::size_t { return _position; }

        private:
            std::size_t _position;
    };

    /// The supplied cliques do not partition the vertex set.
    class NotCliquePartition : public Error
    {
        public:
            using Error::Error;
    };
}
