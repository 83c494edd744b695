/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_ERRORS_HH
#define CONTAINMENT_ERRORS_HH

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace containment
{
    /// Base class for every error raised by the library.
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class UnknownVertex : public Error
    {
        public:
            explicit UnknownVertex(const std::string & label) :
                Error("unknown vertex '" + label + "'"), _label(label)
            {
            }

            auto label() const -> const std::string & { return _label; }

        private:
            std::string _label;
    };

    class MissingVertex : public Error
    {
        public:
            explicit MissingVertex(const std::string & label) :
                Error("representation does not assign a set to vertex '" + label + "'"), _label(label)
            {
            }

            auto label() const -> const std::string & { return _label; }

        private:
            std::string _label;
    };

    class LabelMismatch : public Error
    {
        public:
            using Error::Error;
    };

    class InvalidCount : public Error
    {
        public:
            using Error::Error;
    };

    class InvariantViolation : public Error
    {
        public:
            using Error::Error;
    };

    class CycleDetected : public Error
    {
        public:
            explicit CycleDetected(std::vector<std::string> cycle);

            /// Labels along the cycle; the first label is repeated implicitly at the end.
            auto cycle() const -> const std::vector<std::string> & { return _cycle; }

        private:
            std::vector<std::string> _cycle;
    };

    /// A closed walk v1 ... vm (m odd) in which consecutive vertices are
    /// adjacent and no v_i v_{i+2} is an edge, indices taken cyclically.
    struct OddCycleCertificate
    {
        std::vector<std::string> walk;

        auto operator== (const OddCycleCertificate &) const -> bool = default;
    };

    class NotComparability : public Error
    {
        public:
            explicit NotComparability(OddCycleCertificate certificate);

            auto certificate() const -> const OddCycleCertificate & { return _certificate; }

        private:
            OddCycleCertificate _certificate;
    };

    class IsComparability : public Error
    {
        public:
            IsComparability() : Error("graph is a comparability graph, no odd-cycle certificate exists") { }
    };

    class CertificateNotFound : public Error
    {
        public:
            using Error::Error;
    };

    class NotTransitive : public Error
    {
        public:
            using Error::Error;
    };

    class NotNested : public Error
    {
        public:
            using Error::Error;
    };

    class CapExceeded : public Error
    {
        public:
            CapExceeded(const std::string & what, std::size_t found) :
                Error(what + ": cap exceeded after " + std::to_string(found) + " items"), _found(found)
            {
            }

            auto found() const -> std::size_t { return _found; }

        private:
            std::size_t _found;
    };

    class BudgetExceeded : public Error
    {
        public:
            BudgetExceeded(unsigned lower, unsigned upper) :
                Error("dimension exceeds budget: known bounds " + std::to_string(lower) + " <= dim <= "
                        + std::to_string(upper)),
                _lower(lower), _upper(upper)
            {
            }

            auto lower() const -> unsigned { return _lower; }
            auto upper() const -> unsigned { return _upper; }

        private:
            unsigned _lower, _upper;
    };

    class EmptyInput : public Error
    {
        public:
            using Error::Error;
    };

    class DimensionTooHigh : public Error
    {
        public:
            DimensionTooHigh(unsigned dimension, unsigned limit) :
                Error("poset dimension is at least " + std::to_string(dimension) + ", above the limit "
                        + std::to_string(limit)),
                _dimension(dimension)
            {
            }

            /// A lower bound on the true dimension.
            auto dimension() const -> unsigned { return _dimension; }

        private:
            unsigned _dimension;
    };

    class InvalidD : public Error
    {
        public:
            using Error::Error;
    };

    class MalformedBox : public InvariantViolation
    {
        public:
            using InvariantViolation::InvariantViolation;
    };

    class ParseError : public Error
    {
        public:
            ParseError(int line, const std::string & message) :
                Error("line " + std::to_string(line) + ": " + message), _line(line)
            {
            }

            auto line() const -> int { return _line; }

        private:
            int _line;
    };
}

#endif
