#ifndef TROPTEICH_ERRORS_HPP
#define TROPTEICH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropteich {

// Base class for all domain errors raised by the library.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class AxiomViolation : public DomainError {
public:
    explicit AxiomViolation(const std::string& detail)
        : DomainError("axiom violation: " + detail) {}
};

class Disconnected : public DomainError {
public:
    Disconnected() : DomainError("graph is not connected") {}
};

class UnknownVertex : public DomainError {
public:
    explicit UnknownVertex(const std::string& detail = "")
        : DomainError("unknown vertex" + (detail.empty() ? "" : ": " + detail)) {}
};

class UnknownEdge : public DomainError {
public:
    explicit UnknownEdge(const std::string& detail = "")
        : DomainError("unknown edge" + (detail.empty() ? "" : ": " + detail)) {}
};

class UnknownObject : public DomainError {
public:
    explicit UnknownObject(const std::string& detail = "")
        : DomainError("unknown object" + (detail.empty() ? "" : ": " + detail)) {}
};

class Incomposable : public DomainError {
public:
    Incomposable() : DomainError("contractions are not composable") {}
};

class UnsupportedGenus : public DomainError {
public:
    explicit UnsupportedGenus(const std::string& detail = "")
        : DomainError("unsupported genus" + (detail.empty() ? "" : ": " + detail)) {}
};

class BadLetter : public DomainError {
public:
    explicit BadLetter(const std::string& detail = "")
        : DomainError("bad letter" + (detail.empty() ? "" : ": " + detail)) {}
};

class RankMismatch : public DomainError {
public:
    RankMismatch() : DomainError("word/map rank mismatch") {}
};

class NotAnAutomorphism : public DomainError {
public:
    NotAnAutomorphism() : DomainError("map is not an automorphism") {}
};

class LengthMismatch : public DomainError {
public:
    LengthMismatch() : DomainError("tuple lengths or ranks do not match") {}
};

class PresentationMismatch : public DomainError {
public:
    PresentationMismatch() : DomainError("markings live on different presentations") {}
};

class SourceMismatch : public DomainError {
public:
    SourceMismatch() : DomainError("marking graph does not match contraction source") {}
};

class BadPath : public DomainError {
public:
    explicit BadPath(const std::string& detail = "")
        : DomainError("bad path" + (detail.empty() ? "" : ": " + detail)) {}
};

class NotPrime : public DomainError {
public:
    NotPrime() : DomainError("modulus is not prime") {}
};

class ZeroLengthNode : public DomainError {
public:
    explicit ZeroLengthNode(const std::string& detail = "")
        : DomainError("node parameter has valuation zero" +
                      (detail.empty() ? "" : ": " + detail)) {}
};

class UnstableDualGraph : public DomainError {
public:
    UnstableDualGraph() : DomainError("dual graph of the model is not stable") {}
};

class NoMatchingCell : public DomainError {
public:
    explicit NoMatchingCell(const std::string& detail = "")
        : DomainError("no matching cell" + (detail.empty() ? "" : ": " + detail)) {}
};

class ParseError : public DomainError {
public:
    explicit ParseError(const std::string& detail) : DomainError("parse error: " + detail) {}
};

} // namespace tropteich

#endif
