#pragma once

#include <stdexcept>
#include <string>

namespace orthocevia {

enum class ErrorKind {
    DegenerateInput,
    CoincidentLines,
    CollinearPoints,
    NegativeResult,
    DegenerateTriangle,
    PedalDegenerate,
    OnSideLine,
    FootOffCarrier,
    ReflectedCevianParallel,
    FootAtVertex,
    CoincidentVertexPair,
    NotIsogonalPair,
    NotConcurrentInput,
    ConjugateAtInfinity,
    CevianAtInfinity,
    SamplingExhausted,
    UnknownSuite,
};

const char* error_kind_name(ErrorKind kind);

class GeomError : public std::runtime_error {
public:
    GeomError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw GeomError(kind, what);
}

} // namespace orthocevia
