#pragma once

#include <stdexcept>
#include <string>

namespace datasup {

enum class ErrorKind {
    Input,              // alphabet mismatch, malformed data
    UnknownEvent,
    InvalidTriple,
    SpecOutsideData,    // K is not a subset of D_m
    EmptySpecification, // K_{D_m} is empty
    CyclicAutomaton,
    NotKInformative,
    BoundExceeded,
    TooLarge,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace datasup
