#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linapprox {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enclosure still straddles the decision point at the precision cap.
/// The caller has to supply a more precise input.
class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string& what, unsigned bits_tried = 0)
        : Error("precision exhausted: " + what), bits_tried_(bits_tried) {}
    unsigned bits_tried() const noexcept { return bits_tried_; }

private:
    unsigned bits_tried_;
};

/// A continued fraction stream has fewer digits than an operation needs.
/// `needed()` is the minimal digit count that would let the call proceed.
class InsufficientDigits : public Error {
public:
    InsufficientDigits(const std::string& what, std::size_t needed, std::size_t available)
        : Error("insufficient continued fraction digits: " + what + " (need " +
                std::to_string(needed) + ", have " + std::to_string(available) + ")"),
          needed_(needed), available_(available) {}
    std::size_t needed() const noexcept { return needed_; }
    std::size_t available() const noexcept { return available_; }

private:
    std::size_t needed_;
    std::size_t available_;
};

class InvalidDigits : public Error {
public:
    explicit InvalidDigits(const std::string& what) : Error("invalid digits: " + what) {}
};

class NotAdmissible : public Error {
public:
    explicit NotAdmissible(const std::string& what) : Error("digit string not admissible: " + what) {}
};

class OutOfDomain : public Error {
public:
    explicit OutOfDomain(const std::string& what) : Error("out of domain: " + what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace linapprox
