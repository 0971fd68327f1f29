#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieord {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// Carries one of the verbatim availability messages from messages.hpp.
class NotAvailable : public Error {
public:
    using Error::Error;
};

class OutOfScope : public Error {
public:
    using Error::Error;
};

class DataMissing : public Error {
public:
    explicit DataMissing(const std::string& what_needed)
        : Error("data missing: " + what_needed), needed_(what_needed) {}
    const std::string& needed() const { return needed_; }

private:
    std::string needed_;
};

class CapacityError : public Error {
public:
    CapacityError(const std::string& msg, std::size_t needed_cap)
        : Error(msg), needed_cap_(needed_cap) {}
    std::size_t needed_cap() const { return needed_cap_; }

private:
    std::size_t needed_cap_;
};

class InvalidSpec : public Error {
public:
    enum class Kind { NotPrimePower, WrongTwistForm, RankOutOfRange, UnknownFamily };
    InvalidSpec(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class DuplicateKey : public ParseError {
public:
    using ParseError::ParseError;
};

class CapExceeded : public Error {
public:
    CapExceeded(const std::string& msg, std::string order)
        : Error(msg), order_(std::move(order)) {}
    // Exact group order, decimal.
    const std::string& order() const { return order_; }

private:
    std::string order_;
};

class AutGenerationFailed : public Error {
public:
    using Error::Error;
};

}  // namespace lieord
