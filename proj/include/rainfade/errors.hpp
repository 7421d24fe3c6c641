#ifndef RAINFADE_ERRORS_HPP
#define RAINFADE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rainfade {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain an operation is defined on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A rain rate cannot be found for the requested exceedance percentage.
class NoSolution : public Error {
public:
    NoSolution(const std::string& what, double percent)
        : Error(what), percent_(percent) {}
    double percent() const noexcept { return percent_; }

private:
    double percent_;
};

/// Frequency outside the supported band or the coefficient table's span.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// The geostationary satellite is at or below the local horizon.
class NotVisible : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DuplicateKey : public Error {
public:
    using Error::Error;
};

class UnknownRegion : public Error {
public:
    using Error::Error;
};

class NoCompleteYears : public Error {
public:
    using Error::Error;
};

/// No records exist for a requested calendar month.
class NoData : public Error {
public:
    NoData(const std::string& what, int month) : Error(what), month_(month) {}
    int month() const noexcept { return month_; }

private:
    int month_;
};

}  // namespace rainfade

#endif  // RAINFADE_ERRORS_HPP
