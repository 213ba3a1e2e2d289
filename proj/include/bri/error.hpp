#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bri {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Residue whose backbone atoms are too close or collinear to define a frame.
/// `index` is the 0-based residue position when known, npos otherwise.
class DegenerateResidue : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit DegenerateResidue(const std::string& what, std::size_t index = npos)
        : Error(index == npos ? what : what + " (residue " + std::to_string(index) + ")"),
          index_(index) {}

    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class InvalidStats : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class TooShort : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class EmptyCorpus : public Error {
public:
    using Error::Error;
};

/// Malformed input file; carries 1-based line number when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : what + " (line " + std::to_string(line) + ")"),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class MissingCategory : public Error {
public:
    using Error::Error;
};

class DegenerateRow : public Error {
public:
    explicit DegenerateRow(const std::string& what, std::size_t row)
        : Error(what + " (row " + std::to_string(row) + ")"), row_(row) {}

    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

class MalformedMatrix : public Error {
public:
    using Error::Error;
};

class DegenerateRange : public Error {
public:
    using Error::Error;
};

class EmptyData : public Error {
public:
    using Error::Error;
};

}  // namespace bri
