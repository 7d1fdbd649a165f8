#ifndef RLDOC_ERRORS_HPP
#define RLDOC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rldoc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

// Non-canonical run data (interior zero run, row sum mismatch, ...).
// row is 1-based when known, 0 otherwise.
class CorruptRunError : public Error {
public:
    CorruptRunError(const std::string& msg, int row = 0)
        : Error(row > 0 ? "row " + std::to_string(row) + ": " + msg : msg), row_(row) {}
    int row() const { return row_; }

private:
    int row_;
};

// Malformed file content; offset is the byte position where parsing failed.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Undecodable MH bitstream; bit_offset is where the decoder gave up.
class CorruptStreamError : public Error {
public:
    CorruptStreamError(const std::string& msg, std::size_t bit_offset)
        : Error(msg + " (bit offset " + std::to_string(bit_offset) + ")"), bit_offset_(bit_offset) {}
    std::size_t bit_offset() const { return bit_offset_; }

private:
    std::size_t bit_offset_;
};

class EncodeRangeError : public Error {
public:
    using Error::Error;
};

class DegenerateFitError : public Error {
public:
    using Error::Error;
};

} // namespace rldoc

#endif
