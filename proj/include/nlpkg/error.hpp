#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlpkg {

// Root of every error the library throws. Module headers derive their own.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), source_(source), line_(line) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace nlpkg
