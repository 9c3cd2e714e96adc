#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plagsim {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A failure tied to a position in a source file.
class SourceError : public Error {
public:
    SourceError(std::string detail, int line, int column)
        : Error(detail), line_(line), column_(column), detail_(std::move(detail)) {
        rebuild();
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }
    const std::string& file() const noexcept { return file_; }

    /// Attaches the offending file; the message becomes `file:line:column: detail`.
    void set_file(std::string file) {
        file_ = std::move(file);
        rebuild();
    }

    const char* what() const noexcept override { return message_.c_str(); }

private:
    void rebuild() {
        message_ = (file_.empty() ? std::string() : file_ + ":") + std::to_string(line_) + ":" +
                   std::to_string(column_) + ": " + detail_;
    }

    int line_;
    int column_;
    std::string detail_;
    std::string file_;
    std::string message_;
};

class LexError : public SourceError {
public:
    enum class Kind { UnterminatedString, UnterminatedBlockComment, IllegalCharacter };

    LexError(Kind kind, std::string message, int line, int column)
        : SourceError(std::move(message), line, column), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class ParseError : public SourceError {
public:
    ParseError(std::vector<std::string> expected, std::string found, int line, int column)
        : SourceError(describe(expected, found), line, column),
          expected_(std::move(expected)),
          found_(std::move(found)) {}

    const std::vector<std::string>& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    static std::string describe(const std::vector<std::string>& expected, const std::string& found) {
        std::string msg = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        return msg + ", found " + found;
    }

    std::vector<std::string> expected_;
    std::string found_;
};

/// A similarity measure is undefined for the given streams.
class EmptyStream : public Error {
public:
    using Error::Error;
};

class MissingRoot : public Error {
public:
    using Error::Error;
};

class LayoutError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class TooFewMinority : public Error {
public:
    using Error::Error;
};

class StratificationError : public Error {
public:
    using Error::Error;
};

/// Invalid user-supplied configuration (bad flag values, inconsistent options).
class ConfigError : public Error {
public:
    using Error::Error;
};

class InvalidHyperparameters : public Error {
public:
    using Error::Error;
};

}  // namespace plagsim
