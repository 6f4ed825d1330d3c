#pragma once

#include <stdexcept>
#include <string>

namespace ucoh {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class NotUnitary : public Error {
public:
    using Error::Error;
};

class NotRealSymmetric : public Error {
public:
    using Error::Error;
};

class ConstraintViolation : public Error {
public:
    ConstraintViolation(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

class FactorizationFailure : public Error {
public:
    FactorizationFailure(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

class NotInDisc : public Error {
public:
    NotInDisc(const std::string& what, double norm) : Error(what), norm_(norm) {}
    double norm() const { return norm_; }

private:
    double norm_;
};

class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class InvalidAlpha : public Error {
public:
    using Error::Error;
};

// Malformed or unreadable input files.
class InputError : public Error {
public:
    using Error::Error;
};

// Parse errors carry a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(int line, int col, const std::string& message)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + message),
          line_(line), col_(col), message_(message) {}
    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int col_;
    std::string message_;
};

class ModeOutOfRange : public Error {
public:
    ModeOutOfRange(int line, int mode, int dim)
        : Error("line " + std::to_string(line) + ": mode " + std::to_string(mode) +
                " out of range for dimension " + std::to_string(dim)),
          line_(line), mode_(mode), dim_(dim) {}
    int line() const { return line_; }
    int mode() const { return mode_; }
    int dim() const { return dim_; }

private:
    int line_;
    int mode_;
    int dim_;
};

}  // namespace ucoh
