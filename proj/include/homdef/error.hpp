#pragma once

#include <stdexcept>
#include <string>

namespace homdef {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values live in different parameter contexts.
struct context_mismatch : error {
    using error::error;
};

/// Division by the zero scalar.
struct division_by_zero : error {
    using error::error;
};

/// A parameter binding makes a denominator vanish.
struct singular_specialization : error {
    using error::error;
};

/// Dimensions of the operands do not line up.
struct dimension_mismatch : error {
    using error::error;
};

/// An operation was asked for on data of the wrong flavor
/// (e.g. a Malcev check on a non-skewsymmetric table).
struct flavor_mismatch : error {
    using error::error;
};

/// A documented precondition of an operation failed.
struct precondition_error : error {
    using error::error;
};

/// An operation that needs numeric (rational) scalars met symbolic ones.
struct not_numeric : error {
    using error::error;
};

/// Quotient of subspaces where the would-be subspace is not contained.
struct containment_error : error {
    using error::error;
};

/// Syntax error while reading an expression or a spec file.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : error(msg + " at line " + std::to_string(line_) + ", column " +
                std::to_string(column_)),
          line(line_),
          column(column_) {}
};

} // namespace homdef
