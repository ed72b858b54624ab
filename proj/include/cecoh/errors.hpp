#pragma once

#include <stdexcept>
#include <string>

namespace cecoh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Failure while parsing a textual form expression. `pos` is a 0-based
/// character offset into the expression.
struct FormParseError : Error {
    FormParseError(std::size_t pos_, const std::string& msg)
        : Error(msg), pos(pos_) {}
    std::size_t pos;
};

/// Failure while parsing an algebra description file.
struct ParseError : Error {
    ParseError(int line_, int col_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
    int line;
    int col;
};

/// The Jacobi identity fails on the basis triple (i, j, k).
struct JacobiError : Error {
    JacobiError(int i_, int j_, int k_)
        : Error("Jacobi identity fails on triple (" + std::to_string(i_) + ", " +
                std::to_string(j_) + ", " + std::to_string(k_) + ")"),
          i(i_), j(j_), k(k_) {}
    int i, j, k;
};

/// D is not a derivation of the bracket; (i, j) is a violating pair.
struct DerivationPairError : Error {
    DerivationPairError(int i_, int j_)
        : Error("matrix is not a bracket derivation, violated on pair (" +
                std::to_string(i_) + ", " + std::to_string(j_) + ")"),
          i(i_), j(j_) {}
    int i, j;
};

struct DegenerateError : Error {
    using Error::Error;
};

/// A generator substitution does not commute with the differential.
struct NonCommutingError : Error {
    explicit NonCommutingError(int generator_)
        : Error("substitution does not commute with d on generator e" +
                std::to_string(generator_)),
          generator(generator_) {}
    int generator;
};

struct UnknownNameError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

}  // namespace cecoh
