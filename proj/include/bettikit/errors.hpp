#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bettikit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A cell of a table would become negative.
class NegativeEntry : public Error {
public:
    NegativeEntry(int p, int q);
    int p;
    int q;
};

// The column minima of a table do not form a strictly increasing sequence.
class StrandNotIncreasing : public Error {
public:
    explicit StrandNotIncreasing(int p);
    int p;
};

// A column between 0 and the projective dimension carries no entry.
class NoColumn : public Error {
public:
    explicit NoColumn(int p);
    int p;
};

// The table is not a positive rational combination of pure diagrams.
class NotInCone : public Error {
public:
    explicit NotInCone(const std::string& reason);
};

class IterationLimitExceeded : public Error {
public:
    explicit IterationLimitExceeded(std::size_t limit);
    std::size_t limit;
};

// Input text could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);
    std::size_t line;
    std::size_t column;
    std::string detail;
};

}  // namespace bettikit
