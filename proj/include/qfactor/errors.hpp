#ifndef QFACTOR_ERRORS_HPP
#define QFACTOR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfactor {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic between values of different fields (Q vs F_p, or distinct moduli).
class FieldMismatchError : public Error {
public:
    explicit FieldMismatchError(const std::string& msg) : Error(msg) {}
};

// Malformed expression or input file. `position` is a 0-based offset when known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    explicit ParseError(const std::string& msg) : Error(msg), position_(0) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A sum of terms with two different degrees where a homogeneous form is required.
class InhomogeneousError : public Error {
public:
    InhomogeneousError(unsigned deg_a, unsigned deg_b)
        : Error("inhomogeneous: mixes degrees " + std::to_string(deg_a) +
                " and " + std::to_string(deg_b)),
          deg_a_(deg_a),
          deg_b_(deg_b) {}
    unsigned degree_a() const { return deg_a_; }
    unsigned degree_b() const { return deg_b_; }

private:
    unsigned deg_a_;
    unsigned deg_b_;
};

// Inputs whose dimensions do not match the requested operation.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Search or scan exceeded its configured budget.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// A point that was required to be singular is not.
class NotSingularError : public Error {
public:
    explicit NotSingularError(const std::string& msg) : Error(msg) {}
};

}  // namespace qfactor

#endif
