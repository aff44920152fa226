#ifndef QPL_ERROR_HPP
#define QPL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qpl {

// Binary series operation on operands truncated at different orders.
class OrderMismatch : public std::invalid_argument {
public:
    OrderMismatch(std::size_t lhs, std::size_t rhs)
        : std::invalid_argument("order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
          lhs_(lhs), rhs_(rhs) {}
    std::size_t lhs() const noexcept { return lhs_; }
    std::size_t rhs() const noexcept { return rhs_; }

private:
    std::size_t lhs_;
    std::size_t rhs_;
};

// Series reciprocal requested for a constant term other than +1 or -1.
class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Parameters violate the hypothesis of the requested formula (e.g. a
// recursion that only holds for interior (k, l)).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Numeric evaluation outside |q| < 1, z != 0.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Brute-force oracle asked for n above its configured cap.
class OracleBoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace qpl

#endif
