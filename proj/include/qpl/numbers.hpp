#ifndef QPL_NUMBERS_HPP
#define QPL_NUMBERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qpl/integer.hpp"

namespace qpl {

enum class ParamClass {
    interior,      // k >= 3, 0 < l < k, l != k/2
    boundary_zero, // l == 0 or l == k
    boundary_half, // k even, l == k/2
};

const char* to_string(ParamClass c);

/// Modulus k and residue l of a modular arithmetic progression, 0 <= l <= k.
///
/// l is kept in the full range rather than folded to l <= k/2. For k = 1, 2
/// every admissible l falls into a boundary class.
class ModularParams {
public:
    ModularParams(std::int64_t k, std::int64_t ell);

    std::int64_t k() const noexcept { return k_; }
    std::int64_t ell() const noexcept { return ell_; }
    ParamClass cls() const noexcept { return cls_; }
    bool is_interior() const noexcept { return cls_ == ParamClass::interior; }

    /// (k, k - l)
    ModularParams mirrored() const { return ModularParams(k_, k_ - ell_); }
    /// (c k, c l)
    ModularParams scaled(std::int64_t c) const;

    /// Throws ParameterError naming `what` when the pair is not interior.
    void require_interior(const std::string& what) const;

    std::string str() const;

    friend bool operator==(const ModularParams&, const ModularParams&) = default;

private:
    std::int64_t k_;
    std::int64_t ell_;
    ParamClass cls_;
};

/// i-th term k(i-1) + l of the progression, i >= 1.
std::int64_t gnomon(const ModularParams& p, std::int64_t i);

/// Modular figurate number (k/2) j (j-1) + l j for any integer j.
std::int64_t figurate(const ModularParams& p, std::int64_t j);

/// General pentagonal number, figurate((3, 1), j).
std::int64_t pentagonal(std::int64_t j);

struct FigurateEntry {
    std::int64_t j;
    std::int64_t value;
    friend bool operator==(const FigurateEntry&, const FigurateEntry&) = default;
};

/// Every (j, M(j)) with 0 <= M(j) <= bound, sorted by value then j. For
/// boundary params the colliding index pairs are all reported.
std::vector<FigurateEntry> figurate_enumerate(const ModularParams& p, std::int64_t bound);

/// Polynomial in q with explicit coefficients; the zero polynomial is empty.
struct QPolynomial {
    std::vector<Integer> coeffs;

    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs.size()) - 1; }
    /// Value at q = 1.
    Integer sum() const;

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
};

/// Gaussian binomial [n choose m]_q; zero when m < 0 or m > n.
QPolynomial gaussian_binomial(std::int64_t n, std::int64_t m);

} // namespace qpl

#endif
