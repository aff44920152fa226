#ifndef QPL_QSERIES_HPP
#define QPL_QSERIES_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <json.hpp>

#include "qpl/integer.hpp"

namespace qpl {

/// Formal power series in q truncated at an inclusive order N.
///
/// Coefficients 0..N are always materialized. Binary operations require
/// both operands to carry the same order and throw OrderMismatch otherwise;
/// use series_truncate to bring operands to a common order explicitly.
class QSeries {
public:
    /// Zero series of the given order.
    explicit QSeries(std::size_t order) : coeffs_(order + 1) {}

    static QSeries one(std::size_t order);
    static QSeries monomial(std::size_t order, std::size_t exponent, const Integer& c = 1);
    /// Takes ownership of coefficients 0..size-1; order becomes size-1.
    static QSeries from_coeffs(std::vector<Integer> coeffs);
    /// Small-integer convenience: missing trailing coefficients are zero,
    /// extra ones beyond order are dropped.
    static QSeries from_ints(std::size_t order, std::initializer_list<long> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Integer& operator[](std::size_t n) const { return coeffs_[n]; }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    QSeries() = default;
    std::vector<Integer> coeffs_;

    friend class SeriesBuilder;
};

/// Mutable staging buffer for building a QSeries in place; kernels use it to
/// avoid repeated copies, then freeze the result with take().
class SeriesBuilder {
public:
    explicit SeriesBuilder(std::size_t order) : coeffs_(order + 1) {}
    explicit SeriesBuilder(const QSeries& from) : coeffs_(from.coeffs_) {}

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    Integer& operator[](std::size_t n) { return coeffs_[n]; }
    const Integer& operator[](std::size_t n) const { return coeffs_[n]; }

    /// Multiplies by (1 + c*q^e) in place. e = 0 is allowed.
    void mul_binomial(long c, std::size_t e);
    /// Divides by (1 + c*q^e) in place; requires e >= 1 or 1 + c = +-1.
    void div_binomial(long c, std::size_t e);

    QSeries take();

private:
    std::vector<Integer> coeffs_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_neg(const QSeries& a);
QSeries series_scale(const QSeries& a, const Integer& c);

/// Cauchy product truncated at the shared order. Dispatches between the
/// schoolbook and Karatsuba kernels; both are exposed for cross-validation.
QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_mul_schoolbook(const QSeries& a, const QSeries& b);
QSeries series_mul_karatsuba(const QSeries& a, const QSeries& b);

/// Multiplicative inverse; a[0] must be +1 or -1.
QSeries series_reciprocal(const QSeries& a);

/// q -> q^k substitution at the same order.
QSeries series_dilate(const QSeries& a, std::size_t k);

/// q * d/dq, i.e. coefficient n becomes n * a[n].
QSeries series_q_logderivative(const QSeries& a);

/// Drops coefficients above `order`; order must not exceed a.order().
QSeries series_truncate(const QSeries& a, std::size_t order);

/// Product of (1 - q^{km})(1 + sign q^{km-l})(1 + sign q^{k(m-1)+l}) over
/// m >= 1, expanded to the given order. Factors whose exponent exceeds the
/// order are skipped; they cannot affect retained coefficients.
QSeries triple_pochhammer(std::int64_t k, std::int64_t ell, int sign, std::size_t order);

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);

/// {"order": N, "coeffs": ["1", "-1", ...]}
nlohmann::json to_json(const QSeries& a);
QSeries series_from_json(const nlohmann::json& j);

/// Laurent polynomial in z whose coefficients are truncated q-series sharing
/// one order. Support [lo, hi] is explicit and may contain zero entries.
class ZLaurentSeries {
public:
    ZLaurentSeries(std::int64_t lo, std::int64_t hi, std::size_t order);
    /// zcoeffs[i] is the coefficient of z^(lo+i); all must share one order.
    ZLaurentSeries(std::int64_t lo, std::vector<QSeries> zcoeffs);

    std::int64_t lo() const noexcept { return lo_; }
    std::int64_t hi() const noexcept { return lo_ + static_cast<std::int64_t>(zcoeffs_.size()) - 1; }
    std::size_t order() const noexcept { return order_; }

    /// Coefficient of z^d; the zero series when d is outside the support.
    QSeries coeff(std::int64_t d) const;
    /// Coefficients lo..hi in order.
    std::span<const QSeries> zcoeffs() const noexcept { return zcoeffs_; }
    bool is_zero() const;

    /// Equal as Laurent polynomials: supports may differ by zero entries.
    friend bool operator==(const ZLaurentSeries& a, const ZLaurentSeries& b);

private:
    std::int64_t lo_;
    std::size_t order_;
    std::vector<QSeries> zcoeffs_;
};

/// Full Laurent convolution with support (lo1+lo2, hi1+hi2).
ZLaurentSeries laurent_mul(const ZLaurentSeries& a, const ZLaurentSeries& b);

/// Same convolution restricted to z-exponents in [lo, hi]; coefficients
/// outside the window are never computed.
ZLaurentSeries laurent_mul(const ZLaurentSeries& a, const ZLaurentSeries& b, std::int64_t lo,
                           std::int64_t hi);

} // namespace qpl

#endif
