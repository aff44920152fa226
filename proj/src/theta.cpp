#include "qpl/theta.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpl/error.hpp"

namespace qpl {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_tol(double tol)
{
    if (!(tol > 0.0))
        throw DomainError("tolerance must be positive");
}

// Smallest T >= 1 such that the terms with |n| > T (positive side n > T,
// negative side n < -T) sum to less than tol in absolute value, given
// |q| = exp(log_q) < 1 and R = max(|z|, 1/|z|) = exp(log_r).
//
// For m >= T+1 consecutive positive-side terms have ratio |q|^m |z| <= r
// with r = |q|^{T+1} R, and the negative side is dominated term by term,
// so the tail is at most 2 |q|^{T(T+1)/2} R^{T+1} / (1 - r).
std::int64_t tail_cutoff(double log_q, double log_r, double tol)
{
    const double log_tol = std::log(tol);
    for (std::int64_t t = 1;; ++t) {
        const double td = static_cast<double>(t);
        const double log_ratio = (td + 1.0) * log_q + log_r;
        if (log_ratio > std::log(0.5))
            continue;
        const double ratio = std::exp(log_ratio);
        const double log_bound =
            std::log(2.0) + 0.5 * td * (td + 1.0) * log_q + (td + 1.0) * log_r - std::log1p(-ratio);
        if (log_bound < log_tol)
            return t;
    }
}

void require_point(Complex q, Complex z)
{
    if (!(std::abs(q) < 1.0))
        throw DomainError("theta functions need |q| < 1, got |q| = " + std::to_string(std::abs(q)));
    if (z == Complex(0.0, 0.0))
        throw DomainError("theta functions need z != 0");
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag()) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("theta arguments must be finite");
}

Complex series_at(Complex q, Complex z, double tol)
{
    require_point(q, z);
    require_tol(tol);
    if (q == Complex(0.0, 0.0))
        return 1.0 + z;
    const double log_q = std::log(std::abs(q));
    const double log_r = std::abs(std::log(std::abs(z)));
    const std::int64_t t = tail_cutoff(log_q, log_r, tol);

    // Positive side: term(n+1) = term(n) q^n z. Negative side with m = -n:
    // term(-(m+1)) = term(-m) q^{m+1} / z.
    Complex pos_sum = 0.0, neg_sum = 0.0;
    Complex term = 1.0, qn = 1.0;
    for (std::int64_t n = 0; n <= t; ++n) {
        pos_sum += term;
        term *= qn * z;
        qn *= q;
    }
    const Complex zinv = 1.0 / z;
    term = 1.0;
    qn = q;
    for (std::int64_t m = 1; m <= t; ++m) {
        term *= qn * zinv;
        neg_sum += term;
        qn *= q;
    }
    return pos_sum + neg_sum;
}

} // namespace

ThetaPoint::ThetaPoint(Complex q, Complex z) : q_(q), z_(z)
{
    require_point(q, z);
}

ThetaPoint ThetaPoint::from_tau(Complex nu, Complex tau)
{
    if (!(tau.imag() > 0.0))
        throw DomainError("tau needs a positive imaginary part");
    return ThetaPoint(std::exp(kTwoPi * kI * tau), std::exp(kTwoPi * kI * nu));
}

Complex theta_series(const ThetaPoint& pt, double tol)
{
    return series_at(pt.q(), pt.z(), tol);
}

Complex theta_series_tau(Complex nu, Complex tau, double tol)
{
    if (!(tau.imag() > 0.0))
        throw DomainError("tau needs a positive imaginary part");
    require_tol(tol);
    // |q| = exp(-2 pi Im tau), |z| = exp(-2 pi Im nu).
    const double log_q = -kTwoPi * tau.imag();
    const double log_r = std::abs(kTwoPi * nu.imag());
    const std::int64_t t = tail_cutoff(log_q, log_r, tol);
    Complex sum = 0.0;
    for (std::int64_t n = -t; n <= t; ++n) {
        const double tri = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
        sum += std::exp(kTwoPi * kI * (tri * tau + static_cast<double>(n) * nu));
    }
    return sum;
}

Complex theta_product(const ThetaPoint& pt, std::int64_t factors)
{
    if (factors < 1)
        throw DomainError("theta product needs at least one factor");
    const Complex q = pt.q();
    const Complex zinv = 1.0 / pt.z();
    Complex prod = 1.0;
    Complex qm1 = 1.0; // q^{m-1}
    for (std::int64_t m = 1; m <= factors; ++m) {
        const Complex qm = qm1 * q;
        prod *= (1.0 - qm) * (1.0 + qm * zinv) * (1.0 + qm1 * pt.z());
        qm1 = qm;
    }
    return prod;
}

Complex aux_theta(ThetaVariant v, const ThetaPoint& pt, double tol)
{
    const Complex q = pt.q();
    const Complex z = pt.z();
    switch (v) {
    case ThetaVariant::a:
        return series_at(q, z, tol);
    case ThetaVariant::b:
        return series_at(q, -z, tol);
    case ThetaVariant::c:
    case ThetaVariant::d: {
        if (q == Complex(0.0, 0.0))
            throw DomainError("theta variants c and d are undefined at q = 0");
        const Complex shift = std::sqrt(q) * z;
        const Complex prefactor = std::pow(q, -0.125) * std::sqrt(z);
        return prefactor * series_at(q, v == ThetaVariant::c ? shift : -shift, tol);
    }
    }
    return 0.0;
}

std::pair<double, double> quasi_periodicity_residual(const ThetaPoint& pt, double tol)
{
    const Complex q = pt.q();
    const Complex z = pt.z();
    if (q == Complex(0.0, 0.0))
        throw DomainError("quasi-periodicity check excludes q = 0");
    const double shift = std::abs(series_at(q, q * z, tol) - series_at(q, z, tol) / z);

    const Complex tau = std::log(q) / (kTwoPi * kI);
    const Complex nu = std::log(z) / (kTwoPi * kI);
    const double period = std::abs(theta_series_tau(nu + 1.0, tau, tol) - theta_series_tau(nu, tau, tol));
    return {shift, period};
}

namespace {

ThetaPoint substituted(const ThetaClassParams& params, const ThetaPoint& pt)
{
    if (params.k < 1 || params.ell < 0)
        throw DomainError("theta class needs k >= 1 and l >= 0");
    Complex qk = 1.0, ql = 1.0;
    for (std::int64_t i = 0; i < params.k; ++i)
        qk *= pt.q();
    for (std::int64_t i = 0; i < params.ell; ++i)
        ql *= pt.q();
    return ThetaPoint(qk, ql * pt.z());
}

} // namespace

Complex theta_class(const ThetaClassParams& params, ThetaVariant v, const ThetaPoint& pt, double tol)
{
    return aux_theta(v, substituted(params, pt), tol);
}

double theta_class_residual(const ThetaClassParams& params, const ThetaPoint& pt, double tol)
{
    const ThetaPoint base = substituted(params, pt);
    // q^{-l} z^{-1} is 1 / base.z().
    const Complex qk = base.q();
    const Complex shifted = series_at(qk, qk * base.z(), tol);
    return std::abs(shifted - series_at(qk, base.z(), tol) / base.z());
}

ThetaVariant parse_theta_variant(char c)
{
    switch (c) {
    case 'a':
        return ThetaVariant::a;
    case 'b':
        return ThetaVariant::b;
    case 'c':
        return ThetaVariant::c;
    case 'd':
        return ThetaVariant::d;
    }
    throw DomainError(std::string("unknown theta variant '") + c + "'");
}

} // namespace qpl
