#ifndef QPL_THETA_HPP
#define QPL_THETA_HPP

#include <complex>
#include <cstdint>
#include <utility>

namespace qpl {

using Complex = std::complex<double>;

/// Evaluation point (q, z) with |q| < 1 and z != 0.
class ThetaPoint {
public:
    ThetaPoint(Complex q, Complex z);
    /// q = exp(2 pi i tau), z = exp(2 pi i nu); requires Im(tau) > 0.
    static ThetaPoint from_tau(Complex nu, Complex tau);

    Complex q() const noexcept { return q_; }
    Complex z() const noexcept { return z_; }

private:
    Complex q_;
    Complex z_;
};

enum class ThetaVariant { a, b, c, d };

/// Substitution q -> q^k, z -> q^l z.
struct ThetaClassParams {
    std::int64_t k = 1;
    std::int64_t ell = 0;
};

/// sum_n q^{n(n-1)/2} z^n, truncated once a geometric tail bound drops
/// below tol.
Complex theta_series(const ThetaPoint& pt, double tol);

/// The same function in the tau picture:
///   sum_n exp(2 pi i (n(n-1)/2 tau + n nu)).
Complex theta_series_tau(Complex nu, Complex tau, double tol);

/// prod_{m=1}^{factors} (1 - q^m)(1 + q^m / z)(1 + q^{m-1} z)
Complex theta_product(const ThetaPoint& pt, std::int64_t factors);

/// Auxiliary functions
///   a: T(z|q)   b: T(-z|q)
///   c: q^{-1/8} z^{1/2} T(q^{1/2} z|q)   d: q^{-1/8} z^{1/2} T(-q^{1/2} z|q)
/// with principal branches of every fractional power. Variants c and d
/// are undefined at q = 0.
Complex aux_theta(ThetaVariant v, const ThetaPoint& pt, double tol);

/// (|T(qz|q) - T(z|q)/z|, |T(nu+1; tau) - T(nu; tau)|). q = 0 is rejected:
/// the relation degenerates there.
std::pair<double, double> quasi_periodicity_residual(const ThetaPoint& pt, double tol);

/// aux_theta after q -> q^k, z -> q^l z.
Complex theta_class(const ThetaClassParams& params, ThetaVariant v, const ThetaPoint& pt, double tol);

/// |T_c(q^k z) - q^{-l} z^{-1} T_c(z)| for T_c(z) = T(q^l z | q^k).
double theta_class_residual(const ThetaClassParams& params, const ThetaPoint& pt, double tol);

ThetaVariant parse_theta_variant(char c);

} // namespace qpl

#endif
