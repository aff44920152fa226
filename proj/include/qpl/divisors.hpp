#ifndef QPL_DIVISORS_HPP
#define QPL_DIVISORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qpl/integer.hpp"
#include "qpl/numbers.hpp"
#include "qpl/partsets.hpp"
#include "qpl/qseries.hpp"
#include "qpl/report.hpp"

namespace qpl {

/// f_J(1..N); slot 0 holds f_J(0) = 0 so indices line up with n.
struct DivisorTable {
    std::vector<Integer> values;
    std::string descriptor;

    std::int64_t order() const noexcept { return static_cast<std::int64_t>(values.size()) - 1; }
    /// Zero for n <= 0.
    Integer at(std::int64_t n) const;
};

/// Sum of the divisors of n that lie in `set`; 0 for n < 1.
Integer divisor_sum(const PartSet& set, std::int64_t n);

/// divisor_sum for n = 0..order by direct divisor scans.
DivisorTable divisor_table(const PartSet& set, std::int64_t order);

/// f_{k,l}(n) (divisor sum restricted to Jbar_{k,l}) by the alternating
/// figurate recursion.
DivisorTable recursion_fkl(const ModularParams& p, std::int64_t order);

/// f_{k,l}(n) = sum_j (-1)^{j-1} M(j) p(n - M(j); Jbar), read off from
/// F = -q g1' f.
DivisorTable kim_fkl(const ModularParams& p, std::int64_t order);

/// n r_dt(n) = -f(n) - sum_{j=1}^{n-1} r_dt(j) f(n-j) for 1 <= n <= order.
VerificationReport apostol_check_tables(const std::vector<Integer>& r_dt, const std::vector<Integer>& f,
                                        std::int64_t order);
VerificationReport apostol_convolution_check(const ModularParams& p, std::int64_t order);

/// Series relation F = -(q g1') f on Jbar_{k,l} plus its expanded form.
VerificationReport kim_identity_check(const ModularParams& p, std::int64_t order);

/// The two logarithmic-derivative relations q f' = f F and q g1' = -F g1.
VerificationReport log_derivative_check(const ModularParams& p, std::int64_t order);

/// Generating function F(q) = sum_{n>=1} f_J(n) q^n.
QSeries divisor_series(const PartSet& set, std::size_t order);

} // namespace qpl

#endif
