#ifndef QPL_IDENTITIES_HPP
#define QPL_IDENTITIES_HPP

#include <cstdint>
#include <vector>

#include "qpl/numbers.hpp"
#include "qpl/report.hpp"

namespace qpl {

/// Expands prod_{m=1}^{M} (1 - q^m)(1 + q^m/z)(1 + q^{m-1} z) with
/// M = order + window + 2 and compares the z^j coefficient, |j| <= window,
/// against q^{(j^2 - j)/2} through q-exponent `order`.
VerificationReport verify_triple_product(std::int64_t order, std::int64_t window);

/// triple_pochhammer(k, l, sign) against sum_j sign^j q^{M_{k,l}(j)}.
VerificationReport verify_specialized(const ModularParams& p, int sign, std::int64_t order);

/// Both signs of the (k, 1) specialization (polygonal numbers with k + 2 sides).
VerificationReport verify_berger(std::int64_t k, std::int64_t order);

/// Exact finite identity
///   prod_{m=1}^{s} (1 + q^m/z)(1 + q^{m-1} z) = sum_{|j|<=s} [2s, s+j]_q q^{(j^2-j)/2} z^j
/// plus, for each (k, l) in `grid`, the generating functions of signed and
/// plain distinct partitions into J_{k,l,s} against the dilated Gaussian sum
/// (cross-checked with the oracle up to its bound).
VerificationReport verify_hermite(std::int64_t s, const std::vector<ModularParams>& grid);
VerificationReport verify_hermite(std::int64_t s);

/// For even k, the quotient identity with sum_j q^{(k/2) j^2} and the
/// product identity equal to 1.
VerificationReport verify_boundary_half(std::int64_t k, std::int64_t order);

/// Signed distinct partitions on Jbar_{k,l} against the signed figurate
/// indicator.
VerificationReport verify_signed_distinct(const ModularParams& p, std::int64_t order);

/// Recursions against generating-function expansions (and the oracle up to
/// its bound where applicable).
VerificationReport verify_pbar_recursion(const ModularParams& p, std::int64_t order);
VerificationReport verify_quotient_recursion(const ModularParams& p1, int gamma1, const ModularParams& p2,
                                             int gamma2, std::int64_t order);
VerificationReport verify_pdt_recursion(const ModularParams& p, int gamma, std::int64_t order);
VerificationReport verify_p_gamma_recursion(const ModularParams& p, int gamma, std::int64_t order);
VerificationReport verify_pdhat_recursion(const ModularParams& p, std::int64_t d, std::int64_t order);
VerificationReport verify_divisor_recursion(const ModularParams& p, std::int64_t order);

struct GridOptions {
    std::int64_t k_min = 3;
    std::int64_t k_max = 6;
    std::int64_t order = 200;
    std::int64_t window = 8;
    unsigned jobs = 1;
};

/// Every check over the k-grid, run on up to `jobs` worker threads and
/// returned in sorted order.
std::vector<VerificationReport> verify_all(const GridOptions& options);

} // namespace qpl

#endif
