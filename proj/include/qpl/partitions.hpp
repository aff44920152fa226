#ifndef QPL_PARTITIONS_HPP
#define QPL_PARTITIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpl/integer.hpp"
#include "qpl/numbers.hpp"
#include "qpl/partsets.hpp"
#include "qpl/qseries.hpp"
#include "qpl/report.hpp"

namespace qpl {

/// How parts may repeat and whether partitions are weighted by (-1)^length.
struct CountMode {
    enum class Multiplicity { unrestricted, distinct, at_most };
    enum class Signing { plain, length_signed };

    Multiplicity multiplicity = Multiplicity::unrestricted;
    std::int64_t d = 0; // at_most only
    Signing signing = Signing::plain;

    static CountMode unrestricted(Signing s = Signing::plain) { return {Multiplicity::unrestricted, 0, s}; }
    static CountMode distinct(Signing s = Signing::plain) { return {Multiplicity::distinct, 1, s}; }
    /// at_most(1) is normalized to distinct.
    static CountMode at_most(std::int64_t d, Signing s = Signing::plain);
    /// distinct with gamma = +1 (plain) or -1 (length-signed).
    static CountMode distinct_gamma(int gamma);
    static CountMode unrestricted_gamma(int gamma);

    /// Per-part multiplicity cap; nullopt when unrestricted.
    std::optional<std::int64_t> cap() const;
    int gamma() const noexcept { return signing == Signing::plain ? 1 : -1; }
    std::string str() const;

    friend bool operator==(const CountMode&, const CountMode&) = default;
};

enum class Provenance { oracle, generating_function, recursion };

const char* to_string(Provenance p);

/// Prefix 0..N of an integer sequence together with how it was produced.
struct SequenceTable {
    std::vector<Integer> values;
    Provenance provenance = Provenance::oracle;
    std::string descriptor;

    std::int64_t order() const noexcept { return static_cast<std::int64_t>(values.size()) - 1; }
    /// Zero for negative n.
    Integer at(std::int64_t n) const;
};

/// Default 120; the QPL_ORACLE_BOUND environment variable overrides it.
std::int64_t oracle_bound();

/// Bounded-multiplicity DP over members_upto(set, n). Throws
/// OracleBoundError when n exceeds `bound`.
Integer oracle_count(std::int64_t n, const PartSet& set, const CountMode& mode);
Integer oracle_count(std::int64_t n, const PartSet& set, const CountMode& mode, std::int64_t bound);
SequenceTable oracle_table(const PartSet& set, const CountMode& mode, std::int64_t order);

/// Literal enumeration of every partition; validates the DP for n <= 30.
Integer literal_count(std::int64_t n, const PartSet& set, const CountMode& mode);

/// Expansion of the product generating function to the given order.
SequenceTable gf_count(const PartSet& set, const CountMode& mode, std::int64_t order);

/// p(n; Jbar_{k,l}) by the alternating figurate recursion.
SequenceTable recursion_pbar(const ModularParams& p, std::int64_t order);

/// Coefficients of the quotient
///   (q^k2, -g2 q^{k2-l2}, -g2 q^l2; q^k2) / (q^k1, g1 q^{k1-l1}, g1 q^l1; q^k1)
/// by the two-branch recursion.
SequenceTable recursion_general(const ModularParams& p1, int gamma1, const ModularParams& p2, int gamma2,
                                std::int64_t order);

/// Same quotient by direct series division; independent of the recursion.
QSeries general_quotient_series(const ModularParams& p1, int gamma1, const ModularParams& p2, int gamma2,
                                std::size_t order);

/// p_dt^gamma(n; J_{k,l}): distinct parts, gamma = -1 weights by (-1)^length.
SequenceTable recursion_pdt_gamma(const ModularParams& p, int gamma, std::int64_t order);

/// p^gamma(n; J_{k,l}): unrestricted parts, gamma = -1 weights by (-1)^length.
SequenceTable recursion_p_gamma(const ModularParams& p, int gamma, std::int64_t order);

/// p_dhat(n; Jbar_{k,l}): no part repeated more than d times.
SequenceTable recursion_pdhat(const ModularParams& p, std::int64_t d, std::int64_t order);

/// Both sides of the two identities
///   p_dt^gamma(n; J) = sum_j gamma^j p(n - M(j); kI)
///   p(n; J)          = sum_j (-1)^j p(n - k w(j); Jbar)
struct ShiftedPartitionSides {
    std::vector<Integer> distinct_lhs, distinct_rhs;
    std::vector<Integer> unrestricted_lhs, unrestricted_rhs;
};
ShiftedPartitionSides shifted_partition_sides(const ModularParams& p, int gamma, std::int64_t order);
VerificationReport check_shifted_partitions(const ShiftedPartitionSides& sides, const ModularParams& p, int gamma, std::int64_t order);
VerificationReport identity_shifted_partitions(const ModularParams& p, int gamma, std::int64_t order);

/// p_dhat(n; Jbar) = sum_j (-1)^j p(n - (d+1) M(j); Jbar)
struct CappedMultiplicitySides {
    std::vector<Integer> lhs, rhs;
};
CappedMultiplicitySides capped_multiplicity_sides(const ModularParams& p, std::int64_t d, std::int64_t order);
VerificationReport check_capped_multiplicity(const CappedMultiplicitySides& sides, const ModularParams& p, std::int64_t d,
                               std::int64_t order);
VerificationReport identity_capped_multiplicity(const ModularParams& p, std::int64_t d, std::int64_t order);

} // namespace qpl

#endif
