#include "qpl/partitions.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "qpl/error.hpp"

namespace qpl {

namespace {

constexpr std::int64_t kDefaultOracleBound = 120;
constexpr std::int64_t kLiteralBound = 30;

void require_gamma(int gamma)
{
    if (gamma != 1 && gamma != -1)
        throw ParameterError("gamma must be +1 or -1, got " + std::to_string(gamma));
}

void require_order(std::int64_t order)
{
    if (order < 0)
        throw ParameterError("order must be non-negative, got " + std::to_string(order));
}

struct Shift {
    std::int64_t exponent;
    int coeff;
};

// x(0) = 1 and, for n >= 1,
//   x(n) = sum_shifts coeff * x(n - exponent) + extra[n].
std::vector<Integer> two_branch(std::int64_t order, const std::vector<Shift>& shifts, const std::vector<Integer>& extra)
{
    std::vector<Integer> x(static_cast<std::size_t>(order + 1));
    x[0] = 1;
    for (std::int64_t n = 1; n <= order; ++n) {
        Integer& v = x[static_cast<std::size_t>(n)];
        v = extra[static_cast<std::size_t>(n)];
        for (const auto& s : shifts) {
            if (s.exponent > n)
                continue;
            const Integer& prev = x[static_cast<std::size_t>(n - s.exponent)];
            if (s.coeff == 1)
                v += prev;
            else
                v -= prev;
        }
    }
    return x;
}

// Nonzero-index terms of sum_j w(j) q^{M(j)}, i.e. the shifts of a
// recursion obtained by isolating the j = 0 term.
std::vector<Shift> figurate_shifts(const ModularParams& p, std::int64_t order, const std::function<int(std::int64_t)>& w)
{
    std::vector<Shift> shifts;
    for (const auto& e : figurate_enumerate(p, order)) {
        if (e.j != 0)
            shifts.push_back({e.value, w(e.j)});
    }
    return shifts;
}

// extra[M(i)] = w(i) for i != 0. Interior params index each value once.
std::vector<Integer> figurate_extras(const ModularParams& p, std::int64_t order, const std::function<int(std::int64_t)>& w)
{
    std::vector<Integer> extra(static_cast<std::size_t>(order + 1));
    for (const auto& e : figurate_enumerate(p, order)) {
        if (e.j != 0)
            extra[static_cast<std::size_t>(e.value)] += w(e.j);
    }
    return extra;
}

// out[n] = sum_j w(j) base[n - M(j)] over all integers j.
std::vector<Integer> figurate_convolve(const ModularParams& p, std::int64_t order, const std::vector<Integer>& base,
                                       const std::function<int(std::int64_t)>& w)
{
    std::vector<Integer> out(static_cast<std::size_t>(order + 1));
    for (const auto& e : figurate_enumerate(p, order)) {
        const int c = w(e.j);
        for (std::int64_t n = e.value; n <= order; ++n) {
            const Integer& b = base[static_cast<std::size_t>(n - e.value)];
            if (c == 1)
                out[static_cast<std::size_t>(n)] += b;
            else
                out[static_cast<std::size_t>(n)] -= b;
        }
    }
    return out;
}

std::string mode_tag(const char* name, const ModularParams& p)
{
    return std::string(name) + " " + p.str();
}

} // namespace

CountMode CountMode::at_most(std::int64_t d, Signing s)
{
    if (d < 1)
        throw ParameterError("multiplicity cap d must be >= 1, got " + std::to_string(d));
    if (d == 1)
        return distinct(s);
    return {Multiplicity::at_most, d, s};
}

CountMode CountMode::distinct_gamma(int gamma)
{
    require_gamma(gamma);
    return distinct(gamma == 1 ? Signing::plain : Signing::length_signed);
}

CountMode CountMode::unrestricted_gamma(int gamma)
{
    require_gamma(gamma);
    return unrestricted(gamma == 1 ? Signing::plain : Signing::length_signed);
}

std::optional<std::int64_t> CountMode::cap() const
{
    switch (multiplicity) {
    case Multiplicity::unrestricted:
        return std::nullopt;
    case Multiplicity::distinct:
        return 1;
    case Multiplicity::at_most:
        return d;
    }
    return std::nullopt;
}

std::string CountMode::str() const
{
    std::string m;
    switch (multiplicity) {
    case Multiplicity::unrestricted:
        m = "unrestricted";
        break;
    case Multiplicity::distinct:
        m = "distinct";
        break;
    case Multiplicity::at_most:
        m = "atmost:" + std::to_string(d);
        break;
    }
    return m + (signing == Signing::plain ? "" : ",signed");
}

const char* to_string(Provenance p)
{
    switch (p) {
    case Provenance::oracle:
        return "oracle";
    case Provenance::generating_function:
        return "generating-function";
    case Provenance::recursion:
        return "recursion";
    }
    return "?";
}

Integer SequenceTable::at(std::int64_t n) const
{
    if (n < 0)
        return 0;
    if (n > order())
        throw std::out_of_range("sequence table index " + std::to_string(n) + " beyond order " +
                                std::to_string(order()));
    return values[static_cast<std::size_t>(n)];
}

std::int64_t oracle_bound()
{
    if (const char* env = std::getenv("QPL_ORACLE_BOUND")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0)
            return v;
    }
    return kDefaultOracleBound;
}

namespace {

void require_oracle_bound(std::int64_t n, std::int64_t bound)
{
    if (n > bound)
        throw OracleBoundError("oracle refuses n = " + std::to_string(n) + " above its bound " +
                               std::to_string(bound));
}

std::vector<Integer> oracle_dp(const PartSet& set, const CountMode& mode, std::int64_t order)
{
    const auto n = static_cast<std::size_t>(order);
    const bool signed_mode = mode.signing == CountMode::Signing::length_signed;
    const auto cap = mode.cap();

    std::vector<Integer> cur(n + 1), next(n + 1);
    cur[0] = 1;
    for (const std::int64_t m : set.members_upto(order)) {
        const auto part = static_cast<std::size_t>(m);
        for (std::size_t t = 0; t <= n; ++t) {
            next[t] = 0;
            // Use the part a times, a = 0..cap, contributing (-1)^a when signed.
            for (std::size_t a = 0; a * part <= t; ++a) {
                if (cap && static_cast<std::int64_t>(a) > *cap)
                    break;
                if (signed_mode && (a % 2 == 1))
                    next[t] -= cur[t - a * part];
                else
                    next[t] += cur[t - a * part];
            }
        }
        std::swap(cur, next);
    }
    return cur;
}

} // namespace

SequenceTable oracle_table(const PartSet& set, const CountMode& mode, std::int64_t order)
{
    require_order(order);
    require_oracle_bound(order, oracle_bound());
    return {oracle_dp(set, mode, order), Provenance::oracle, set.str() + " " + mode.str()};
}

Integer oracle_count(std::int64_t n, const PartSet& set, const CountMode& mode, std::int64_t bound)
{
    if (n < 0)
        return 0;
    require_oracle_bound(n, bound);
    return oracle_dp(set, mode, n).back();
}

Integer oracle_count(std::int64_t n, const PartSet& set, const CountMode& mode)
{
    return oracle_count(n, set, mode, oracle_bound());
}

Integer literal_count(std::int64_t n, const PartSet& set, const CountMode& mode)
{
    if (n < 0)
        return 0;
    if (n > kLiteralBound)
        throw OracleBoundError("literal enumeration is limited to n <= " + std::to_string(kLiteralBound));
    const auto parts = set.members_upto(n);
    const auto cap = mode.cap();
    const bool signed_mode = mode.signing == CountMode::Signing::length_signed;

    // Walk every multiset of parts, largest part first, and tally each
    // complete partition with its sign.
    Integer total = 0;
    std::function<void(std::int64_t, std::size_t, std::int64_t)> walk = [&](std::int64_t rest, std::size_t idx,
                                                                             std::int64_t length) {
        if (rest == 0) {
            total += (signed_mode && length % 2 == 1) ? -1 : 1;
            return;
        }
        for (std::size_t i = idx; i-- > 0;) {
            const std::int64_t part = parts[i];
            for (std::int64_t a = 1; a * part <= rest; ++a) {
                if (cap && a > *cap)
                    break;
                walk(rest - a * part, i, length + a);
            }
        }
    };
    walk(n, parts.size(), 0);
    return total;
}

SequenceTable gf_count(const PartSet& set, const CountMode& mode, std::int64_t order)
{
    require_order(order);
    const auto n = static_cast<std::size_t>(order);
    // sigma is the per-occurrence weight: +1 plain, -1 length-signed.
    const long sigma = mode.signing == CountMode::Signing::plain ? 1 : -1;

    SeriesBuilder f(n);
    f[0] = 1;
    for (const std::int64_t m : set.members_upto(order)) {
        const auto e = static_cast<std::size_t>(m);
        switch (mode.multiplicity) {
        case CountMode::Multiplicity::unrestricted:
            // 1 / (1 - sigma q^m)
            f.div_binomial(-sigma, e);
            break;
        case CountMode::Multiplicity::distinct:
            // 1 + sigma q^m
            f.mul_binomial(sigma, e);
            break;
        case CountMode::Multiplicity::at_most: {
            // (1 - (sigma q^m)^{d+1}) / (1 - sigma q^m)
            const auto d1 = static_cast<std::size_t>(mode.d + 1);
            const long top = (sigma == 1 || d1 % 2 == 0) ? 1 : -1;
            f.mul_binomial(-top, d1 * e);
            f.div_binomial(-sigma, e);
            break;
        }
        }
    }
    QSeries s = f.take();
    return {std::vector<Integer>(s.coeffs().begin(), s.coeffs().end()), Provenance::generating_function,
            set.str() + " " + mode.str()};
}

SequenceTable recursion_pbar(const ModularParams& p, std::int64_t order)
{
    p.require_interior("recursion for p(n; Jbar)");
    require_order(order);
    const auto shifts = figurate_shifts(p, order, [](std::int64_t j) { return sign_pow(-1, j - 1); });
    const std::vector<Integer> none(static_cast<std::size_t>(order + 1));
    return {two_branch(order, shifts, none), Provenance::recursion, mode_tag("pbar", p)};
}

SequenceTable recursion_general(const ModularParams& p1, int gamma1, const ModularParams& p2, int gamma2,
                                std::int64_t order)
{
    p1.require_interior("quotient recursion (denominator pair)");
    p2.require_interior("quotient recursion (numerator pair)");
    require_gamma(gamma1);
    require_gamma(gamma2);
    require_order(order);
    // Denominator sum_j (-gamma1)^j q^{M1(j)}, numerator sum_i gamma2^i q^{M2(i)}.
    const auto shifts = figurate_shifts(p1, order, [gamma1](std::int64_t j) { return -sign_pow(-gamma1, j); });
    const auto extra = figurate_extras(p2, order, [gamma2](std::int64_t i) { return sign_pow(gamma2, i); });
    return {two_branch(order, shifts, extra), Provenance::recursion,
            "general " + p1.str() + " g1=" + std::to_string(gamma1) + " / " + p2.str() + " g2=" +
                std::to_string(gamma2)};
}

QSeries general_quotient_series(const ModularParams& p1, int gamma1, const ModularParams& p2, int gamma2,
                                std::size_t order)
{
    require_gamma(gamma1);
    require_gamma(gamma2);
    const QSeries numerator = triple_pochhammer(p2.k(), p2.ell(), gamma2, order);
    const QSeries denominator = triple_pochhammer(p1.k(), p1.ell(), -gamma1, order);
    if (denominator.is_zero())
        throw ParameterError("quotient denominator is identically zero for " + p1.str());
    return series_mul(numerator, series_reciprocal(denominator));
}

SequenceTable recursion_pdt_gamma(const ModularParams& p, int gamma, std::int64_t order)
{
    p.require_interior("recursion for p_dt^gamma(n; J)");
    require_gamma(gamma);
    require_order(order);
    // k w(j) = M_{3k,k}(j).
    const auto shifts = figurate_shifts(ModularParams(3 * p.k(), p.k()), order,
                                        [](std::int64_t j) { return sign_pow(-1, j - 1); });
    const auto extra = figurate_extras(p, order, [gamma](std::int64_t i) { return sign_pow(gamma, i); });
    return {two_branch(order, shifts, extra), Provenance::recursion,
            mode_tag("pdt", p) + " gamma=" + std::to_string(gamma)};
}

SequenceTable recursion_p_gamma(const ModularParams& p, int gamma, std::int64_t order)
{
    p.require_interior("recursion for p^gamma(n; J)");
    require_gamma(gamma);
    require_order(order);
    const auto shifts = figurate_shifts(p, order, [gamma](std::int64_t j) { return -sign_pow(-gamma, j); });
    const auto extra = figurate_extras(ModularParams(3 * p.k(), p.k()), order,
                                       [](std::int64_t i) { return sign_pow(-1, i); });
    return {two_branch(order, shifts, extra), Provenance::recursion,
            mode_tag("p", p) + " gamma=" + std::to_string(gamma)};
}

SequenceTable recursion_pdhat(const ModularParams& p, std::int64_t d, std::int64_t order)
{
    p.require_interior("recursion for p_dhat(n; Jbar)");
    if (d < 1)
        throw ParameterError("multiplicity cap d must be >= 1, got " + std::to_string(d));
    require_order(order);
    const auto shifts = figurate_shifts(p, order, [](std::int64_t j) { return sign_pow(-1, j - 1); });
    const auto extra = figurate_extras(p.scaled(d + 1), order, [](std::int64_t i) { return sign_pow(-1, i); });
    return {two_branch(order, shifts, extra), Provenance::recursion,
            mode_tag("pdhat", p) + " d=" + std::to_string(d)};
}

ShiftedPartitionSides shifted_partition_sides(const ModularParams& p, int gamma, std::int64_t order)
{
    p.require_interior("shifted-partition identities");
    require_gamma(gamma);
    require_order(order);
    ShiftedPartitionSides sides;
    sides.distinct_lhs = gf_count(PartSet::J(p), CountMode::distinct_gamma(gamma), order).values;
    const auto p_kI = gf_count(PartSet::multiples(p.k()), CountMode::unrestricted(), order).values;
    sides.distinct_rhs = figurate_convolve(p, order, p_kI, [gamma](std::int64_t j) { return sign_pow(gamma, j); });

    sides.unrestricted_lhs = gf_count(PartSet::J(p), CountMode::unrestricted(), order).values;
    const auto p_bar = gf_count(PartSet::Jbar(p), CountMode::unrestricted(), order).values;
    sides.unrestricted_rhs = figurate_convolve(ModularParams(3 * p.k(), p.k()), order, p_bar,
                                               [](std::int64_t j) { return sign_pow(-1, j); });
    return sides;
}

VerificationReport check_shifted_partitions(const ShiftedPartitionSides& sides, const ModularParams& p, int gamma, std::int64_t order)
{
    VerificationReport r;
    r.identity = "shifted-partitions";
    r.with("k", p.k()).with("l", p.ell()).with("gamma", gamma);
    r.order = order;
    compare_into(r, sides.distinct_lhs, sides.distinct_rhs, order, "distinct on J vs figurate shifts of p(kI)");
    compare_into(r, sides.unrestricted_lhs, sides.unrestricted_rhs, order,
                 "unrestricted on J vs pentagonal shifts of p(Jbar)");
    return r;
}

VerificationReport identity_shifted_partitions(const ModularParams& p, int gamma, std::int64_t order)
{
    return check_shifted_partitions(shifted_partition_sides(p, gamma, order), p, gamma, order);
}

CappedMultiplicitySides capped_multiplicity_sides(const ModularParams& p, std::int64_t d, std::int64_t order)
{
    p.require_interior("capped-multiplicity identity");
    require_order(order);
    CappedMultiplicitySides sides;
    sides.lhs = gf_count(PartSet::Jbar(p), CountMode::at_most(d), order).values;
    const auto p_bar = gf_count(PartSet::Jbar(p), CountMode::unrestricted(), order).values;
    sides.rhs = figurate_convolve(p.scaled(d + 1), order, p_bar, [](std::int64_t j) { return sign_pow(-1, j); });
    return sides;
}

VerificationReport check_capped_multiplicity(const CappedMultiplicitySides& sides, const ModularParams& p, std::int64_t d, std::int64_t order)
{
    VerificationReport r;
    r.identity = "capped-multiplicity";
    r.with("k", p.k()).with("l", p.ell()).with("d", d);
    r.order = order;
    compare_into(r, sides.lhs, sides.rhs, order, "p_dhat on Jbar vs figurate shifts of p(Jbar)");
    return r;
}

VerificationReport identity_capped_multiplicity(const ModularParams& p, std::int64_t d, std::int64_t order)
{
    return check_capped_multiplicity(capped_multiplicity_sides(p, d, order), p, d, order);
}

} // namespace qpl
