#include "qpl/divisors.hpp"

#include <stdexcept>

#include "qpl/error.hpp"
#include "qpl/partitions.hpp"

namespace qpl {

namespace {

void require_order(std::int64_t order)
{
    if (order < 0)
        throw ParameterError("order must be non-negative, got " + std::to_string(order));
}

QSeries as_series(const std::vector<Integer>& v)
{
    return QSeries::from_coeffs(v);
}

} // namespace

Integer DivisorTable::at(std::int64_t n) const
{
    if (n <= 0)
        return 0;
    if (n > order())
        throw std::out_of_range("divisor table index " + std::to_string(n) + " beyond order " +
                                std::to_string(order()));
    return values[static_cast<std::size_t>(n)];
}

Integer divisor_sum(const PartSet& set, std::int64_t n)
{
    Integer total = 0;
    if (n < 1)
        return total;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        const std::int64_t e = n / d;
        if (set.contains(d))
            total += static_cast<long>(d);
        if (e != d && set.contains(e))
            total += static_cast<long>(e);
    }
    return total;
}

DivisorTable divisor_table(const PartSet& set, std::int64_t order)
{
    require_order(order);
    DivisorTable t{std::vector<Integer>(static_cast<std::size_t>(order + 1)), "scan " + set.str()};
    for (std::int64_t n = 1; n <= order; ++n)
        t.values[static_cast<std::size_t>(n)] = divisor_sum(set, n);
    return t;
}

QSeries divisor_series(const PartSet& set, std::size_t order)
{
    return as_series(divisor_table(set, static_cast<std::int64_t>(order)).values);
}

DivisorTable recursion_fkl(const ModularParams& p, std::int64_t order)
{
    p.require_interior("divisor-sum recursion for f_{k,l}");
    require_order(order);
    const auto entries = figurate_enumerate(p, order);

    std::vector<Integer> f(static_cast<std::size_t>(order + 1));
    for (const auto& e : entries) {
        // Extra term (-1)^{i-1} M(i) at n = M(i); unique i for interior params.
        if (e.j != 0)
            f[static_cast<std::size_t>(e.value)] = sign_pow(-1, e.j - 1) * static_cast<long>(e.value);
    }
    for (std::int64_t n = 1; n <= order; ++n) {
        Integer& v = f[static_cast<std::size_t>(n)];
        for (const auto& e : entries) {
            // f vanishes at 0, so the j with M(j) = n contribute nothing.
            if (e.j == 0 || e.value >= n)
                continue;
            const Integer& prev = f[static_cast<std::size_t>(n - e.value)];
            if (sign_pow(-1, e.j - 1) == 1)
                v += prev;
            else
                v -= prev;
        }
    }
    return {std::move(f), "recursion " + p.str()};
}

DivisorTable kim_fkl(const ModularParams& p, std::int64_t order)
{
    p.require_interior("Kim identity for f_{k,l}");
    require_order(order);
    const auto p_bar = gf_count(PartSet::Jbar(p), CountMode::unrestricted(), order).values;
    std::vector<Integer> f(static_cast<std::size_t>(order + 1));
    for (const auto& e : figurate_enumerate(p, order)) {
        if (e.j == 0)
            continue;
        const long weight = sign_pow(-1, e.j - 1) * static_cast<long>(e.value);
        for (std::int64_t n = e.value; n <= order; ++n)
            f[static_cast<std::size_t>(n)] += weight * p_bar[static_cast<std::size_t>(n - e.value)];
    }
    f[0] = 0;
    return {std::move(f), "kim " + p.str()};
}

VerificationReport apostol_check_tables(const std::vector<Integer>& r_dt, const std::vector<Integer>& f,
                                        std::int64_t order)
{
    VerificationReport r;
    r.identity = "apostol";
    r.order = order;
    for (std::int64_t n = 1; n <= order; ++n) {
        const Integer lhs = static_cast<long>(n) * r_dt[static_cast<std::size_t>(n)];
        Integer rhs = -f[static_cast<std::size_t>(n)];
        for (std::int64_t j = 1; j < n; ++j)
            rhs -= r_dt[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(n - j)];
        if (lhs != rhs) {
            r.failure = Mismatch{n, std::nullopt, lhs, rhs, "n r_dt(n) vs -f(n) - convolution"};
            break;
        }
    }
    return r;
}

VerificationReport apostol_convolution_check(const ModularParams& p, std::int64_t order)
{
    p.require_interior("Apostol convolution on Jbar");
    require_order(order);
    const auto r_dt = gf_count(PartSet::Jbar(p), CountMode::distinct_gamma(-1), order).values;
    const auto f = divisor_table(PartSet::Jbar(p), order).values;
    auto r = apostol_check_tables(r_dt, f, order);
    r.parameters = {{"k", p.k()}, {"l", p.ell()}};
    return r;
}

VerificationReport kim_identity_check(const ModularParams& p, std::int64_t order)
{
    p.require_interior("Kim identity on Jbar");
    require_order(order);
    VerificationReport r;
    r.identity = "kim";
    r.with("k", p.k()).with("l", p.ell());
    r.order = order;

    const auto n = static_cast<std::size_t>(order);
    const PartSet jbar = PartSet::Jbar(p);
    const QSeries F = divisor_series(jbar, n);
    const QSeries g1 = as_series(gf_count(jbar, CountMode::distinct_gamma(-1), order).values);
    const QSeries f = as_series(gf_count(jbar, CountMode::unrestricted(), order).values);

    const QSeries rhs = series_neg(series_mul(series_q_logderivative(g1), f));
    compare_into(r, F.coeffs(), rhs.coeffs(), order, "F vs -(q g1') f");

    const auto expanded = kim_fkl(p, order);
    compare_into(r, F.coeffs(), expanded.values, order, "F vs sum_j (-1)^(j-1) M(j) p(n - M(j); Jbar)");
    return r;
}

VerificationReport log_derivative_check(const ModularParams& p, std::int64_t order)
{
    p.require_interior("logarithmic-derivative relations on Jbar");
    require_order(order);
    VerificationReport r;
    r.identity = "log-derivative";
    r.with("k", p.k()).with("l", p.ell());
    r.order = order;

    const auto n = static_cast<std::size_t>(order);
    const PartSet jbar = PartSet::Jbar(p);
    const QSeries F = divisor_series(jbar, n);
    const QSeries g1 = as_series(gf_count(jbar, CountMode::distinct_gamma(-1), order).values);
    const QSeries f = as_series(gf_count(jbar, CountMode::unrestricted(), order).values);

    const QSeries qf = series_q_logderivative(f);
    const QSeries fF = series_mul(f, F);
    compare_into(r, qf.coeffs(), fF.coeffs(), order, "q f' vs f F");
    const QSeries qg = series_q_logderivative(g1);
    const QSeries Fg = series_neg(series_mul(F, g1));
    compare_into(r, qg.coeffs(), Fg.coeffs(), order, "q g1' vs -F g1");
    return r;
}

} // namespace qpl
