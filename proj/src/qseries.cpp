#include "qpl/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qpl/error.hpp"

namespace qpl {

namespace {

void require_same_order(const QSeries& a, const QSeries& b)
{
    if (a.order() != b.order())
        throw OrderMismatch(a.order(), b.order());
}

// Below this length Karatsuba recursion falls back to schoolbook.
constexpr std::size_t kKaratsubaThreshold = 48;

// out[0..2n-2] += a[0..n-1] * b[0..n-1]
void schoolbook_acc(const Integer* a, const Integer* b, std::size_t n, Integer* out)
{
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
}

// out[0..2n-2] = a * b, out zero-initialized by the caller.
void karatsuba(const Integer* a, const Integer* b, std::size_t n, Integer* out)
{
    if (n <= kKaratsubaThreshold) {
        schoolbook_acc(a, b, n, out);
        return;
    }
    const std::size_t lo = n / 2;
    const std::size_t hi = n - lo;

    // a = a0 + x^lo a1, b = b0 + x^lo b1 with len(a1) = hi >= lo.
    std::vector<Integer> asum(hi), bsum(hi);
    for (std::size_t i = 0; i < hi; ++i) {
        asum[i] = a[lo + i];
        bsum[i] = b[lo + i];
        if (i < lo) {
            asum[i] += a[i];
            bsum[i] += b[i];
        }
    }

    std::vector<Integer> z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
    karatsuba(a, b, lo, z0.data());
    karatsuba(a + lo, b + lo, hi, z2.data());
    karatsuba(asum.data(), bsum.data(), hi, z1.data());

    for (std::size_t i = 0; i < z0.size(); ++i)
        z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i)
        z1[i] -= z2[i];

    for (std::size_t i = 0; i < z0.size(); ++i)
        out[i] += z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i)
        out[lo + i] += z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i)
        out[2 * lo + i] += z2[i];
}

} // namespace

namespace {

std::vector<std::size_t> nonzero_indices(const QSeries& a)
{
    std::vector<std::size_t> idx;
    for (std::size_t n = 0; n <= a.order(); ++n) {
        if (sgn(a[n]) != 0)
            idx.push_back(n);
    }
    return idx;
}

// out += a * b truncated at out.order(), iterating the sparser operand.
void mul_acc_sparse(const QSeries& a, const QSeries& b, SeriesBuilder& out)
{
    const std::size_t order = out.order();
    const auto ia = nonzero_indices(a);
    const auto ib = nonzero_indices(b);
    const auto& outer = ia.size() <= ib.size() ? ia : ib;
    const auto& inner = ia.size() <= ib.size() ? ib : ia;
    const QSeries& x = ia.size() <= ib.size() ? a : b;
    const QSeries& y = ia.size() <= ib.size() ? b : a;
    for (std::size_t i : outer) {
        for (std::size_t j : inner) {
            if (i + j > order)
                break;
            mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
        }
    }
}

} // namespace

QSeries QSeries::one(std::size_t order)
{
    QSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::monomial(std::size_t order, std::size_t exponent, const Integer& c)
{
    QSeries s(order);
    if (exponent <= order)
        s.coeffs_[exponent] = c;
    return s;
}

QSeries QSeries::from_coeffs(std::vector<Integer> coeffs)
{
    if (coeffs.empty())
        throw std::invalid_argument("QSeries needs at least one coefficient");
    QSeries s;
    s.coeffs_ = std::move(coeffs);
    return s;
}

QSeries QSeries::from_ints(std::size_t order, std::initializer_list<long> coeffs)
{
    QSeries s(order);
    std::size_t n = 0;
    for (long c : coeffs) {
        if (n > order)
            break;
        s.coeffs_[n++] = c;
    }
    return s;
}

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

void SeriesBuilder::mul_binomial(long c, std::size_t e)
{
    if (c == 0)
        return;
    const std::size_t n = order();
    if (e == 0) {
        for (auto& v : coeffs_)
            v *= (1 + c);
        return;
    }
    if (e > n)
        return;
    for (std::size_t t = n; t >= e; --t) {
        if (c > 0)
            mpz_addmul_ui(coeffs_[t].get_mpz_t(), coeffs_[t - e].get_mpz_t(), static_cast<unsigned long>(c));
        else
            mpz_submul_ui(coeffs_[t].get_mpz_t(), coeffs_[t - e].get_mpz_t(), static_cast<unsigned long>(-c));
    }
}

void SeriesBuilder::div_binomial(long c, std::size_t e)
{
    if (c == 0)
        return;
    const std::size_t n = order();
    if (e == 0) {
        if (1 + c != 1 && 1 + c != -1)
            throw NotInvertible("division by constant " + std::to_string(1 + c));
        // 1 + c is now -1 (c == -2).
        for (auto& v : coeffs_)
            v = -v;
        return;
    }
    for (std::size_t t = e; t <= n; ++t) {
        if (c > 0)
            mpz_submul_ui(coeffs_[t].get_mpz_t(), coeffs_[t - e].get_mpz_t(), static_cast<unsigned long>(c));
        else
            mpz_addmul_ui(coeffs_[t].get_mpz_t(), coeffs_[t - e].get_mpz_t(), static_cast<unsigned long>(-c));
    }
}

QSeries SeriesBuilder::take()
{
    return QSeries::from_coeffs(std::move(coeffs_));
}

QSeries series_add(const QSeries& a, const QSeries& b)
{
    require_same_order(a, b);
    SeriesBuilder r(a);
    for (std::size_t n = 0; n <= a.order(); ++n)
        r[n] += b[n];
    return r.take();
}

QSeries series_sub(const QSeries& a, const QSeries& b)
{
    require_same_order(a, b);
    SeriesBuilder r(a);
    for (std::size_t n = 0; n <= a.order(); ++n)
        r[n] -= b[n];
    return r.take();
}

QSeries series_neg(const QSeries& a)
{
    SeriesBuilder r(a);
    for (std::size_t n = 0; n <= a.order(); ++n)
        r[n] = -r[n];
    return r.take();
}

QSeries series_scale(const QSeries& a, const Integer& c)
{
    SeriesBuilder r(a);
    for (std::size_t n = 0; n <= a.order(); ++n)
        r[n] *= c;
    return r.take();
}

QSeries series_mul_schoolbook(const QSeries& a, const QSeries& b)
{
    require_same_order(a, b);
    const std::size_t order = a.order();
    SeriesBuilder r(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r.take();
}

QSeries series_mul_karatsuba(const QSeries& a, const QSeries& b)
{
    require_same_order(a, b);
    const std::size_t n = a.order() + 1;
    std::vector<Integer> full(2 * n - 1);
    karatsuba(a.coeffs().data(), b.coeffs().data(), n, full.data());
    full.resize(n);
    return QSeries::from_coeffs(std::move(full));
}

QSeries series_mul(const QSeries& a, const QSeries& b)
{
    require_same_order(a, b);
    // Sparse operands (products of binomials, figurate indicators) are much
    // cheaper with the zero-skipping schoolbook loop.
    const auto nonzero = static_cast<std::size_t>(
        std::count_if(a.coeffs().begin(), a.coeffs().end(), [](const Integer& c) { return sgn(c) != 0; }));
    if (a.order() + 1 <= 4 * kKaratsubaThreshold || 8 * nonzero < a.order())
        return series_mul_schoolbook(a, b);
    return series_mul_karatsuba(a, b);
}

QSeries series_reciprocal(const QSeries& a)
{
    const int a0 = (a[0] == 1) ? 1 : (a[0] == -1) ? -1 : 0;
    if (a0 == 0)
        throw NotInvertible("constant term " + to_decimal(a[0]) + " is not a unit");
    const std::size_t order = a.order();
    SeriesBuilder r(order);
    r[0] = a0;
    Integer acc;
    for (std::size_t n = 1; n <= order; ++n) {
        acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (sgn(a[i]) != 0)
                mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), r[n - i].get_mpz_t());
        }
        // a0 * r[n] = -acc and a0 is its own inverse.
        r[n] = (a0 == 1) ? Integer(-acc) : acc;
    }
    return r.take();
}

QSeries series_dilate(const QSeries& a, std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("dilation factor must be positive");
    const std::size_t order = a.order();
    SeriesBuilder r(order);
    for (std::size_t n = 0; n * k <= order; ++n)
        r[n * k] = a[n];
    return r.take();
}

QSeries series_q_logderivative(const QSeries& a)
{
    SeriesBuilder r(a);
    for (std::size_t n = 0; n <= a.order(); ++n)
        r[n] *= static_cast<unsigned long>(n);
    return r.take();
}

QSeries series_truncate(const QSeries& a, std::size_t order)
{
    if (order > a.order())
        throw OrderMismatch(a.order(), order);
    return QSeries::from_coeffs(std::vector<Integer>(a.coeffs().begin(), a.coeffs().begin() + order + 1));
}

QSeries triple_pochhammer(std::int64_t k, std::int64_t ell, int sign, std::size_t order)
{
    if (k < 1)
        throw ParameterError("triple product needs k >= 1, got k = " + std::to_string(k));
    if (ell < 0 || ell > k)
        throw ParameterError("triple product needs 0 <= l <= k, got (k, l) = (" + std::to_string(k) + ", " +
                             std::to_string(ell) + ")");
    if (sign != 1 && sign != -1)
        throw ParameterError("sign must be +1 or -1");

    const auto n = static_cast<std::int64_t>(order);
    SeriesBuilder r(order);
    r[0] = 1;
    for (std::int64_t m = 1;; ++m) {
        const std::int64_t e1 = k * m;
        const std::int64_t e2 = k * m - ell;
        const std::int64_t e3 = k * (m - 1) + ell;
        if (std::min({e1, e2, e3}) > n)
            break;
        if (e1 <= n)
            r.mul_binomial(-1, static_cast<std::size_t>(e1));
        if (e2 <= n)
            r.mul_binomial(sign, static_cast<std::size_t>(e2));
        if (e3 <= n)
            r.mul_binomial(sign, static_cast<std::size_t>(e3));
    }
    return r.take();
}

QSeries operator+(const QSeries& a, const QSeries& b) { return series_add(a, b); }
QSeries operator-(const QSeries& a, const QSeries& b) { return series_sub(a, b); }
QSeries operator-(const QSeries& a) { return series_neg(a); }
QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }

nlohmann::json to_json(const QSeries& a)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : a.coeffs())
        coeffs.push_back(to_decimal(c));
    return nlohmann::json{{"order", a.order()}, {"coeffs", std::move(coeffs)}};
}

QSeries series_from_json(const nlohmann::json& j)
{
    const auto order = j.at("order").get<std::size_t>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != order + 1)
        throw std::invalid_argument("series JSON: coeffs length must be order + 1");
    std::vector<Integer> values;
    values.reserve(order + 1);
    for (const auto& c : coeffs)
        values.push_back(from_decimal(c.get<std::string>()));
    return QSeries::from_coeffs(std::move(values));
}

ZLaurentSeries::ZLaurentSeries(std::int64_t lo, std::int64_t hi, std::size_t order)
    : lo_(lo), order_(order)
{
    if (lo > hi)
        throw std::invalid_argument("Laurent support needs lo <= hi");
    zcoeffs_.assign(static_cast<std::size_t>(hi - lo + 1), QSeries(order));
}

ZLaurentSeries::ZLaurentSeries(std::int64_t lo, std::vector<QSeries> zcoeffs)
    : lo_(lo), order_(0), zcoeffs_(std::move(zcoeffs))
{
    if (zcoeffs_.empty())
        throw std::invalid_argument("Laurent series needs a non-empty support");
    order_ = zcoeffs_.front().order();
    for (const auto& c : zcoeffs_) {
        if (c.order() != order_)
            throw OrderMismatch(order_, c.order());
    }
}

QSeries ZLaurentSeries::coeff(std::int64_t d) const
{
    if (d < lo_ || d > hi())
        return QSeries(order_);
    return zcoeffs_[static_cast<std::size_t>(d - lo_)];
}

bool ZLaurentSeries::is_zero() const
{
    return std::all_of(zcoeffs_.begin(), zcoeffs_.end(), [](const QSeries& s) { return s.is_zero(); });
}

bool operator==(const ZLaurentSeries& a, const ZLaurentSeries& b)
{
    if (a.order() != b.order())
        return false;
    const std::int64_t lo = std::min(a.lo(), b.lo());
    const std::int64_t hi = std::max(a.hi(), b.hi());
    for (std::int64_t d = lo; d <= hi; ++d) {
        if (a.coeff(d) != b.coeff(d))
            return false;
    }
    return true;
}

ZLaurentSeries laurent_mul(const ZLaurentSeries& a, const ZLaurentSeries& b)
{
    return laurent_mul(a, b, a.lo() + b.lo(), a.hi() + b.hi());
}

ZLaurentSeries laurent_mul(const ZLaurentSeries& a, const ZLaurentSeries& b, std::int64_t lo, std::int64_t hi)
{
    if (a.order() != b.order())
        throw OrderMismatch(a.order(), b.order());
    if (lo > hi)
        throw std::invalid_argument("Laurent window needs lo <= hi");
    const std::size_t order = a.order();
    std::vector<SeriesBuilder> acc;
    acc.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t d = lo; d <= hi; ++d)
        acc.emplace_back(order);

    for (std::int64_t i = a.lo(); i <= a.hi(); ++i) {
        const QSeries& ai = a.zcoeffs()[static_cast<std::size_t>(i - a.lo())];
        if (ai.is_zero())
            continue;
        const std::int64_t jlo = std::max(b.lo(), lo - i);
        const std::int64_t jhi = std::min(b.hi(), hi - i);
        for (std::int64_t j = jlo; j <= jhi; ++j) {
            const QSeries& bj = b.zcoeffs()[static_cast<std::size_t>(j - b.lo())];
            if (bj.is_zero())
                continue;
            mul_acc_sparse(ai, bj, acc[static_cast<std::size_t>(i + j - lo)]);
        }
    }

    std::vector<QSeries> zcoeffs;
    zcoeffs.reserve(acc.size());
    for (auto& s : acc)
        zcoeffs.push_back(s.take());
    return ZLaurentSeries(lo, std::move(zcoeffs));
}

} // namespace qpl
