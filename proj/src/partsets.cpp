#include "qpl/partsets.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "qpl/error.hpp"

namespace qpl {

namespace {

std::int64_t mod_pos(std::int64_t x, std::int64_t k)
{
    const std::int64_t r = x % k;
    return r < 0 ? r + k : r;
}

std::vector<std::int64_t> parse_ints(std::string_view text)
{
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view field = text.substr(pos, comma - pos);
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw std::invalid_argument("part set: bad integer '" + std::string(field) + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

void require_count(const std::vector<std::int64_t>& v, std::size_t n, std::string_view kind)
{
    if (v.size() != n)
        throw std::invalid_argument("part set " + std::string(kind) + " expects " + std::to_string(n) +
                                    " integers");
}

} // namespace

PartSet PartSet::residue(const ModularParams& p)
{
    return PartSet(Kind::residue, p);
}

PartSet PartSet::J(const ModularParams& p)
{
    p.require_interior("part set J");
    return PartSet(Kind::J, p);
}

PartSet PartSet::Jbar(const ModularParams& p)
{
    p.require_interior("part set Jbar");
    return PartSet(Kind::Jbar, p);
}

PartSet PartSet::Js(const ModularParams& p, std::int64_t s)
{
    p.require_interior("part set Js");
    if (s < 1)
        throw ParameterError("Js needs s >= 1, got " + std::to_string(s));
    PartSet set(Kind::Js, p);
    set.s_ = s;
    return set;
}

PartSet PartSet::multiples(std::int64_t k)
{
    if (k < 1)
        throw ParameterError("multiples need k >= 1, got " + std::to_string(k));
    PartSet set(Kind::multiples, std::nullopt);
    set.k_ = k;
    return set;
}

PartSet PartSet::explicit_set(std::vector<std::int64_t> members)
{
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.front() < 1)
        throw ParameterError("explicit part sets hold positive integers only");
    PartSet set(Kind::explicit_set, std::nullopt);
    set.members_ = std::move(members);
    return set;
}

PartSet PartSet::scaled(std::int64_t c) const
{
    if (c < 1)
        throw ParameterError("scale factor must be positive");
    PartSet out = *this;
    out.scale_ *= c;
    return out;
}

bool PartSet::contains_unscaled(std::int64_t x) const
{
    if (x < 1)
        return false;
    switch (kind_) {
    case Kind::residue: {
        const auto k = params_->k();
        return mod_pos(x, k) == mod_pos(params_->ell(), k);
    }
    case Kind::J: {
        const auto k = params_->k();
        const auto r = mod_pos(x, k);
        return r == params_->ell() || r == k - params_->ell();
    }
    case Kind::Jbar: {
        const auto k = params_->k();
        const auto r = mod_pos(x, k);
        return r == 0 || r == params_->ell() || r == k - params_->ell();
    }
    case Kind::Js: {
        // x = k(i-1) + l or x = k i - l for some 1 <= i <= s.
        const auto k = params_->k();
        const auto l = params_->ell();
        if (x >= l && (x - l) % k == 0 && (x - l) / k + 1 <= s_)
            return true;
        return (x + l) % k == 0 && (x + l) / k <= s_;
    }
    case Kind::multiples:
        return x % k_ == 0;
    case Kind::explicit_set:
        return std::binary_search(members_.begin(), members_.end(), x);
    }
    return false;
}

bool PartSet::contains(std::int64_t x) const
{
    if (x < 1 || x % scale_ != 0)
        return false;
    return contains_unscaled(x / scale_);
}

std::vector<std::int64_t> PartSet::members_upto(std::int64_t n) const
{
    std::vector<std::int64_t> out;
    if (n < 1)
        return out;
    if (kind_ == Kind::explicit_set) {
        for (auto m : members_) {
            if (m * scale_ > n)
                break;
            out.push_back(m * scale_);
        }
        return out;
    }
    for (std::int64_t x = scale_; x <= n; x += scale_) {
        if (contains_unscaled(x / scale_))
            out.push_back(x);
    }
    return out;
}

std::string PartSet::str() const
{
    std::string body;
    auto kl = [&] { return std::to_string(params_->k()) + "," + std::to_string(params_->ell()); };
    switch (kind_) {
    case Kind::residue:
        body = "I:" + kl();
        break;
    case Kind::J:
        body = "J:" + kl();
        break;
    case Kind::Jbar:
        body = "Jbar:" + kl();
        break;
    case Kind::Js:
        body = "Js:" + kl() + "," + std::to_string(s_);
        break;
    case Kind::multiples:
        body = "mult:" + std::to_string(k_);
        break;
    case Kind::explicit_set:
        body = "set:";
        for (std::size_t i = 0; i < members_.size(); ++i)
            body += (i ? "," : "") + std::to_string(members_[i]);
        break;
    }
    return scale_ == 1 ? body : std::to_string(scale_) + "*" + body;
}

PartSet parse_part_set(std::string_view text)
{
    std::int64_t scale = 1;
    if (const auto star = text.find('*'); star != std::string_view::npos) {
        const auto v = parse_ints(text.substr(0, star));
        require_count(v, 1, "scale");
        scale = v[0];
        text.remove_prefix(star + 1);
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("part set must look like KIND:ARGS, got '" + std::string(text) + "'");
    const std::string_view kind = text.substr(0, colon);
    const std::string_view args = text.substr(colon + 1);

    auto build = [&]() -> PartSet {
        if (kind == "set")
            return PartSet::explicit_set(args.empty() ? std::vector<std::int64_t>{} : parse_ints(args));
        const auto v = parse_ints(args);
        if (kind == "I") {
            require_count(v, 2, kind);
            return PartSet::residue(ModularParams(v[0], v[1]));
        }
        if (kind == "J") {
            require_count(v, 2, kind);
            return PartSet::J(ModularParams(v[0], v[1]));
        }
        if (kind == "Jbar") {
            require_count(v, 2, kind);
            return PartSet::Jbar(ModularParams(v[0], v[1]));
        }
        if (kind == "Js") {
            require_count(v, 3, kind);
            return PartSet::Js(ModularParams(v[0], v[1]), v[2]);
        }
        if (kind == "mult") {
            require_count(v, 1, kind);
            return PartSet::multiples(v[0]);
        }
        throw std::invalid_argument("unknown part set kind '" + std::string(kind) + "'");
    };
    PartSet set = build();
    return scale == 1 ? set : set.scaled(scale);
}

} // namespace qpl
