#ifndef QPL_PARTSETS_HPP
#define QPL_PARTSETS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpl/numbers.hpp"

namespace qpl {

/// Symbolic set of positive integers used as allowed partition parts.
///
/// Families:
///   residue    I_{k,l}: x = l (mod k)
///   J          J_{k,l}: x = +-l (mod k), interior params only
///   Jbar       kI u J_{k,l}
///   Js         first s terms of both progressions m_{k,l}, m_{k,k-l}
///   multiples  kI
///   explicit   a finite hand-built set
/// Any of them may be dilated by a positive factor c (the set cJ).
class PartSet {
public:
    enum class Kind { residue, J, Jbar, Js, multiples, explicit_set };

    static PartSet residue(const ModularParams& p);
    static PartSet J(const ModularParams& p);
    static PartSet Jbar(const ModularParams& p);
    static PartSet Js(const ModularParams& p, std::int64_t s);
    static PartSet multiples(std::int64_t k);
    static PartSet explicit_set(std::vector<std::int64_t> members);

    /// The set {c x : x in *this}.
    PartSet scaled(std::int64_t c) const;

    Kind kind() const noexcept { return kind_; }
    const std::optional<ModularParams>& params() const noexcept { return params_; }
    std::int64_t s() const noexcept { return s_; }
    std::int64_t scale() const noexcept { return scale_; }

    bool contains(std::int64_t x) const;
    /// Members <= n, ascending.
    std::vector<std::int64_t> members_upto(std::int64_t n) const;

    /// Compact form accepted by parse_part_set, e.g. "Jbar:3,1".
    std::string str() const;

private:
    PartSet(Kind kind, std::optional<ModularParams> params) : kind_(kind), params_(std::move(params)) {}
    bool contains_unscaled(std::int64_t x) const;

    Kind kind_;
    std::optional<ModularParams> params_;
    std::int64_t s_ = 0;
    std::int64_t k_ = 0; // multiples only
    std::int64_t scale_ = 1;
    std::vector<std::int64_t> members_; // explicit only, sorted unique
};

/// Parses "I:k,l", "J:k,l", "Jbar:k,l", "Js:k,l,s", "mult:k", "set:1,3,7",
/// optionally prefixed by a scale "c*", e.g. "2*Jbar:3,1".
PartSet parse_part_set(std::string_view text);

} // namespace qpl

#endif
