#include "trop/hyperfield.hpp"

#include <stdexcept>

namespace trop {

std::string HyperSet::to_string() const {
    if (kind_ == Kind::Singleton) return "{" + bound_.to_short_string() + "}";
    return "[0," + bound_.to_short_string() + "]";
}

HyperSet hypersum(const TropValue& a, const TropValue& b) {
    if (a == b) return HyperSet::interval(a);
    return HyperSet::singleton(max(a, b));
}

HyperSet hypersum_n(std::span<const TropValue> terms) {
    if (terms.empty()) throw std::invalid_argument("hypersum of an empty list");
    TropValue top = terms[0];
    for (const TropValue& t : terms.subspan(1)) top = max(top, t);
    std::size_t hits = 0;
    for (const TropValue& t : terms)
        if (t == top) ++hits;
    if (hits >= 2) return HyperSet::interval(top);
    return HyperSet::singleton(top);
}

bool leq_T(const TropValue& c, std::span<const TropValue> terms) {
    if (terms.empty()) return c.is_zero();
    TropValue top = c;
    for (const TropValue& t : terms) top = max(top, t);
    std::size_t hits = (c == top) ? 1 : 0;
    for (const TropValue& t : terms)
        if (t == top) ++hits;
    return hits >= 2;
}

std::string ExtendedTrop::to_string() const {
    return level_.to_short_string() + (ghost_ ? "^g" : "");
}

ExtendedTrop ext_add(const ExtendedTrop& a, const ExtendedTrop& b) {
    if (!a.is_ghost() && !b.is_ghost()) {
        if (a.level() == b.level()) return ExtendedTrop::ghost(a.level());
        return ExtendedTrop::point(max(a.level(), b.level()));
    }
    if (a.is_ghost() && b.is_ghost())
        return ExtendedTrop::ghost(max(a.level(), b.level()));
    // One ghost, one point: the point survives only strictly above the ghost.
    const ExtendedTrop& g = a.is_ghost() ? a : b;
    const ExtendedTrop& p = a.is_ghost() ? b : a;
    if (p.level() > g.level()) return p;
    return g;
}

ExtendedTrop ext_mul(const ExtendedTrop& a, const ExtendedTrop& b) {
    TropValue lv = a.level() * b.level();
    if (a.is_ghost() || b.is_ghost()) return ExtendedTrop::ghost(std::move(lv));
    return ExtendedTrop::point(std::move(lv));
}

HyperSet to_hyperset(const ExtendedTrop& a) {
    if (a.is_ghost()) return HyperSet::interval(a.level());
    return HyperSet::singleton(a.level());
}

}  // namespace trop
