#pragma once

#include "trop/valuation.hpp"

#include <span>
#include <string>

namespace trop {

// Value of a hypersum: either a single magnitude {t} or the full order
// interval [0, t].  [0, 0] collapses to the singleton {0}.
class HyperSet {
public:
    enum class Kind { Singleton, Interval };

    static HyperSet singleton(TropValue t) { return HyperSet(Kind::Singleton, std::move(t)); }
    static HyperSet interval(TropValue t) {
        if (t.is_zero()) return singleton(std::move(t));
        return HyperSet(Kind::Interval, std::move(t));
    }

    Kind kind() const { return kind_; }
    bool is_interval() const { return kind_ == Kind::Interval; }
    // The singleton's value, or the interval's upper endpoint.
    const TropValue& bound() const { return bound_; }

    bool contains(const TropValue& t) const {
        if (kind_ == Kind::Singleton) return t == bound_;
        return t <= bound_;
    }

    bool operator==(const HyperSet& o) const = default;

    // "{t}" or "[0,t]" with short rational values.
    std::string to_string() const;

private:
    HyperSet(Kind k, TropValue b) : kind_(k), bound_(std::move(b)) {}
    Kind kind_;
    TropValue bound_;
};

// Hyperaddition on the tropical hyperfield: a + b is {max(a,b)} when the
// arguments differ and the whole interval [0, a] when they tie.
HyperSet hypersum(const TropValue& a, const TropValue& b);

// n-ary hypersum, n >= 1 (throws std::invalid_argument on an empty list).
// Closed form: if the maximum of the terms occurs exactly once the sum is
// that singleton, otherwise it is [0, max].
HyperSet hypersum_n(std::span<const TropValue> terms);

// Membership test c <= b1 + ... + bn, i.e. c lies in the hypersum of the
// terms.  Equivalently: the maximum of {c, b1, ..., bn} occurs at least
// twice.  An empty term list means the empty sum {0}, so only c = 0 passes.
bool leq_T(const TropValue& c, std::span<const TropValue> terms);

// Element of the extended tropical semiring: an ordinary magnitude
// ("point") or a collapsed interval [0, t] ("ghost").  Ghost(0) is
// identified with Point(0), the additive zero.
class ExtendedTrop {
public:
    static ExtendedTrop point(TropValue t) { return ExtendedTrop(false, std::move(t)); }
    static ExtendedTrop ghost(TropValue t) {
        bool g = !t.is_zero();  // read before the move: argument order is unspecified
        return ExtendedTrop(g, std::move(t));
    }
    static ExtendedTrop zero() { return point(TropValue::zero()); }
    static ExtendedTrop one() { return point(TropValue::one()); }

    bool is_ghost() const { return ghost_; }
    const TropValue& level() const { return level_; }

    bool operator==(const ExtendedTrop& o) const = default;

    // "t" for points, "t^g" for ghosts, with short rational values.
    std::string to_string() const;

private:
    ExtendedTrop(bool g, TropValue t) : ghost_(g), level_(std::move(t)) {}
    bool ghost_;
    TropValue level_;
};

// Addition: sets add elementwise and the result collapses back to a point or
// a ghost.  Distinct point levels keep the larger point; a tie of points
// ghosts out; a ghost absorbs anything at or below its level.
ExtendedTrop ext_add(const ExtendedTrop& a, const ExtendedTrop& b);

// Multiplication scales levels; ghostness is contagious.
ExtendedTrop ext_mul(const ExtendedTrop& a, const ExtendedTrop& b);

// The hyperset a value set denotes, for cross-checking against hypersums.
HyperSet to_hyperset(const ExtendedTrop& a);

}  // namespace trop
