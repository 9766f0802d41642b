#pragma once

#include "trop/valuation.hpp"

#include <string>
#include <vector>

namespace trop {

// A point of tropical affine space: one nonnegative magnitude per variable.
class TropPoint {
public:
    TropPoint() = default;
    explicit TropPoint(std::vector<TropValue> coords) : coords_(std::move(coords)) {}

    const std::vector<TropValue>& coords() const { return coords_; }
    int num_vars() const { return static_cast<int>(coords_.size()); }
    const TropValue& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }

    bool operator==(const TropPoint& o) const = default;
    bool operator<(const TropPoint& o) const { return coords_ < o.coords_; }

    // "(a1, ..., an)" with short rational coordinates.
    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) out += ", ";
            out += coords_[i].to_short_string();
        }
        return out + ")";
    }

private:
    std::vector<TropValue> coords_;
};

}  // namespace trop
