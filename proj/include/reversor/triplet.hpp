#pragma once

#include <reversor/nat.hpp>

#include <string>

namespace reversor {

/// Three positive integers in canonical order z >= x >= y.
struct Triplet {
    Nat y;
    Nat x;
    Nat z;

    /// Sorts any input order; throws std::invalid_argument on a zero component.
    static Triplet canonical(Nat a, Nat b, Nat c);

    bool z_equals_x() const { return z == x; }
    bool x_equals_y() const { return x == y; }

    /// "{y,x,z}"
    std::string str() const;

    friend bool operator==(const Triplet &, const Triplet &) = default;
};

} // namespace reversor
