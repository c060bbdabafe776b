#include <reversor/triplet.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace reversor {

Triplet Triplet::canonical(Nat a, Nat b, Nat c) {
    std::array<Nat, 3> v{std::move(a), std::move(b), std::move(c)};
    for (const auto &n : v) {
        if (n.is_zero()) {
            throw std::invalid_argument("triplet components must be positive integers");
        }
    }
    std::stable_sort(v.begin(), v.end());
    return Triplet{std::move(v[0]), std::move(v[1]), std::move(v[2])};
}

std::string Triplet::str() const { return "{" + y.str() + "," + x.str() + "," + z.str() + "}"; }

} // namespace reversor
