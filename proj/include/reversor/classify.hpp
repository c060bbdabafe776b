#pragma once

#include <reversor/triplet.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace reversor {

enum class TripletTag {
    no_triangle_strict, // z > x + y
    degenerate_sum,     // z = x + y
    obtuse,             // triangle, z^2 > x^2 + y^2
    right,              // triangle, z^2 = x^2 + y^2
    acute_scalene,      // triangle, z^2 < x^2 + y^2, z > x (x = y allowed, flagged)
    acute_z_equals_x,   // z = x > y
    equilateral,        // z = x = y
};

inline constexpr TripletTag kAllTags[] = {
    TripletTag::no_triangle_strict, TripletTag::degenerate_sum, TripletTag::obtuse,
    TripletTag::right, TripletTag::acute_scalene, TripletTag::acute_z_equals_x,
    TripletTag::equilateral,
};

std::string_view tag_name(TripletTag tag) noexcept;
std::optional<TripletTag> parse_tag(std::string_view name) noexcept;

/// What the classification table says about the reversion exponent.
struct PredictedExponent {
    enum class Kind { fixed, computed, none };
    Kind kind = Kind::none;
    unsigned value = 0; // meaningful for Kind::fixed

    std::string str() const;
};

struct TripletClass {
    TripletTag tag;
    PredictedExponent predicted;
    bool z_equals_x = false;
    bool x_equals_y = false;
    std::string_view table_label; // e.g. "Set 2.3.1"
    std::string note;
};

TripletClass classify(const Triplet &t);

} // namespace reversor
