#include <reversor/classify.hpp>

#include <compare>

namespace reversor {

std::string_view tag_name(TripletTag tag) noexcept {
    switch (tag) {
    case TripletTag::no_triangle_strict: return "NoTriangle_Strict";
    case TripletTag::degenerate_sum: return "Degenerate_Sum";
    case TripletTag::obtuse: return "Obtuse";
    case TripletTag::right: return "Right";
    case TripletTag::acute_scalene: return "AcuteScalene";
    case TripletTag::acute_z_equals_x: return "Acute_ZequalsX";
    case TripletTag::equilateral: return "Equilateral";
    }
    return "?";
}

std::optional<TripletTag> parse_tag(std::string_view name) noexcept {
    for (TripletTag tag : kAllTags) {
        if (tag_name(tag) == name) {
            return tag;
        }
    }
    return std::nullopt;
}

std::string PredictedExponent::str() const {
    switch (kind) {
    case Kind::fixed: return std::to_string(value);
    case Kind::computed: return "computed";
    case Kind::none: return "none";
    }
    return "none";
}

TripletClass classify(const Triplet &t) {
    using K = PredictedExponent::Kind;
    TripletClass c{};
    c.z_equals_x = t.z_equals_x();
    c.x_equals_y = t.x_equals_y();

    const auto linear = t.z <=> t.x + t.y;
    if (linear > 0) {
        c.tag = TripletTag::no_triangle_strict;
        c.predicted = {K::fixed, 1};
        c.table_label = "Set 1.1";
        return c;
    }
    if (linear == 0) {
        c.tag = TripletTag::degenerate_sum;
        c.predicted = {K::fixed, 2};
        c.table_label = "Set 1.2";
        return c;
    }
    if (c.z_equals_x && c.x_equals_y) {
        c.tag = TripletTag::equilateral;
        c.predicted = {K::none, 0};
        c.table_label = "Set 2.3.2";
        c.note = "z < z + z never reverses; triangle type and angles conserved";
        return c;
    }
    if (c.z_equals_x) {
        c.tag = TripletTag::acute_z_equals_x;
        c.predicted = {K::none, 0};
        c.table_label = "Set 2.3.1 (z=x>y)";
        c.note = "z^j < z^j + y^j for every j; triangle type conserved but not angles";
        return c;
    }
    const auto quadratic = t.z * t.z <=> t.x * t.x + t.y * t.y;
    if (quadratic > 0) {
        c.tag = TripletTag::obtuse;
        c.predicted = {K::fixed, 2};
        c.table_label = "Set 2.1";
    } else if (quadratic == 0) {
        c.tag = TripletTag::right;
        c.predicted = {K::fixed, 3};
        c.table_label = "Set 2.2";
        if (c.x_equals_y) {
            c.note = "x = y gives z irrational";
        }
    } else {
        c.tag = TripletTag::acute_scalene;
        c.predicted = {K::computed, 0};
        c.table_label = "Set 2.3.1";
        if (c.x_equals_y) {
            c.note = "isosceles x = y < z";
        }
    }
    return c;
}

} // namespace reversor
