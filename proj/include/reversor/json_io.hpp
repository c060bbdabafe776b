#pragma once

#include <reversor/classify.hpp>
#include <reversor/corollary2.hpp>
#include <reversor/hireal.hpp>
#include <reversor/logbounds.hpp>
#include <reversor/rat.hpp>
#include <reversor/reversion.hpp>

#include <json.hpp>

namespace reversor {

using Json = nlohmann::ordered_json;

// Rationals are "num/den" strings, naturals decimal strings, and decimals
// objects {"value", "digits", "error_bound"}.
Json to_json(const Rat &r);
Json to_json(const Nat &n);
Json to_json(const HiReal &v);
Json to_json(Certified c);
Json to_json(const Triplet &t);
Json to_json(const TripletClass &c);
Json to_json(const ReversionAnalysis &a);
Json to_json(const OverreversionRecord &r);
Json to_json(const Bound &b);
Json to_json(const LogBoundsReport &r);
Json to_json(const EqualizerResult &r);
Json to_json(const WitnessReport &r);
Json to_json(const ScaledEquation &e);
Json to_json(const SignBruteforceReport &r);
Json to_json(const RadicalVerification &v);
Json to_json(const LadderStep &s);

std::string_view certified_name(Certified c) noexcept;
std::string_view chain_name(Chain c) noexcept;

} // namespace reversor
