#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fourdist/filters.hpp"
#include "fourdist/model.hpp"
#include "fourdist/search.hpp"

namespace fourdist {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

/// Throws std::invalid_argument for anything but "json", "csv" or "text".
Format parse_format(std::string_view s);

struct ValueList {
    std::vector<Int> direct;
    std::vector<Int> combined;  // direct plus z - v for each v, sorted, unique

    friend bool operator==(const ValueList&, const ValueList&) = default;
};

/// Side distances ruled out for x (odd) or y (even) at a fixed z.
struct UnavailableLists {
    Int z = 0;
    ValueList theorem3_x;
    ValueList theorem4_x;
    ValueList theorem5_y;
    /// Even y not already in theorem5_y.combined that Lemma 3 rules out.
    ValueList lemma3_y;
};

/// Requires z even and at least 2.
UnavailableLists unavailable_lists(Int z, const FilterConfig& cfg);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json to_json(const SieveResult& r);
SieveResult sieve_result_from_json(const Json& j);

Json to_json(const ScanReport& r);
Json to_json(const UnavailableLists& l);
Json to_json(const Candidate& c, const DistanceProfile& p);

/// "A=25;B=-;C=53;D=51"
std::string roots_cell(const DistanceProfile& p);

std::string serialize(const SieveResult& r, Format f);
std::string serialize(const std::vector<SieveResult>& rs, Format f);
std::string serialize(const ScanReport& r, Format f);
std::string serialize(const UnavailableLists& l, Format f);
std::string serialize(const Candidate& c, const DistanceProfile& p, Format f);

}  // namespace fourdist
