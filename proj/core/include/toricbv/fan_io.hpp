#pragma once

#include <string>

#include "toricbv/fan.hpp"

namespace toricbv {

struct NamedFan {
    std::string name;
    Fan fan;
};

// Parses a fan document: a JSON object with fields
//   dim        positive integer
//   rays       array of integer arrays (primitive, pairwise distinct)
//   max_cones  array of arrays of 0-based ray indices, dim per cone
//   name       optional string
// Errors carry the offending field path.
NamedFan parse_fan(const std::string& document);

// Canonical serialization; parse(serialize(f)) reproduces f exactly.
std::string serialize_fan(const NamedFan& fan);

}  // namespace toricbv
