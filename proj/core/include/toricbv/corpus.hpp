#pragma once

#include <optional>
#include <vector>

#include "toricbv/fan_io.hpp"

namespace toricbv {
namespace corpus {

// The bundled fans, in the order reports use: projective spaces, the product
// of two lines, the Hirzebruch surfaces a = 0..3, the degree-6 del Pezzo
// surface, and the 16-ray iterated blow-up of the product of two lines.
const std::vector<NamedFan>& standard();

std::optional<NamedFan> find(const std::string& name);

}  // namespace corpus
}  // namespace toricbv
