#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "toricbv/algebra.hpp"
#include "toricbv/fan_io.hpp"

namespace toricbv {

enum class Format { human, machine };

struct ReportOptions {
    Format format = Format::human;
    std::uint64_t seed = 1;
    bool timings = false;  // timings are excluded from the stable output by default
};

// exit codes: 0 all requested checks pass, 1 a mathematical check failed,
// 2 input error (the CLI maps input_error exceptions to 2 itself).
struct CommandResult {
    int exit_code = 0;
    std::string output;
};

// Parses an element description like
//   "chi(-1,0)*e1 + 3/2*chi(0,0)*e1^e2"   or   "chi(0,0)*1"
// into a homogeneous weighted polyvector. Indices are 1-based in the text.
WeightedPolyvector parse_element(const std::string& text, int dim, Variant variant);

CommandResult run_validate(const NamedFan& fan, const ReportOptions& options);
CommandResult run_polytope(const NamedFan& fan, const ReportOptions& options);
CommandResult run_dims(const NamedFan& fan, const ReportOptions& options);
CommandResult run_basis(const NamedFan& fan, const ReportOptions& options);
CommandResult run_bracket(const NamedFan& fan, const std::string& a, const std::string& b,
                          const ReportOptions& options);
CommandResult run_bv(const NamedFan& fan, const std::optional<RatVec>& delta,
                     const ReportOptions& options);
CommandResult run_check(const NamedFan& fan, const ReportOptions& options);
CommandResult run_corpus(const ReportOptions& options);

}  // namespace toricbv
