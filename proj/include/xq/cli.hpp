#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "xq/io.hpp"

namespace xq {

/// Runs the xq command line (arguments without the program name).
/// Exit codes: 0 success, 1 a check failed or the input is invalid (or, for
/// `homotopic`, the maps are not homotopic), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Bundle with structures D and Q and the retractions pr1, pr2 (r = 0) and
/// pr1_r7 (a = 1, b = 0, r = 7).
Bundle case_study_bundle();

/// JSON report of `xq s2xs2 classify --out`.
Json classification_report(std::size_t ab_range, std::size_t r_bound);

/// JSON report of checking the structure file `text` (a bundle checks every
/// member). Throws ParseError or std::invalid_argument.
Json check_report(const std::string& text, const SamplingOptions& opts);

/// Sampling seed from XQ_SEED (default 1). Throws std::invalid_argument on
/// a malformed value.
std::uint64_t sampling_seed_from_env();

}  // namespace xq
