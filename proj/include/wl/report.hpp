#pragma once

#include <string>
#include <vector>

#include "wl/hash.hpp"
#include "wl/wl_refine.hpp"

namespace wl {

/// Content digest of a file (for input echoing in run reports).
std::string file_digest_hex(const std::string& path);

/// JSON fragment for a refinement verdict:
/// {outcome, round, classes, histogram_digest_G, histogram_digest_H}.
std::string verdict_json(const WlVerdict& v);

}  // namespace wl
