#pragma once

#include <string>
#include <vector>

#include "fraciter/precision.hpp"

namespace fraciter {

// One row of the constants manifest.
struct ConstantEntry {
    std::string name;                  // dotted lowercase identifier
    std::vector<std::string> aliases;  // e.g. "alpha" for sqrt2exp.I1.offset
    std::string value;                 // decimal string at target digits
    enum class Source { Published, Derived } source = Source::Published;
};

// Computes every catalogued constant at the context's precision, in a
// fixed order.  `filter` keeps entries whose name or alias contains the
// given substring (case-insensitive); empty keeps everything.  `jobs`
// bounds the worker threads (0 picks the hardware count); the output order
// never depends on scheduling.
std::vector<ConstantEntry> build_constants(const PrecisionContext& ctx,
                                           const std::string& filter = "",
                                           int jobs = 0);

// `<name> = <value>` lines, one per entry.
std::string render_constants(const std::vector<ConstantEntry>& entries);

}  // namespace fraciter
