#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vaaprobe {

enum class Stance { Positive, Negative, Invalid };

std::string_view to_string(Stance s);
Stance stance_from_string(std::string_view s);
Stance flip(Stance s); // Invalid stays Invalid

struct LabelPair {
    std::string positive;
    std::string negative;
};

struct MapRules {
    std::vector<std::string> negation_markers{"not", "n't", "never", "no"};
    std::vector<std::string> refusal_patterns{"i cannot", "i don't have", "as an ai", "unable to"};
    int negation_window = 3; // tokens scanned back from a label for a marker
};

// Total function: lowercase punctuation-normalized scan for the earliest
// token-boundary occurrence of either label (longest label wins at the same
// position, so "disagree" never registers as "agree"); a negation marker
// within the window flips the stance; refusal patterns and label-free text
// map to Invalid.
Stance map_response(std::string_view text, const LabelPair& labels, const MapRules& rules = {});

} // namespace vaaprobe
