#pragma once

#include "vaaprobe/corpus.hpp"
#include "vaaprobe/promptkit.hpp"
#include "vaaprobe/rng.hpp"

#include <cstdint>
#include <string>

namespace vaaprobe {

struct ResponseKey {
    std::string template_id;
    LabelOrder label_order = LabelOrder::Canonical;
    std::string statement_id;
    VariantKind variant = VariantKind::Original;
    int sample_index = 0;

    bool operator==(const ResponseKey&) const = default;
};

std::string to_string(const ResponseKey& k);
ResponseKey response_key_of(const PromptInstance& instance, int sample_index);

inline std::uint64_t key_hash(const ResponseKey& k) { return fnv1a64(to_string(k)); }

} // namespace vaaprobe
