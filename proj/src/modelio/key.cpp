#include "vaaprobe/modelio/key.hpp"

#include <fmt/format.h>

namespace vaaprobe {

std::string to_string(const ResponseKey& k) {
    return fmt::format("{}|{}|{}|{}|{}", k.template_id, to_string(k.label_order),
                       k.statement_id, to_string(k.variant), k.sample_index);
}

ResponseKey response_key_of(const PromptInstance& instance, int sample_index) {
    return ResponseKey{instance.template_id, instance.label_order, instance.statement_id,
                       instance.variant, sample_index};
}

} // namespace vaaprobe
