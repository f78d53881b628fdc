#pragma once

#include "vaaprobe/corpus.hpp"
#include "vaaprobe/stancemap.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace vaaprobe {

enum class TemplateStyle { Personal, Impersonal };

std::string_view to_string(TemplateStyle s);
TemplateStyle template_style_from_string(std::string_view s);

enum class LabelOrder { Canonical, Inverted };

std::string_view to_string(LabelOrder o);
LabelOrder label_order_from_string(std::string_view s);

// The statement placeholder expected in every template body.
inline constexpr std::string_view kStatementPlaceholder = "{statement}";

struct PromptTemplate {
    std::string id;
    TemplateStyle style = TemplateStyle::Impersonal;
    std::string body; // contains kStatementPlaceholder exactly once and both labels verbatim
    LabelPair labels;
};

struct PromptInstance {
    std::string template_id;
    LabelOrder label_order = LabelOrder::Canonical;
    std::string statement_id;
    VariantKind variant = VariantKind::Original;
    std::string rendered_text;   // full prompt, statement substituted
    std::string instruction;     // body with the placeholder removed (wire system message)
    std::string statement_text;  // the substituted variant text (wire user message)
    LabelPair labels;            // canonical (positive, negative) pair of the template
};

struct Job {
    PromptInstance instance;
    int samples_required = 0;
};

struct JobSet {
    std::vector<Job> jobs;
    int samples = 0;
};

void validate_template(const PromptTemplate& t);

// Swaps the positions of the two label mentions in the body; an involution.
PromptTemplate invert_label_order(const PromptTemplate& t);

// Pure: the same (template, order, bundle, variant) always yields the same
// instance.
PromptInstance render_prompt(const PromptTemplate& t, LabelOrder order,
                             const StatementBundle& bundle, VariantKind variant);

// Full cross product: (#bundles x 6 variants) x (#templates x 2 orders).
JobSet enumerate_jobs(const Corpus& corpus, const std::vector<PromptTemplate>& templates, int samples);

// Templates sorted by mappable-response count, descending; ties by id.
struct TemplateStat {
    std::string template_id;
    std::size_t mappable_responses = 0;
};
std::vector<std::string> screen_templates(std::vector<TemplateStat> stats);

// Top-k ids of each style, in screened order.
std::vector<std::string> top_k_per_style(const std::vector<std::string>& ranked,
                                         const std::vector<PromptTemplate>& templates,
                                         std::size_t k);

std::vector<PromptTemplate> load_templates(const std::filesystem::path& path);
std::vector<PromptTemplate> parse_templates(std::string_view json_text);

const PromptTemplate* find_template(const std::vector<PromptTemplate>& templates, std::string_view id);

} // namespace vaaprobe
