#include "vaaprobe/promptkit.hpp"

#include "vaaprobe/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace vaaprobe {

using nlohmann::json;

std::string_view to_string(TemplateStyle s) {
    return s == TemplateStyle::Personal ? "personal" : "impersonal";
}

TemplateStyle template_style_from_string(std::string_view s) {
    if (s == "personal") return TemplateStyle::Personal;
    if (s == "impersonal") return TemplateStyle::Impersonal;
    throw ParseError(fmt::format("unknown template style '{}'", s));
}

std::string_view to_string(LabelOrder o) {
    return o == LabelOrder::Canonical ? "canonical" : "inverted";
}

LabelOrder label_order_from_string(std::string_view s) {
    if (s == "canonical") return LabelOrder::Canonical;
    if (s == "inverted") return LabelOrder::Inverted;
    throw ParseError(fmt::format("unknown label order '{}'", s));
}

namespace {

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// First occurrence of `label` in `body` at word boundaries, case-sensitive.
// npos when absent.
std::size_t find_label(const std::string& body, const std::string& label, std::size_t from = 0) {
    if (label.empty()) return std::string::npos;
    std::size_t pos = from;
    while ((pos = body.find(label, pos)) != std::string::npos) {
        const bool left_ok = pos == 0 || !is_word_char(body[pos - 1]);
        const std::size_t end = pos + label.size();
        const bool right_ok = end >= body.size() || !is_word_char(body[end]);
        if (left_ok && right_ok) return pos;
        ++pos;
    }
    return std::string::npos;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

void validate_template(const PromptTemplate& t) {
    if (t.id.empty()) throw ValidationError("template id: empty id");
    const std::size_t first = t.body.find(kStatementPlaceholder);
    if (first == std::string::npos) {
        throw ValidationError(fmt::format("template '{}': body has no '{}' placeholder", t.id, kStatementPlaceholder));
    }
    if (t.body.find(kStatementPlaceholder, first + 1) != std::string::npos) {
        throw ValidationError(fmt::format("template '{}': more than one statement placeholder", t.id));
    }
    if (t.labels.positive.empty() || t.labels.negative.empty()) {
        throw ValidationError(fmt::format("template '{}': empty label", t.id));
    }
    if (lower(t.labels.positive) == lower(t.labels.negative)) {
        throw ValidationError(fmt::format("template '{}': labels not distinct", t.id));
    }
    if (find_label(t.body, t.labels.positive) == std::string::npos ||
        find_label(t.body, t.labels.negative) == std::string::npos) {
        throw ValidationError(fmt::format("template '{}': both labels must appear verbatim in the body", t.id));
    }
}

PromptTemplate invert_label_order(const PromptTemplate& t) {
    const std::size_t pos_at = find_label(t.body, t.labels.positive);
    const std::size_t neg_at = find_label(t.body, t.labels.negative);
    if (pos_at == std::string::npos || neg_at == std::string::npos) {
        throw ValidationError(fmt::format("template '{}': body does not contain both labels", t.id));
    }
    const bool pos_first = pos_at < neg_at;
    const std::size_t a = pos_first ? pos_at : neg_at;
    const std::string& a_label = pos_first ? t.labels.positive : t.labels.negative;
    const std::size_t b = pos_first ? neg_at : pos_at;
    const std::string& b_label = pos_first ? t.labels.negative : t.labels.positive;

    PromptTemplate out = t;
    out.body = t.body.substr(0, a) + b_label +
               t.body.substr(a + a_label.size(), b - a - a_label.size()) + a_label +
               t.body.substr(b + b_label.size());
    return out;
}

PromptInstance render_prompt(const PromptTemplate& t, LabelOrder order,
                             const StatementBundle& bundle, VariantKind variant) {
    const PromptTemplate effective = order == LabelOrder::Inverted ? invert_label_order(t) : t;
    const std::string& statement = bundle.variant_text(variant);
    const std::size_t at = effective.body.find(kStatementPlaceholder);
    if (at == std::string::npos) {
        throw ValidationError(fmt::format("template '{}': body has no statement placeholder", t.id));
    }

    PromptInstance out;
    out.template_id = t.id;
    out.label_order = order;
    out.statement_id = bundle.id;
    out.variant = variant;
    out.labels = t.labels;
    out.statement_text = statement;
    out.rendered_text = effective.body.substr(0, at) + statement +
                        effective.body.substr(at + kStatementPlaceholder.size());

    // instruction = body minus the placeholder and any whitespace hugging it
    std::string inst = effective.body.substr(0, at) + effective.body.substr(at + kStatementPlaceholder.size());
    while (!inst.empty() && std::isspace(static_cast<unsigned char>(inst.back()))) inst.pop_back();
    std::size_t lead = 0;
    while (lead < inst.size() && std::isspace(static_cast<unsigned char>(inst[lead]))) ++lead;
    out.instruction = inst.substr(lead);
    return out;
}

JobSet enumerate_jobs(const Corpus& corpus, const std::vector<PromptTemplate>& templates, int samples) {
    if (templates.empty()) throw ValidationError("enumerate_jobs: no templates");
    if (samples < 1) throw ValidationError("enumerate_jobs: samples must be >= 1");
    JobSet set;
    set.samples = samples;
    set.jobs.reserve(corpus.statements.size() * kVariantCount * templates.size() * 2);
    for (const auto& t : templates) {
        for (LabelOrder order : {LabelOrder::Canonical, LabelOrder::Inverted}) {
            for (const auto& bundle : corpus.statements) {
                for (VariantKind variant : all_variant_kinds()) {
                    set.jobs.push_back(Job{render_prompt(t, order, bundle, variant), samples});
                }
            }
        }
    }
    return set;
}

std::vector<std::string> screen_templates(std::vector<TemplateStat> stats) {
    if (stats.empty()) throw ValidationError("screen_templates: empty stats");
    std::sort(stats.begin(), stats.end(), [](const TemplateStat& a, const TemplateStat& b) {
        if (a.mappable_responses != b.mappable_responses) return a.mappable_responses > b.mappable_responses;
        return a.template_id < b.template_id;
    });
    std::vector<std::string> out;
    out.reserve(stats.size());
    for (auto& s : stats) out.push_back(std::move(s.template_id));
    return out;
}

std::vector<std::string> top_k_per_style(const std::vector<std::string>& ranked,
                                         const std::vector<PromptTemplate>& templates,
                                         std::size_t k) {
    std::size_t personal = 0, impersonal = 0;
    std::vector<std::string> out;
    for (const auto& id : ranked) {
        const PromptTemplate* t = find_template(templates, id);
        if (t == nullptr) continue;
        std::size_t& taken = t->style == TemplateStyle::Personal ? personal : impersonal;
        if (taken < k) {
            ++taken;
            out.push_back(id);
        }
    }
    return out;
}

const PromptTemplate* find_template(const std::vector<PromptTemplate>& templates, std::string_view id) {
    for (const auto& t : templates) {
        if (t.id == id) return &t;
    }
    return nullptr;
}

std::vector<PromptTemplate> parse_templates(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(fmt::format("template registry is not valid JSON: {}", e.what()));
    }
    if (!j.is_object() || !j.contains("templates") || !j["templates"].is_array()) {
        throw ParseError("template registry must be an object with a 'templates' array");
    }
    std::vector<PromptTemplate> out;
    std::set<std::string> ids;
    for (const auto& tj : j["templates"]) {
        PromptTemplate t;
        if (!tj.contains("id") || !tj["id"].is_string()) throw ParseError("template without string id");
        t.id = tj["id"].get<std::string>();
        if (!tj.contains("style") || !tj["style"].is_string()) {
            throw ParseError(fmt::format("template '{}': missing style", t.id));
        }
        t.style = template_style_from_string(tj["style"].get<std::string>());
        if (!tj.contains("body") || !tj["body"].is_string()) {
            throw ParseError(fmt::format("template '{}': missing body", t.id));
        }
        t.body = tj["body"].get<std::string>();
        if (!tj.contains("labels") || !tj["labels"].is_array() || tj["labels"].size() != 2) {
            throw ParseError(fmt::format("template '{}': labels must be a [positive, negative] pair", t.id));
        }
        t.labels.positive = tj["labels"][0].get<std::string>();
        t.labels.negative = tj["labels"][1].get<std::string>();
        validate_template(t);
        if (!ids.insert(t.id).second) throw ValidationError(fmt::format("duplicate template id '{}'", t.id));
        out.push_back(std::move(t));
    }
    if (out.empty()) throw ValidationError("template registry contains no templates");
    return out;
}

std::vector<PromptTemplate> load_templates(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(fmt::format("cannot open template registry '{}'", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_templates(buf.str());
}

} // namespace vaaprobe
