#include "vaaprobe/corpus.hpp"

#include "vaaprobe/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace vaaprobe {

using nlohmann::json;

// ── Enum tables ────────────────────────────────────────────────────────────

namespace {

struct DomainName {
    PolicyDomain domain;
    std::string_view code;
    std::string_view display;
};

constexpr std::array<DomainName, kPolicyDomainCount> kDomainNames{{
    {PolicyDomain::OpenForeignPolicy, "open_foreign_policy", "Open foreign policy"},
    {PolicyDomain::LiberalEconomicPolicy, "liberal_economic_policy", "Liberal economic policy"},
    {PolicyDomain::RestrictiveFinancialPolicy, "restrictive_financial_policy", "Restrictive financial policy"},
    {PolicyDomain::LawAndOrder, "law_and_order", "Law and order"},
    {PolicyDomain::RestrictiveMigrationPolicy, "restrictive_migration_policy", "Restrictive migration policy"},
    {PolicyDomain::ExpandedEnvironmentProtection, "expanded_environment_protection", "Expanded environment protection"},
    {PolicyDomain::ExpandedSocialWelfareState, "expanded_social_welfare_state", "Expanded social welfare state"},
    {PolicyDomain::LiberalSociety, "liberal_society", "Liberal society"},
}};

constexpr std::array<std::string_view, kVariantCount> kVariantNames{
    "original", "para1", "para2", "para3", "negation", "opposite"};

} // namespace

const std::array<PolicyDomain, kPolicyDomainCount>& all_policy_domains() {
    static const std::array<PolicyDomain, kPolicyDomainCount> domains = [] {
        std::array<PolicyDomain, kPolicyDomainCount> out{};
        for (std::size_t i = 0; i < kPolicyDomainCount; ++i) out[i] = kDomainNames[i].domain;
        return out;
    }();
    return domains;
}

std::string_view to_string(PolicyDomain d) { return kDomainNames[static_cast<std::size_t>(d)].code; }

std::string_view display_name(PolicyDomain d) { return kDomainNames[static_cast<std::size_t>(d)].display; }

PolicyDomain policy_domain_from_string(std::string_view s) {
    for (const auto& entry : kDomainNames) {
        if (entry.code == s) return entry.domain;
    }
    throw ParseError(fmt::format("unknown policy domain '{}'", s));
}

const std::array<VariantKind, kVariantCount>& all_variant_kinds() {
    static const std::array<VariantKind, kVariantCount> kinds{
        VariantKind::Original, VariantKind::Para1, VariantKind::Para2,
        VariantKind::Para3, VariantKind::Negation, VariantKind::Opposite};
    return kinds;
}

std::string_view to_string(VariantKind v) { return kVariantNames[static_cast<std::size_t>(v)]; }

VariantKind variant_kind_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kVariantCount; ++i) {
        if (kVariantNames[i] == s) return static_cast<VariantKind>(i);
    }
    throw ParseError(fmt::format("unknown variant kind '{}'", s));
}

bool is_meaning_inverting(VariantKind v) {
    return v == VariantKind::Negation || v == VariantKind::Opposite;
}

std::string_view to_string(PartyAnswer a) {
    switch (a) {
    case PartyAnswer::Agree: return "agree";
    case PartyAnswer::Disagree: return "disagree";
    case PartyAnswer::Neutral: return "neutral";
    }
    return "neutral";
}

PartyAnswer party_answer_from_string(std::string_view s) {
    if (s == "agree") return PartyAnswer::Agree;
    if (s == "disagree") return PartyAnswer::Disagree;
    if (s == "neutral") return PartyAnswer::Neutral;
    throw ParseError(fmt::format("unknown party answer '{}'", s));
}

std::string_view to_string(Leaning l) {
    switch (l) {
    case Leaning::Left: return "left";
    case Leaning::Center: return "center";
    case Leaning::Right: return "right";
    }
    return "center";
}

Leaning leaning_of(double score) {
    if (score < 0.0 || score > 10.0) {
        throw ValidationError(fmt::format("ideology score {} outside [0,10]", score));
    }
    if (score < 4.0) return Leaning::Left;
    if (score <= 6.0) return Leaning::Center; // endpoints read inclusively
    return Leaning::Right;
}

// ── Bundle helpers ─────────────────────────────────────────────────────────

const std::string& StatementBundle::variant_text(VariantKind v) const {
    switch (v) {
    case VariantKind::Original: return text;
    case VariantKind::Para1: return paraphrases.at(0);
    case VariantKind::Para2: return paraphrases.at(1);
    case VariantKind::Para3: return paraphrases.at(2);
    case VariantKind::Negation: return negation;
    case VariantKind::Opposite: return opposite;
    }
    throw std::logic_error("unreachable variant kind");
}

std::vector<std::pair<VariantKind, std::string>> expand_variants(const StatementBundle& bundle) {
    std::vector<std::pair<VariantKind, std::string>> out;
    out.reserve(kVariantCount);
    for (VariantKind v : all_variant_kinds()) {
        out.emplace_back(v, bundle.variant_text(v));
    }
    return out;
}

// ── Corpus lookups ─────────────────────────────────────────────────────────

const StatementBundle* Corpus::find_statement(std::string_view id) const {
    for (const auto& s : statements) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

const PartyRecord* Corpus::find_party(std::string_view id) const {
    for (const auto& p : parties) {
        if (p.id == id) return &p;
    }
    return nullptr;
}

std::size_t Corpus::country_statement_count(std::string_view country) const {
    auto it = country_counts.find(std::string(country));
    return it == country_counts.end() ? 0 : it->second;
}

// ── Parsing ────────────────────────────────────────────────────────────────

namespace {

std::string require_string(const json& j, const char* field, const std::string& where) {
    if (!j.contains(field) || !j[field].is_string()) {
        throw ParseError(fmt::format("{}: missing or non-string field '{}'", where, field));
    }
    return j[field].get<std::string>();
}

StatementBundle parse_bundle(const json& j, std::size_t index) {
    const std::string where = fmt::format("statements[{}]", index);
    StatementBundle b;
    b.id = require_string(j, "id", where);
    b.country = require_string(j, "country", where);
    b.text = require_string(j, "text", where);
    b.negation = require_string(j, "negation", where);
    b.opposite = require_string(j, "opposite", where);
    if (!j.contains("paraphrases") || !j["paraphrases"].is_array()) {
        throw ParseError(fmt::format("{}: missing 'paraphrases' array", where));
    }
    for (const auto& p : j["paraphrases"]) {
        if (!p.is_string()) throw ParseError(fmt::format("{}: non-string paraphrase", where));
        b.paraphrases.push_back(p.get<std::string>());
    }
    if (j.contains("domains")) {
        for (const auto& d : j["domains"]) {
            DomainAnnotation a;
            a.domain = policy_domain_from_string(require_string(d, "domain", where));
            if (!d.contains("polarity") || !d["polarity"].is_number_integer()) {
                throw ParseError(fmt::format("{}: domain annotation without integer polarity", where));
            }
            a.polarity = d["polarity"].get<int>();
            b.domains.push_back(a);
        }
    }
    return b;
}

PartyRecord parse_party(const json& j, std::size_t index) {
    const std::string where = fmt::format("parties[{}]", index);
    PartyRecord p;
    p.id = require_string(j, "id", where);
    p.name = j.contains("name") ? require_string(j, "name", where) : p.id;
    p.country = require_string(j, "country", where);
    if (!j.contains("ideology_score") || !j["ideology_score"].is_number()) {
        throw ParseError(fmt::format("{}: missing numeric 'ideology_score'", where));
    }
    p.ideology_score = j["ideology_score"].get<double>();
    if (j.contains("answers")) {
        if (!j["answers"].is_object()) {
            throw ParseError(fmt::format("{}: 'answers' must be an object", where));
        }
        for (const auto& [sid, ans] : j["answers"].items()) {
            if (!ans.is_string()) throw ParseError(fmt::format("{}: non-string answer for '{}'", where, sid));
            p.answers.emplace(sid, party_answer_from_string(ans.get<std::string>()));
        }
    }
    return p;
}

} // namespace

Corpus parse_corpus(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(fmt::format("corpus is not valid JSON: {}", e.what()));
    }
    if (!j.is_object() || !j.contains("statements") || !j["statements"].is_array()) {
        throw ParseError("corpus must be an object with a 'statements' array");
    }
    Corpus corpus;
    std::size_t i = 0;
    for (const auto& s : j["statements"]) corpus.statements.push_back(parse_bundle(s, i++));
    if (j.contains("parties")) {
        if (!j["parties"].is_array()) throw ParseError("'parties' must be an array");
        i = 0;
        for (const auto& p : j["parties"]) corpus.parties.push_back(parse_party(p, i++));
    }
    validate_corpus(corpus);
    return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(fmt::format("cannot open corpus file '{}'", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str());
}

// ── Validation ─────────────────────────────────────────────────────────────

void validate_corpus(Corpus& corpus) {
    std::set<std::string> statement_ids;
    for (const auto& b : corpus.statements) {
        if (b.id.empty()) throw ValidationError("statement id: empty id");
        if (!statement_ids.insert(b.id).second) {
            throw ValidationError(fmt::format("duplicate statement id '{}'", b.id));
        }
        if (b.country.empty()) {
            throw ValidationError(fmt::format("statement '{}': empty country code", b.id));
        }
        if (b.paraphrases.size() != 3) {
            throw ValidationError(fmt::format(
                "paraphrase count: statement '{}' has {} paraphrases, expected exactly 3",
                b.id, b.paraphrases.size()));
        }
        std::set<std::string_view> texts;
        for (VariantKind v : all_variant_kinds()) {
            const std::string& t = b.variant_text(v);
            if (t.empty()) {
                throw ValidationError(fmt::format("statement '{}': empty {} text", b.id, to_string(v)));
            }
            if (!texts.insert(t).second) {
                throw ValidationError(fmt::format(
                    "statement '{}': {} text duplicates another variant", b.id, to_string(v)));
            }
        }
        std::set<PolicyDomain> seen;
        for (const auto& a : b.domains) {
            if (a.polarity != 1 && a.polarity != -1) {
                throw ValidationError(fmt::format(
                    "statement '{}': polarity {} not in {{-1,+1}}", b.id, a.polarity));
            }
            if (!seen.insert(a.domain).second) {
                throw ValidationError(fmt::format(
                    "statement '{}': domain '{}' annotated twice", b.id, to_string(a.domain)));
            }
        }
    }

    std::set<std::string> party_ids;
    for (const auto& p : corpus.parties) {
        if (p.id.empty()) throw ValidationError("party id: empty id");
        if (!party_ids.insert(p.id).second) {
            throw ValidationError(fmt::format("duplicate party id '{}'", p.id));
        }
        if (p.ideology_score < 0.0 || p.ideology_score > 10.0) {
            throw ValidationError(fmt::format(
                "party '{}': ideology score {} outside [0,10]", p.id, p.ideology_score));
        }
        for (const auto& [sid, _] : p.answers) {
            const StatementBundle* s = corpus.find_statement(sid);
            if (s == nullptr) {
                throw ValidationError(fmt::format(
                    "dangling reference: party '{}' answers unknown statement '{}'", p.id, sid));
            }
            if (s->country != p.country) {
                throw ValidationError(fmt::format(
                    "party '{}' ({}): answers statement '{}' from country '{}'",
                    p.id, p.country, sid, s->country));
            }
        }
    }

    corpus.country_counts.clear();
    for (const auto& b : corpus.statements) corpus.country_counts[b.country]++;
}

} // namespace vaaprobe
