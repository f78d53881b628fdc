#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vaaprobe {

// ── Policy domains ─────────────────────────────────────────────────────────

enum class PolicyDomain {
    OpenForeignPolicy,
    LiberalEconomicPolicy,
    RestrictiveFinancialPolicy,
    LawAndOrder,
    RestrictiveMigrationPolicy,
    ExpandedEnvironmentProtection,
    ExpandedSocialWelfareState,
    LiberalSociety,
};

inline constexpr std::size_t kPolicyDomainCount = 8;

const std::array<PolicyDomain, kPolicyDomainCount>& all_policy_domains();
std::string_view to_string(PolicyDomain d);
std::string_view display_name(PolicyDomain d);
PolicyDomain policy_domain_from_string(std::string_view s);

// polarity is the value credited to the domain when a respondent AGREES with
// the statement; always +1 or -1
struct DomainAnnotation {
    PolicyDomain domain;
    int polarity = 1;
};

// ── Statement variants ─────────────────────────────────────────────────────

enum class VariantKind { Original, Para1, Para2, Para3, Negation, Opposite };

inline constexpr std::size_t kVariantCount = 6;

const std::array<VariantKind, kVariantCount>& all_variant_kinds();
std::string_view to_string(VariantKind v);
VariantKind variant_kind_from_string(std::string_view s);
bool is_meaning_inverting(VariantKind v); // Negation or Opposite

struct StatementBundle {
    std::string id;
    std::string country;
    std::string text;
    std::vector<std::string> paraphrases; // exactly 3
    std::string negation;
    std::string opposite;
    std::vector<DomainAnnotation> domains; // possibly empty

    const std::string& variant_text(VariantKind v) const;
};

// Fixed order: Original, Para1..3, Negation, Opposite. Always 6 entries.
std::vector<std::pair<VariantKind, std::string>> expand_variants(const StatementBundle& bundle);

// ── Parties ────────────────────────────────────────────────────────────────

enum class PartyAnswer { Agree, Disagree, Neutral };

std::string_view to_string(PartyAnswer a);
PartyAnswer party_answer_from_string(std::string_view s);

enum class Leaning { Left, Center, Right };

std::string_view to_string(Leaning l);

// Chapel Hill left-right scale: <4 left, 4..6 center (inclusive), >6 right.
// Throws ValidationError outside [0,10].
Leaning leaning_of(double score);

struct PartyRecord {
    std::string id;
    std::string name;
    std::string country;
    double ideology_score = 5.0; // [0,10]
    std::map<std::string, PartyAnswer> answers; // statement id -> answer
};

// ── Corpus ─────────────────────────────────────────────────────────────────

struct Corpus {
    std::vector<StatementBundle> statements;
    std::vector<PartyRecord> parties;
    std::map<std::string, std::size_t> country_counts; // derived at load

    const StatementBundle* find_statement(std::string_view id) const;
    const PartyRecord* find_party(std::string_view id) const;
    std::size_t country_statement_count(std::string_view country) const;
};

// Parse + validate. Throws ParseError on malformed input and ValidationError
// naming the first violated invariant.
Corpus load_corpus(const std::filesystem::path& path);
Corpus parse_corpus(std::string_view json_text);
void validate_corpus(Corpus& corpus); // also recomputes country_counts

} // namespace vaaprobe
