#include "vaaprobe/stancemap.hpp"

#include "vaaprobe/errors.hpp"

#include <algorithm>
#include <cctype>

namespace vaaprobe {

std::string_view to_string(Stance s) {
    switch (s) {
    case Stance::Positive: return "positive";
    case Stance::Negative: return "negative";
    case Stance::Invalid: return "invalid";
    }
    return "invalid";
}

Stance stance_from_string(std::string_view s) {
    if (s == "positive") return Stance::Positive;
    if (s == "negative") return Stance::Negative;
    if (s == "invalid") return Stance::Invalid;
    throw ParseError("unknown stance '" + std::string(s) + "'");
}

Stance flip(Stance s) {
    switch (s) {
    case Stance::Positive: return Stance::Negative;
    case Stance::Negative: return Stance::Positive;
    case Stance::Invalid: return Stance::Invalid;
    }
    return Stance::Invalid;
}

namespace {

// Lowercase, keep alphanumerics and apostrophes (so "don't" survives as one
// token), everything else becomes a separator.
std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    auto push = [&] {
        if (!cur.empty()) {
            tokens.push_back(cur);
            cur.clear();
        }
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        // normalize the UTF-8 right single quote to a plain apostrophe
        if (c == 0xe2 && i + 2 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0x80 &&
            static_cast<unsigned char>(text[i + 2]) == 0x99) {
            cur.push_back('\'');
            i += 2;
            continue;
        }
        if (std::isalnum(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (c == '\'') {
            cur.push_back('\'');
        } else {
            push();
        }
    }
    push();
    return tokens;
}

bool tokens_match_at(const std::vector<std::string>& tokens, std::size_t pos,
                     const std::vector<std::string>& needle) {
    if (needle.empty() || pos + needle.size() > tokens.size()) return false;
    for (std::size_t i = 0; i < needle.size(); ++i) {
        if (tokens[pos + i] != needle[i]) return false;
    }
    return true;
}

bool is_negation_marker(const std::string& token, const std::vector<std::string>& markers) {
    for (const auto& m : markers) {
        if (token == m) return true;
        // "n't" rides on the verb ("don't", "wouldn't"); match it as a suffix
        if (m == "n't" && token.size() > 3 && token.compare(token.size() - 3, 3, "n't") == 0) {
            return true;
        }
    }
    return false;
}

} // namespace

Stance map_response(std::string_view text, const LabelPair& labels, const MapRules& rules) {
    const std::vector<std::string> tokens = tokenize(text);

    for (const auto& pattern : rules.refusal_patterns) {
        const std::vector<std::string> needle = tokenize(pattern);
        for (std::size_t i = 0; i + needle.size() <= tokens.size(); ++i) {
            if (tokens_match_at(tokens, i, needle)) return Stance::Invalid;
        }
    }

    const std::vector<std::string> pos_label = tokenize(labels.positive);
    const std::vector<std::string> neg_label = tokenize(labels.negative);

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        bool pos_here = tokens_match_at(tokens, i, pos_label);
        bool neg_here = tokens_match_at(tokens, i, neg_label);
        if (!pos_here && !neg_here) continue;
        // longest label wins when both match at the same position
        Stance stance;
        if (pos_here && neg_here) {
            stance = pos_label.size() >= neg_label.size() ? Stance::Positive : Stance::Negative;
        } else {
            stance = pos_here ? Stance::Positive : Stance::Negative;
        }
        const std::size_t window = static_cast<std::size_t>(std::max(rules.negation_window, 0));
        for (std::size_t back = 1; back <= window && back <= i; ++back) {
            if (is_negation_marker(tokens[i - back], rules.negation_markers)) {
                stance = flip(stance);
                break;
            }
        }
        return stance;
    }
    return Stance::Invalid;
}

} // namespace vaaprobe
