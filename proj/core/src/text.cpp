// text.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include "lexm/text.hpp"

#include <algorithm>

namespace lexm {

bool is_space_byte(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool all_whitespace(std::string_view s) {
    return std::all_of(s.begin(), s.end(), is_space_byte);
}

std::string normalize_text(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : s) {
        if (is_space_byte(c)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.push_back(c);
        }
    }
    return out;
}

const char* connective_word(Connective::Kind kind) {
    return kind == Connective::Kind::Or ? "or" : "and";
}

std::string plain_text(const InlineSeq& content) {
    std::string out;
    for (const InlineNode& node : content) {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Text>) {
                    out += n.text;
                } else if constexpr (std::is_same_v<T, TermUse>) {
                    out += n.term;
                } else if constexpr (std::is_same_v<T, LegCite>) {
                    out += n.canonical ? *n.canonical : n.raw;
                } else if constexpr (std::is_same_v<T, CrossRef>) {
                    out += n.resolved_number ? *n.resolved_number : n.target;
                } else if constexpr (std::is_same_v<T, VarSlot>) {
                    out += "⟨";
                    out += n.name;
                    out += "⟩";
                } else if constexpr (std::is_same_v<T, Connective>) {
                    out += connective_word(n.kind);
                }
            },
            node);
    }
    return out;
}

} // namespace lexm
