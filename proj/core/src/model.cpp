// model.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include "lexm/model.hpp"

#include "lexm/text.hpp"

namespace lexm {

namespace {

bool eq(const InlineSeq& a, const InlineSeq& b);
bool eq(const std::vector<BlockNode>& a, const std::vector<BlockNode>& b);

bool eq(const InlineNode& a, const InlineNode& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& na) {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b);
            if constexpr (std::is_same_v<T, Text>) {
                return na.text == nb.text;
            } else if constexpr (std::is_same_v<T, TermUse>) {
                return na.term == nb.term;
            } else if constexpr (std::is_same_v<T, LegCite>) {
                return na.raw == nb.raw && na.canonical == nb.canonical;
            } else if constexpr (std::is_same_v<T, CrossRef>) {
                return na.target == nb.target && na.resolved_number == nb.resolved_number;
            } else if constexpr (std::is_same_v<T, VarSlot>) {
                return na.name == nb.name;
            } else {
                return na.kind == std::get<Connective>(b).kind;
            }
        },
        a);
}

bool eq(const InlineSeq& a, const InlineSeq& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!eq(a[i], b[i])) return false;
    return true;
}

bool eq(const ListBlock& a, const ListBlock& b);

bool eq(const ListItem& a, const ListItem& b) {
    if (!eq(a.content, b.content)) return false;
    if (a.sublists.size() != b.sublists.size()) return false;
    for (std::size_t i = 0; i < a.sublists.size(); ++i)
        if (!eq(a.sublists[i], b.sublists[i])) return false;
    return true;
}

bool eq(const ListBlock& a, const ListBlock& b) {
    if (a.items.size() != b.items.size()) return false;
    for (std::size_t i = 0; i < a.items.size(); ++i)
        if (!eq(a.items[i], b.items[i])) return false;
    return true;
}

bool eq(const BlockNode& a, const BlockNode& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& na) {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b);
            if constexpr (std::is_same_v<T, Section>) {
                return na.level == nb.level && na.types == nb.types &&
                       na.label == nb.label && eq(na.title, nb.title) &&
                       eq(na.children, nb.children);
            } else if constexpr (std::is_same_v<T, Paragraph>) {
                return eq(na.content, nb.content);
            } else if constexpr (std::is_same_v<T, ListBlock>) {
                return eq(na, nb);
            } else {
                return na.term == nb.term && eq(na.definition, nb.definition);
            }
        },
        a);
}

bool eq(const std::vector<BlockNode>& a, const std::vector<BlockNode>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!eq(a[i], b[i])) return false;
    return true;
}

} // namespace

bool structurally_equal(const InlineNode& a, const InlineNode& b) { return eq(a, b); }
bool structurally_equal(const InlineSeq& a, const InlineSeq& b) { return eq(a, b); }
bool structurally_equal(const BlockNode& a, const BlockNode& b) { return eq(a, b); }

bool structurally_equal(const Document& a, const Document& b) {
    if (a.title.has_value() != b.title.has_value()) return false;
    if (a.title && !eq(*a.title, *b.title)) return false;
    return eq(a.body, b.body);
}

} // namespace lexm
