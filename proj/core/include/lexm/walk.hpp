// walk.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <type_traits>
#include <variant>
#include <vector>

#include "lexm/model.hpp"

namespace lexm {

/// Sibling indices among sections only; see analyzer.hpp.
namespace walk_detail {

template <typename List, typename F>
void seqs_in_list(List& list, F& f) {
    for (auto& item : list.items) {
        f(item.content);
        for (auto& sub : item.sublists) seqs_in_list(sub, f);
    }
}

template <typename Blocks, typename F>
void seqs_in_blocks(Blocks& blocks, F& f) {
    for (auto& block : blocks) {
        std::visit(
            [&](auto& b) {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, Section>) {
                    f(b.title);
                    seqs_in_blocks(b.children, f);
                } else if constexpr (std::is_same_v<T, Paragraph>) {
                    f(b.content);
                } else if constexpr (std::is_same_v<T, ListBlock>) {
                    seqs_in_list(b, f);
                } else {
                    f(b.definition);
                }
            },
            block);
    }
}

template <typename F>
void sections_in_blocks(const std::vector<BlockNode>& blocks, std::vector<int>& path, F& f) {
    int index = 0;
    for (const BlockNode& block : blocks) {
        if (const auto* section = std::get_if<Section>(&block)) {
            path.push_back(index++);
            f(*section, path);
            sections_in_blocks(section->children, path, f);
            path.pop_back();
        }
    }
}

template <typename F>
void lists_in(const ListBlock& list, int depth, F& f) {
    f(list, depth);
    for (const ListItem& item : list.items)
        for (const ListBlock& sub : item.sublists) lists_in(sub, depth + 1, f);
}

} // namespace walk_detail

/// Visits every inline sequence (document title, section titles, paragraphs,
/// list items, definitions) in document order.
template <typename F>
void for_each_seq(const Document& doc, F f) {
    if (doc.title) f(*doc.title);
    walk_detail::seqs_in_blocks(doc.body, f);
}

template <typename F>
void for_each_seq_mut(Document& doc, F f) {
    if (doc.title) f(*doc.title);
    walk_detail::seqs_in_blocks(doc.body, f);
}

/// Visits every section with its path, document order, depth first.
template <typename F>
void for_each_section(const Document& doc, F f) {
    std::vector<int> path;
    walk_detail::sections_in_blocks(doc.body, path, f);
}

/// Visits every list (with nesting depth) in the given blocks; descends into
/// child sections only when asked.
template <typename F>
void for_each_list(const std::vector<BlockNode>& blocks, bool descend_sections, F f) {
    for (const BlockNode& block : blocks) {
        if (const auto* section = std::get_if<Section>(&block)) {
            if (descend_sections) for_each_list(section->children, true, f);
        } else if (const auto* list = std::get_if<ListBlock>(&block)) {
            walk_detail::lists_in(*list, 0, f);
        }
    }
}

} // namespace lexm
