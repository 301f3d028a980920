// render_text.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include "lexm/render.hpp"
#include "lexm/text.hpp"

namespace lexm {

namespace {

// Published-form flattening. Differs from plain_text() only in how an
// unresolved cross-reference prints: bracketed, so drafts are readable.
std::string published_inline(const InlineSeq& content) {
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
                    if (n.resolved_number) {
                        out += *n.resolved_number;
                    } else {
                        out += "⟨" + n.target + "⟩";
                    }
                } else if constexpr (std::is_same_v<T, VarSlot>) {
                    out += "⟨" + n.name + "⟩";
                } else {
                    out += connective_word(n.kind);
                }
            },
            node);
    }
    return out;
}

std::string published_line(const InlineSeq& content) {
    return normalize_text(published_inline(content));
}

struct TextRenderer {
    bool numbered = false;
    std::vector<std::string> blocks;

    void render_list(const ListBlock& list, int depth, std::string& out) {
        std::string indent((depth + 1) * 4, ' ');
        for (std::size_t i = 0; i < list.items.size(); ++i) {
            const ListItem& item = list.items[i];
            if (!out.empty()) out += '\n';
            out += indent + item_marker(depth, static_cast<int>(i));
            std::string line = published_line(item.content);
            if (!line.empty()) out += ' ' + line;
            for (const ListBlock& sub : item.sublists) render_list(sub, depth + 1, out);
        }
    }

    void render_blocks(const std::vector<BlockNode>& body, SectionPath& path) {
        int section_index = 0;
        for (const BlockNode& block : body) {
            std::visit(
                [&](const auto& b) {
                    using T = std::decay_t<decltype(b)>;
                    if constexpr (std::is_same_v<T, Section>) {
                        path.push_back(section_index++);
                        std::string heading;
                        if (numbered) heading += section_number(path) + ". ";
                        heading += published_line(b.title);
                        blocks.push_back(std::move(heading));
                        render_blocks(b.children, path);
                        path.pop_back();
                    } else if constexpr (std::is_same_v<T, Paragraph>) {
                        blocks.push_back(published_line(b.content));
                    } else if constexpr (std::is_same_v<T, ListBlock>) {
                        std::string out;
                        render_list(b, 0, out);
                        if (!out.empty()) blocks.push_back(std::move(out));
                    } else {
                        std::string line = normalize_text(b.term) + " means";
                        std::string def = published_line(b.definition);
                        if (!def.empty()) line += ' ' + def;
                        blocks.push_back(std::move(line));
                    }
                },
                block);
        }
    }
};

} // namespace

std::string render_text(const AnalyzedDocument& analyzed, bool numbered) {
    TextRenderer renderer;
    renderer.numbered = numbered;
    if (analyzed.doc.title) {
        renderer.blocks.push_back(published_line(*analyzed.doc.title));
    }
    SectionPath path;
    renderer.render_blocks(analyzed.doc.body, path);

    std::string out;
    for (const std::string& block : renderer.blocks) {
        if (!out.empty()) out += "\n\n";
        out += block;
    }
    if (!out.empty()) out += '\n';
    return out;
}

} // namespace lexm
