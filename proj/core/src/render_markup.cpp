// render_markup.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include <string>

#include "lexm/render.hpp"

namespace lexm {

namespace {

bool needs_escape(char c) {
    return c == '\\' || c == '{' || c == '}' || c == '[' || c == ']' || c == '%';
}

std::string escape_markup(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (needs_escape(c)) out += '\\';
        out += c;
    }
    return out;
}

bool is_ascii_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

void emit_inline(const InlineSeq& content, std::string& out) {
    for (std::size_t i = 0; i < content.size(); ++i) {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, Text>) {
                    out += escape_markup(n.text);
                } else if constexpr (std::is_same_v<T, TermUse>) {
                    out += "\\def{" + escape_markup(n.term) + "}";
                } else if constexpr (std::is_same_v<T, LegCite>) {
                    out += "\\leg{" + escape_markup(n.raw) + "}";
                } else if constexpr (std::is_same_v<T, CrossRef>) {
                    out += "\\ref{" + escape_markup(n.target) + "}";
                } else if constexpr (std::is_same_v<T, VarSlot>) {
                    out += "\\var{" + escape_markup(n.name) + "}";
                } else {
                    out += n.kind == Connective::Kind::Or ? "\\or" : "\\and";
                }
            },
            content[i]);
        // A bare connective followed directly by a letter would fuse into a
        // longer command name on re-parse; an empty group keeps them apart.
        if (std::holds_alternative<Connective>(content[i]) && i + 1 < content.size()) {
            const auto* next_text = std::get_if<Text>(&content[i + 1]);
            if (next_text && !next_text->text.empty() && is_ascii_letter(next_text->text[0]))
                out += "{}";
        }
    }
}

std::string inline_markup(const InlineSeq& content) {
    std::string out;
    emit_inline(content, out);
    return out;
}

void emit_list(const ListBlock& list, std::string& out) {
    out += "\\begin{itemize}\n";
    for (const ListItem& item : list.items) {
        out += "\\item";
        std::string content = inline_markup(item.content);
        if (!content.empty()) {
            out += ' ';
            out += content;
        }
        out += '\n';
        for (const ListBlock& sub : item.sublists) emit_list(sub, out);
    }
    out += "\\end{itemize}";
}

void emit_block(const BlockNode& block, std::string& out);

void emit_section(const Section& section, std::string& out) {
    static const char* kLevelCommands[] = {"\\section", "\\subsection", "\\subsubsection"};
    int level = std::min(std::max(section.level, 1), 3);
    out += kLevelCommands[level - 1];
    if (!section.types.empty() || section.label) {
        out += '[';
        for (const std::string& type : section.types)
            out += "\\type{" + escape_markup(type) + "}";
        if (section.label) out += "\\label{" + escape_markup(*section.label) + "}";
        out += ']';
    }
    out += '{' + inline_markup(section.title) + '}';
    for (const BlockNode& child : section.children) {
        out += "\n\n";
        emit_block(child, out);
    }
}

void emit_block(const BlockNode& block, std::string& out) {
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Section>) {
                emit_section(b, out);
            } else if constexpr (std::is_same_v<T, Paragraph>) {
                out += inline_markup(b.content);
            } else if constexpr (std::is_same_v<T, ListBlock>) {
                emit_list(b, out);
            } else {
                out += "\\define{" + escape_markup(b.term) + "}{" +
                       inline_markup(b.definition) + "}";
            }
        },
        block);
}

} // namespace

std::string render_markup_inline(const InlineSeq& content) { return inline_markup(content); }

std::string render_markup_fragment(const BlockNode& block) {
    std::string out;
    emit_block(block, out);
    return out;
}

std::string render_markup(const Document& doc) {
    std::string out;
    bool first = true;
    auto separate = [&] {
        if (!first) out += "\n\n";
        first = false;
    };
    if (doc.title) {
        separate();
        out += "\\title{" + inline_markup(*doc.title) + "}";
    }
    for (const BlockNode& block : doc.body) {
        separate();
        emit_block(block, out);
    }
    if (!out.empty()) out += '\n';
    return out;
}

} // namespace lexm
