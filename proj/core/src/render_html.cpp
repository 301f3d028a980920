// render_html.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "lexm/render.hpp"
#include "lexm/text.hpp"

namespace lexm {

namespace {

std::string escape_html(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&#39;"; break;
            default: out += c;
        }
    }
    return out;
}

constexpr const char* kStyle = R"css(
body { font-family: Georgia, 'Times New Roman', serif; line-height: 1.5;
       max-width: 52rem; margin: 2rem auto; padding: 0 1rem; color: #222; }
h1, h2, h3, h4 { font-family: inherit; line-height: 1.25; }
nav.toc { border: 1px solid #ddd; background: #fafafa; padding: .75rem 1.25rem;
          margin-bottom: 2rem; }
nav.toc ul { margin: .25rem 0; padding-left: 1.25rem; }
nav.toc a { text-decoration: none; }
ul.items { list-style: none; padding-left: 2rem; }
ul.items > li { margin: .25rem 0; }
.marker { display: inline-block; min-width: 2.5rem; }
.term { position: relative; border-bottom: 1px dotted #777; cursor: help; }
.term > .tooltip { display: none; position: absolute; left: 0; top: 1.5em;
                   z-index: 1; min-width: 18em; max-width: 28em;
                   background: #fffbe8; border: 1px solid #aaa;
                   padding: .4em .7em; font-size: .9em; font-style: normal;
                   font-weight: normal; }
.term:hover > .tooltip { display: block; }
.var { color: #8a4b00; background: #fff3e0; padding: 0 .15em; }
.ref.unresolved { color: #8a0000; }
p.definition dfn { font-style: normal; font-weight: bold; }
)css";

struct HtmlRenderer {
    const AnalyzedDocument& analyzed;
    std::string out;

    std::string tooltip_for(const std::string& term) const {
        auto it = analyzed.tables.definitions.find(term);
        if (it == analyzed.tables.definitions.end()) return "undefined term";
        return normalize_text(plain_text(it->second.definition));
    }

    void emit_inline(const InlineSeq& content) {
        for (const InlineNode& node : content) {
            std::visit(
                [&](const auto& n) {
                    using T = std::decay_t<decltype(n)>;
                    if constexpr (std::is_same_v<T, Text>) {
                        out += escape_html(n.text);
                    } else if constexpr (std::is_same_v<T, TermUse>) {
                        out += "<span class=\"term\">" + escape_html(n.term) +
                               "<span class=\"tooltip\">" + escape_html(tooltip_for(n.term)) +
                               "</span></span>";
                    } else if constexpr (std::is_same_v<T, LegCite>) {
                        out += "<cite class=\"leg\">" +
                               escape_html(n.canonical ? *n.canonical : n.raw) + "</cite>";
                    } else if constexpr (std::is_same_v<T, CrossRef>) {
                        if (n.resolved_number) {
                            out += "<a class=\"ref\" href=\"#sec-" +
                                   escape_html(*n.resolved_number) + "\">" +
                                   escape_html(*n.resolved_number) + "</a>";
                        } else {
                            out += "<span class=\"ref unresolved\">⟨" +
                                   escape_html(n.target) + "⟩</span>";
                        }
                    } else if constexpr (std::is_same_v<T, VarSlot>) {
                        out += "<span class=\"var\">⟨" + escape_html(n.name) +
                               "⟩</span>";
                    } else {
                        out += connective_word(n.kind);
                    }
                },
                node);
        }
    }

    void emit_list(const ListBlock& list, int depth) {
        out += "<ul class=\"items\">\n";
        for (std::size_t i = 0; i < list.items.size(); ++i) {
            const ListItem& item = list.items[i];
            out += "<li><span class=\"marker\">" +
                   item_marker(depth, static_cast<int>(i)) + "</span> ";
            emit_inline(item.content);
            for (const ListBlock& sub : item.sublists) {
                out += '\n';
                emit_list(sub, depth + 1);
            }
            out += "</li>\n";
        }
        out += "</ul>\n";
    }

    void emit_blocks(const std::vector<BlockNode>& blocks, SectionPath& path) {
        int section_index = 0;
        for (const BlockNode& block : blocks) {
            std::visit(
                [&](const auto& b) {
                    using T = std::decay_t<decltype(b)>;
                    if constexpr (std::is_same_v<T, Section>) {
                        path.push_back(section_index++);
                        emit_section(b, path);
                        path.pop_back();
                    } else if constexpr (std::is_same_v<T, Paragraph>) {
                        out += "<p>";
                        emit_inline(b.content);
                        out += "</p>\n";
                    } else if constexpr (std::is_same_v<T, ListBlock>) {
                        emit_list(b, 0);
                    } else {
                        out += "<p class=\"definition\"><dfn>" + escape_html(b.term) +
                               "</dfn> means ";
                        emit_inline(b.definition);
                        out += "</p>\n";
                    }
                },
                block);
        }
    }

    void emit_section(const Section& section, SectionPath& path) {
        std::string number = section_number(path);
        out += "<section id=\"sec-" + escape_html(number) + "\"";
        if (!section.types.empty()) {
            // Category labels stay out of the published text.
            std::string joined;
            for (const std::string& type : section.types) {
                if (!joined.empty()) joined += ", ";
                joined += type;
            }
            out += " data-type=\"" + escape_html(joined) + "\"";
        }
        out += ">\n";
        int h = std::min(section.level, 3) + 1;
        out += "<h" + std::to_string(h) + ">";
        emit_inline(section.title);
        out += "</h" + std::to_string(h) + ">\n";
        emit_blocks(section.children, path);
        out += "</section>\n";
    }

    void emit_toc_level(const std::vector<BlockNode>& blocks, SectionPath& path) {
        bool any = false;
        for (const BlockNode& block : blocks)
            if (std::holds_alternative<Section>(block)) any = true;
        if (!any) return;
        out += "<ul>\n";
        int section_index = 0;
        for (const BlockNode& block : blocks) {
            const auto* section = std::get_if<Section>(&block);
            if (!section) continue;
            path.push_back(section_index++);
            std::string number = section_number(path);
            out += "<li><a href=\"#sec-" + escape_html(number) + "\">" +
                   escape_html(number) + " " +
                   escape_html(normalize_text(plain_text(section->title))) + "</a>";
            emit_toc_level(section->children, path);
            out += "</li>\n";
            path.pop_back();
        }
        out += "</ul>\n";
    }

    std::string run() {
        const Document& doc = analyzed.doc;
        std::string page_title = doc.title ? normalize_text(plain_text(*doc.title))
                                           : doc.source_path;
        out += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
        out += "<title>" + escape_html(page_title) + "</title>\n";
        out += "<style>";
        out += kStyle;
        out += "</style>\n</head>\n<body>\n";
        if (doc.title) {
            out += "<h1>";
            emit_inline(*doc.title);
            out += "</h1>\n";
        }
        SectionPath path;
        out += "<nav class=\"toc\">\n";
        emit_toc_level(doc.body, path);
        out += "</nav>\n<main>\n";
        emit_blocks(doc.body, path);
        out += "</main>\n</body>\n</html>\n";
        return std::move(out);
    }
};

} // namespace

std::string render_html(const AnalyzedDocument& analyzed) {
    HtmlRenderer renderer{analyzed, {}};
    return renderer.run();
}

} // namespace lexm
