// analyzer.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include "lexm/analyzer.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "lexm/text.hpp"
#include "lexm/walk.hpp"

namespace lexm {

namespace {

void number_list(const ListBlock& list, int depth, std::vector<int>& path, Numbering& out) {
    for (std::size_t i = 0; i < list.items.size(); ++i) {
        path.push_back(static_cast<int>(i));
        out.items[path] = item_marker(depth, static_cast<int>(i));
        const ListItem& item = list.items[i];
        for (std::size_t s = 0; s < item.sublists.size(); ++s) {
            path.push_back(static_cast<int>(s));
            number_list(item.sublists[s], depth + 1, path, out);
            path.pop_back();
        }
        path.pop_back();
    }
}

void number_blocks(const std::vector<BlockNode>& blocks, SectionPath& section_path,
                   std::vector<int>& block_path, Numbering& out) {
    int section_index = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        block_path.push_back(static_cast<int>(b));
        const BlockNode& block = blocks[b];
        if (const auto* section = std::get_if<Section>(&block)) {
            section_path.push_back(section_index++);
            out.sections[section_path] = section_number(section_path);
            number_blocks(section->children, section_path, block_path, out);
            section_path.pop_back();
        } else if (const auto* list = std::get_if<ListBlock>(&block)) {
            number_list(*list, 0, block_path, out);
        }
        block_path.pop_back();
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Markers and numbers
// ---------------------------------------------------------------------------

std::string section_number(const SectionPath& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(path[i] + 1);
    }
    return out;
}

std::string alpha_marker(int index) {
    // Bijective base 26: 0 -> "a", 25 -> "z", 26 -> "aa".
    std::string out;
    int n = index + 1;
    while (n > 0) {
        --n;
        out.insert(out.begin(), static_cast<char>('a' + n % 26));
        n /= 26;
    }
    return out;
}

std::string roman_marker(int index) {
    static constexpr std::pair<int, const char*> kSteps[] = {
        {1000, "m"}, {900, "cm"}, {500, "d"}, {400, "cd"}, {100, "c"}, {90, "xc"},
        {50, "l"},   {40, "xl"},  {10, "x"},  {9, "ix"},   {5, "v"},   {4, "iv"},
        {1, "i"},
    };
    int n = index + 1;
    std::string out;
    for (const auto& [value, digits] : kSteps) {
        while (n >= value) {
            out += digits;
            n -= value;
        }
    }
    return out;
}

std::string item_marker(int nesting_depth, int index) {
    std::string inner;
    switch (nesting_depth) {
        case 0: inner = alpha_marker(index); break;
        case 1: inner = roman_marker(index); break;
        case 2:
            inner = alpha_marker(index);
            for (char& c : inner) c = static_cast<char>(c - 'a' + 'A');
            break;
        default: inner = std::to_string(index + 1); break;
    }
    return "(" + inner + ")";
}

Numbering assign_numbers(const Document& doc) {
    Numbering out;
    SectionPath section_path;
    std::vector<int> block_path;
    number_blocks(doc.body, section_path, block_path, out);
    return out;
}

// ---------------------------------------------------------------------------
// Symbol tables
// ---------------------------------------------------------------------------

SymbolTables build_tables(const Document& doc, const Numbering& numbering) {
    SymbolTables tables;

    // Declarations first; uses match document-globally, so a term may be
    // used above its Definitions section.
    std::function<void(const std::vector<BlockNode>&)> collect_defs =
        [&](const std::vector<BlockNode>& blocks) {
            for (const BlockNode& block : blocks) {
                if (const auto* def = std::get_if<DefineBlock>(&block)) {
                    auto [it, inserted] = tables.definitions.try_emplace(
                        def->term, DefinitionInfo{def->definition, def->span, {}});
                    if (!inserted)
                        tables.duplicate_definitions.emplace_back(def->term, def->span);
                } else if (const auto* section = std::get_if<Section>(&block)) {
                    collect_defs(section->children);
                }
            }
        };
    collect_defs(doc.body);

    for_each_seq(doc, [&](const InlineSeq& seq) {
        for (const InlineNode& node : seq) {
            if (const auto* use = std::get_if<TermUse>(&node)) {
                auto it = tables.definitions.find(use->term);
                if (it != tables.definitions.end()) {
                    it->second.uses.push_back(use->span);
                } else {
                    tables.undefined_uses[use->term].push_back(use->span);
                }
            } else if (const auto* cite = std::get_if<LegCite>(&node)) {
                tables.legislation[normalize_citation(cite->raw)].push_back(
                    CiteOccurrence{cite->raw, cite->span});
            }
        }
    });

    for_each_section(doc, [&](const Section& section, const SectionPath& path) {
        const std::string& number = numbering.sections.at(path);
        if (section.label) {
            tables.labels[*section.label].push_back(LabelTarget{path, number, true});
        }
        std::string title_key = normalize_text(plain_text(section.title));
        if (!title_key.empty()) {
            tables.labels[title_key].push_back(LabelTarget{path, number, false});
        }
        for (const std::string& type : section.types) {
            tables.types[type].push_back(path);
        }
    });

    return tables;
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

std::vector<Diagnostic> check_definitions(const SymbolTables& tables) {
    std::vector<Diagnostic> out;
    for (const auto& [term, spans] : tables.undefined_uses) {
        for (const SourceSpan& span : spans) {
            out.push_back(make_diagnostic(
                "E010", span, "term '" + term + "' is used but never defined"));
        }
    }
    for (const auto& [term, info] : tables.definitions) {
        if (info.uses.empty()) {
            out.push_back(make_diagnostic(
                "W011", info.decl_span, "term '" + term + "' is defined but never used"));
        }
    }
    for (const auto& [term, span] : tables.duplicate_definitions) {
        out.push_back(
            make_diagnostic("E012", span, "duplicate definition of term '" + term + "'"));
    }
    return out;
}

std::pair<Document, std::vector<Diagnostic>> resolve_refs(Document doc,
                                                          const SymbolTables& tables) {
    std::vector<Diagnostic> diags;
    for_each_seq_mut(doc, [&](InlineSeq& seq) {
        for (InlineNode& node : seq) {
            auto* ref = std::get_if<CrossRef>(&node);
            if (!ref) continue;
            auto it = tables.labels.find(ref->target);
            const LabelTarget* hit = nullptr;
            if (it != tables.labels.end()) {
                // Explicit \label keys shadow title-derived keys.
                std::size_t explicit_hits = 0;
                std::size_t title_hits = 0;
                const LabelTarget* first_explicit = nullptr;
                const LabelTarget* first_title = nullptr;
                for (const LabelTarget& target : it->second) {
                    if (target.explicit_label) {
                        ++explicit_hits;
                        if (!first_explicit) first_explicit = &target;
                    } else {
                        ++title_hits;
                        if (!first_title) first_title = &target;
                    }
                }
                std::size_t hits = explicit_hits > 0 ? explicit_hits : title_hits;
                hit = explicit_hits > 0 ? first_explicit : first_title;
                if (hits > 1) {
                    diags.push_back(make_diagnostic(
                        "W021", ref->span,
                        "reference '" + ref->target + "' is ambiguous; using the first match"));
                }
            }
            if (hit) {
                ref->resolved_number = hit->number;
            } else {
                diags.push_back(make_diagnostic(
                    "E020", ref->span,
                    "reference '" + ref->target + "' does not resolve to any section"));
            }
        }
    });
    return {std::move(doc), std::move(diags)};
}

std::string normalize_citation(std::string_view raw) {
    std::string norm = normalize_text(raw);
    std::vector<std::string> words;
    std::size_t start = 0;
    while (start < norm.size()) {
        std::size_t sp = norm.find(' ', start);
        if (sp == std::string::npos) sp = norm.size();
        words.push_back(norm.substr(start, sp - start));
        start = sp + 1;
    }
    auto starts_with_digit = [](const std::string& w) {
        return !w.empty() && w.front() >= '0' && w.front() <= '9';
    };
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        if (!starts_with_digit(words[i + 1])) continue;
        const std::string& w = words[i];
        if (w == "s" || w == "s." || w == "sec" || w == "sec.") {
            words[i] = "section";
        } else if (w == "ss" || w == "ss.") {
            words[i] = "sections";
        } else if (w == "cl" || w == "cl.") {
            words[i] = "clause";
        }
    }
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ' ';
        out += words[i];
    }
    return out;
}

namespace {

struct FoundConnective {
    Connective::Kind kind;
    SourceSpan span;
    std::size_t item_index;
    bool trailing; // last non-whitespace node of its item's content
};

void check_one_list(const ListBlock& list, std::vector<Diagnostic>& out) {
    if (list.items.size() < 2) return;
    std::vector<FoundConnective> found;
    for (std::size_t i = 0; i < list.items.size(); ++i) {
        const InlineSeq& content = list.items[i].content;
        for (std::size_t n = 0; n < content.size(); ++n) {
            const auto* conn = std::get_if<Connective>(&content[n]);
            if (!conn) continue;
            bool trailing = true;
            for (std::size_t m = n + 1; m < content.size(); ++m) {
                const auto* text = std::get_if<Text>(&content[m]);
                if (!text || !all_whitespace(text->text)) {
                    trailing = false;
                    break;
                }
            }
            found.push_back(FoundConnective{conn->kind, conn->span, i, trailing});
        }
    }
    if (found.empty()) {
        out.push_back(make_diagnostic("W030", list.span,
                                      "list has no \\or or \\and connective"));
        return;
    }
    if (found.size() > 1) {
        // One finding per list: mixed kinds outranks the plain count.
        for (std::size_t i = 1; i < found.size(); ++i) {
            if (found[i].kind != found[0].kind) {
                out.push_back(make_diagnostic("E033", found[i].span,
                                              "list mixes \\or and \\and connectives"));
                return;
            }
        }
        out.push_back(make_diagnostic("E032", found[1].span,
                                      "list has more than one connective"));
        return;
    }
    const FoundConnective& conn = found.front();
    if (conn.item_index != list.items.size() - 2 || !conn.trailing) {
        out.push_back(make_diagnostic(
            "E031", conn.span,
            std::string("connective must close the next-to-last item of its list")));
    }
}

} // namespace

std::vector<Diagnostic> check_lists(const Document& doc) {
    std::vector<Diagnostic> out;
    for_each_list(doc.body, /*descend_sections=*/true,
                  [&](const ListBlock& list, int) { check_one_list(list, out); });
    return out;
}

// ---------------------------------------------------------------------------
// Fixes and the umbrella pass
// ---------------------------------------------------------------------------

Document apply_fixes(const AnalyzedDocument& analyzed) {
    struct Key {
        std::size_t start, end;
        bool operator<(const Key& o) const {
            return std::tie(start, end) < std::tie(o.start, o.end);
        }
    };
    std::map<Key, std::string> fixes;
    for (const Diagnostic& d : analyzed.diagnostics) {
        if (d.fix && d.span.path == analyzed.doc.source_path) {
            fixes[Key{d.span.byte_start, d.span.byte_end}] = *d.fix;
        }
    }
    Document doc = analyzed.doc;
    if (fixes.empty()) return doc;
    for_each_seq_mut(doc, [&](InlineSeq& seq) {
        for (InlineNode& node : seq) {
            auto* cite = std::get_if<LegCite>(&node);
            if (!cite) continue;
            auto it = fixes.find(Key{cite->span.byte_start, cite->span.byte_end});
            if (it != fixes.end()) {
                cite->raw = it->second;
                cite->canonical = it->second;
            }
        }
    });
    return doc;
}

AnalyzedDocument analyze(const Document& doc, std::vector<Diagnostic> carried) {
    AnalyzedDocument out;
    out.numbering = assign_numbers(doc);
    out.tables = build_tables(doc, out.numbering);

    std::vector<Diagnostic> diags = std::move(carried);
    auto [resolved, ref_diags] = resolve_refs(doc, out.tables);
    for (Diagnostic& d : ref_diags) diags.push_back(std::move(d));

    // Citation canonicalization; a divergent authored form is fixable.
    for_each_seq_mut(resolved, [&](InlineSeq& seq) {
        for (InlineNode& node : seq) {
            auto* cite = std::get_if<LegCite>(&node);
            if (!cite) continue;
            std::string canonical = normalize_citation(cite->raw);
            cite->canonical = canonical;
            if (canonical != cite->raw) {
                diags.push_back(make_diagnostic(
                    "W040", cite->span,
                    "citation '" + cite->raw + "' is not in canonical form", canonical));
            }
        }
    });

    for (Diagnostic& d : check_definitions(out.tables)) diags.push_back(std::move(d));
    for (Diagnostic& d : check_lists(resolved)) diags.push_back(std::move(d));

    sort_diagnostics(diags);
    out.doc = std::move(resolved);
    out.diagnostics = std::move(diags);
    return out;
}

} // namespace lexm
