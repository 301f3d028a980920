// render_json.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include <set>

#include <json.hpp>

#include "lexm/render.hpp"
#include "lexm/text.hpp"
#include "lexm/walk.hpp"

namespace lexm {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json location_of(const SourceSpan& span) {
    return ordered_json{{"line", span.line}, {"col", span.col}};
}

ordered_json sections_array(const std::vector<BlockNode>& blocks, SectionPath& path) {
    ordered_json out = ordered_json::array();
    int section_index = 0;
    for (const BlockNode& block : blocks) {
        const auto* section = std::get_if<Section>(&block);
        if (!section) continue;
        path.push_back(section_index++);

        ordered_json entry;
        entry["number"] = section_number(path);
        entry["label"] = section->label ? ordered_json(*section->label) : ordered_json(nullptr);
        entry["types"] = section->types;
        entry["title_text"] = normalize_text(plain_text(section->title));
        std::string content;
        for (const BlockNode& child : section->children) {
            if (std::holds_alternative<Section>(child)) continue;
            if (!content.empty()) content += "\n\n";
            content += render_markup_fragment(child);
        }
        entry["content_markup"] = content;
        entry["children"] = sections_array(section->children, path);
        out.push_back(std::move(entry));

        path.pop_back();
    }
    return out;
}

} // namespace

std::string render_json(const AnalyzedDocument& analyzed) {
    const Document& doc = analyzed.doc;
    ordered_json root;
    root["schema_version"] = 1;
    root["title"] = doc.title ? ordered_json(normalize_text(plain_text(*doc.title)))
                              : ordered_json(nullptr);
    SectionPath path;
    root["sections"] = sections_array(doc.body, path);

    ordered_json definitions = ordered_json::array();
    for (const auto& [term, info] : analyzed.tables.definitions) {
        ordered_json entry;
        entry["term"] = term;
        entry["text"] = normalize_text(plain_text(info.definition));
        entry["use_count"] = info.uses.size();
        ordered_json locations = ordered_json::array();
        for (const SourceSpan& span : info.uses) locations.push_back(location_of(span));
        entry["use_locations"] = std::move(locations);
        definitions.push_back(std::move(entry));
    }
    root["definitions"] = std::move(definitions);

    ordered_json references = ordered_json::array();
    ordered_json variables = ordered_json::array();
    std::set<std::string> seen_vars;
    for_each_seq(doc, [&](const InlineSeq& seq) {
        for (const InlineNode& node : seq) {
            if (const auto* ref = std::get_if<CrossRef>(&node)) {
                ordered_json entry;
                entry["target"] = ref->target;
                entry["resolved"] = ref->resolved_number
                                        ? ordered_json(*ref->resolved_number)
                                        : ordered_json(nullptr);
                references.push_back(std::move(entry));
            } else if (const auto* var = std::get_if<VarSlot>(&node)) {
                if (seen_vars.insert(var->name).second) variables.push_back(var->name);
            }
        }
    });
    root["references"] = std::move(references);

    ordered_json legislation = ordered_json::array();
    for (const auto& [canonical, occurrences] : analyzed.tables.legislation) {
        ordered_json entry;
        entry["raw"] = occurrences.front().raw;
        entry["canonical"] = canonical;
        ordered_json locations = ordered_json::array();
        for (const CiteOccurrence& occ : occurrences) locations.push_back(location_of(occ.span));
        entry["locations"] = std::move(locations);
        legislation.push_back(std::move(entry));
    }
    root["legislation"] = std::move(legislation);
    root["variables"] = std::move(variables);

    ordered_json types_index = ordered_json::object();
    for (const auto& [type, paths] : analyzed.tables.types) {
        ordered_json numbers = ordered_json::array();
        for (const SectionPath& p : paths) numbers.push_back(section_number(p));
        types_index[type] = std::move(numbers);
    }
    root["types_index"] = std::move(types_index);

    ordered_json diagnostics = ordered_json::array();
    for (const Diagnostic& d : analyzed.diagnostics) {
        ordered_json entry;
        entry["code"] = d.code;
        entry["severity"] = severity_name(d.severity);
        entry["line"] = d.span.line;
        entry["col"] = d.span.col;
        entry["message"] = d.message;
        diagnostics.push_back(std::move(entry));
    }
    root["diagnostics"] = std::move(diagnostics);

    return root.dump(2) + "\n";
}

} // namespace lexm
