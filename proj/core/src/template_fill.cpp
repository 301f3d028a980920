// template_fill.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include "lexm/template_fill.hpp"

#include <set>

#include "lexm/text.hpp"
#include "lexm/token.hpp"
#include "lexm/walk.hpp"

namespace lexm {

namespace {

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    char c0 = name.front();
    if (!((c0 >= 'A' && c0 <= 'Z') || (c0 >= 'a' && c0 <= 'z'))) return false;
    for (char c : name.substr(1)) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space_byte(s[b])) ++b;
    while (e > b && is_space_byte(s[e - 1])) --e;
    return s.substr(b, e - b);
}

} // namespace

BindingsResult parse_bindings(std::string_view text, const std::string& path) {
    BindingsResult result;
    result.bindings.source_path = path;
    std::string normalized = normalize_newlines(text);

    std::size_t offset = 0;
    int line_no = 1;
    while (offset <= normalized.size()) {
        if (offset == normalized.size() && normalized.empty()) break;
        std::size_t eol = normalized.find('\n', offset);
        bool last = eol == std::string::npos;
        std::string_view line(normalized.data() + offset,
                              (last ? normalized.size() : eol) - offset);
        SourceSpan span;
        span.path = path;
        span.byte_start = offset;
        span.byte_end = offset + line.size();
        span.line = line_no;
        span.col = 1;

        std::string_view stripped = trim(line);
        if (!stripped.empty() && stripped.front() != '#') {
            std::size_t eq = line.find('=');
            if (eq == std::string_view::npos) {
                result.diagnostics.push_back(make_diagnostic(
                    "E062", span, "malformed bindings line; expected 'name = value'"));
            } else {
                std::string name(trim(line.substr(0, eq)));
                std::string value(trim(line.substr(eq + 1)));
                if (!valid_name(name)) {
                    result.diagnostics.push_back(make_diagnostic(
                        "E062", span,
                        "malformed bindings line; '" + name + "' is not a valid name"));
                } else {
                    auto [it, inserted] = result.bindings.values.try_emplace(
                        name, VarBindings::Entry{std::move(value), span});
                    if (!inserted) {
                        result.diagnostics.push_back(make_diagnostic(
                            "E061", span,
                            "duplicate binding for '" + name + "'; first value kept"));
                    }
                }
            }
        }
        if (last) break;
        offset = eol + 1;
        ++line_no;
    }
    sort_diagnostics(result.diagnostics);
    return result;
}

FillResult fill(Document doc, const VarBindings& bindings, bool strict) {
    FillResult result;
    std::set<std::string> used;

    for_each_seq_mut(doc, [&](InlineSeq& seq) {
        for (InlineNode& node : seq) {
            auto* slot = std::get_if<VarSlot>(&node);
            if (!slot) continue;
            auto it = bindings.values.find(slot->name);
            if (it != bindings.values.end()) {
                used.insert(slot->name);
                node = Text{it->second.value, slot->span};
            } else if (strict) {
                result.diagnostics.push_back(make_diagnostic(
                    "E060", slot->span, "variable '" + slot->name + "' is not bound"));
            } else {
                result.diagnostics.push_back(make_diagnostic(
                    "W060", slot->span,
                    "variable '" + slot->name + "' is not bound; slot kept"));
            }
        }
    });

    for (const auto& [name, entry] : bindings.values) {
        if (!used.count(name)) {
            result.diagnostics.push_back(make_diagnostic(
                "W062", entry.span, "binding '" + name + "' is never used"));
        }
    }

    sort_diagnostics(result.diagnostics);
    result.document = std::move(doc);
    return result;
}

} // namespace lexm
