// diagnostics.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include "lexm/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace lexm {

namespace {

// Everything the toolchain emits. Parsing and analysis use W001..W040;
// the template module owns the 06x block.
constexpr std::array<std::string_view, 21> kRegistry = {
    "W001", "E001", "E002", "E003", "E004", "W005",
    "E010", "W011", "E012",
    "E020", "W021",
    "W030", "E031", "E032", "E033",
    "W040",
    "E060", "W060", "E061", "E062", "W062",
};

} // namespace

Severity severity_for_code(std::string_view code) {
    return (!code.empty() && code.front() == 'W') ? Severity::Warning : Severity::Error;
}

const char* severity_name(Severity sev) {
    return sev == Severity::Error ? "error" : "warning";
}

Diagnostic make_diagnostic(std::string code, SourceSpan span, std::string message,
                           std::optional<std::string> fix) {
    Diagnostic d;
    d.severity = severity_for_code(code);
    d.code = std::move(code);
    d.message = std::move(message);
    d.span = std::move(span);
    d.fix = std::move(fix);
    return d;
}

bool is_registered_code(std::string_view code) {
    return std::find(kRegistry.begin(), kRegistry.end(), code) != kRegistry.end();
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
    std::stable_sort(diags.begin(), diags.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                         return std::tie(a.span.path, a.span.byte_start, a.code) <
                                std::tie(b.span.path, b.span.byte_start, b.code);
                     });
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
        return d.severity == Severity::Error;
    });
}

} // namespace lexm
