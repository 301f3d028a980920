// diagnostics.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexm/source_span.hpp"

namespace lexm {

enum class Severity { Error, Warning };

/// A coded finding pointing at a source span. Codes starting with 'E' are
/// errors, 'W' warnings. A diagnostic may carry a replacement text; only
/// warning-severity diagnostics are ever applied automatically.
struct Diagnostic {
    std::string code;
    Severity severity = Severity::Error;
    std::string message;
    SourceSpan span;
    std::optional<std::string> fix;
};

Severity severity_for_code(std::string_view code);
const char* severity_name(Severity sev);

Diagnostic make_diagnostic(std::string code, SourceSpan span, std::string message,
                           std::optional<std::string> fix = std::nullopt);

/// True for every code this toolchain can emit.
bool is_registered_code(std::string_view code);

/// Stable emission order: (path, byte_start, code).
void sort_diagnostics(std::vector<Diagnostic>& diags);

bool has_errors(const std::vector<Diagnostic>& diags);

} // namespace lexm
