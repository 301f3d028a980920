// template_fill.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexm/diagnostics.hpp"
#include "lexm/model.hpp"

namespace lexm {

/// Key -> value data for template fill, read from a `.vars` file.
/// Names match [A-Za-z][A-Za-z0-9_]*.
struct VarBindings {
    struct Entry {
        std::string value;
        SourceSpan span; // the binding line in the data file
    };
    std::map<std::string, Entry> values;
    std::string source_path;
};

struct BindingsResult {
    VarBindings bindings;
    std::vector<Diagnostic> diagnostics;
};

/// Line-oriented `name = value` format; `#` comments and blank lines are
/// ignored; values are trimmed and run to end of line. E061 duplicate name
/// (first wins), E062 malformed line (skipped).
BindingsResult parse_bindings(std::string_view text, const std::string& path);

struct FillResult {
    Document document;
    std::vector<Diagnostic> diagnostics;
};

/// Replaces every bound \var slot with its value as literal text. Unbound
/// slots are kept: E060 under strict, W060 otherwise. W062 per binding that
/// is never used. No node other than a VarSlot is altered.
FillResult fill(Document doc, const VarBindings& bindings, bool strict);

} // namespace lexm
