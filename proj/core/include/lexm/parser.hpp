// parser.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lexm/diagnostics.hpp"
#include "lexm/model.hpp"

namespace lexm {

struct ParseResult {
    Document document;
    std::vector<Diagnostic> diagnostics;
};

/// Parses markup source into a Document. Never aborts: syntax errors are
/// reported as diagnostics and parsing recovers at the next command or
/// blank line. The tag set is closed; unknown commands are dropped with
/// their argument text preserved (E004).
ParseResult parse(std::string_view source, const std::string& path);

} // namespace lexm
