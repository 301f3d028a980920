// token.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "lexm/diagnostics.hpp"
#include "lexm/source_span.hpp"

namespace lexm {

struct Token {
    enum class Kind {
        Command,   // \name      (name in text, [a-zA-Z]+)
        BeginEnv,  // \begin{name}
        EndEnv,    // \end{name}
        LBracket,
        RBracket,
        LBrace,
        RBrace,
        Text,      // literal run; escapes already resolved
    };

    Kind kind = Kind::Text;
    std::string text; // command/environment name, or literal text content
    SourceSpan span;

    /// True for a whitespace-only text token that separates paragraphs
    /// (contains a blank source line).
    bool paragraph_break = false;
};

struct TokenizeResult {
    std::vector<Token> tokens;
    std::vector<Diagnostic> diagnostics;
};

/// Lexes markup source. Never fails: malformed escapes are kept as literal
/// text under W001. `%` starts a comment running to end of line; the line
/// break is consumed with it. CRLF line endings are normalized to LF before
/// scanning, so spans refer to the normalized text.
TokenizeResult tokenize(std::string_view source, const std::string& path);

/// CRLF -> LF. Applied by tokenize(); exposed for span bookkeeping in tools.
std::string normalize_newlines(std::string_view source);

} // namespace lexm
