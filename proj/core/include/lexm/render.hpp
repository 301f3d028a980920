// render.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "lexm/analyzer.hpp"
#include "lexm/model.hpp"

namespace lexm {

/// Published plain-text form: tag-free, LF line endings, one logical line
/// per paragraph, list items indented four spaces with their marker.
/// Cross-references print their resolved number; unresolved targets print
/// bracketed as ⟨target⟩ (draft mode). Section headings are bare
/// titles unless `numbered`.
std::string render_text(const AnalyzedDocument& analyzed, bool numbered = false);

/// One self-contained HTML5 page: embedded CSS, no scripts, no external
/// assets. Sections carry id "sec-<number>" and data-type attributes; every
/// term usage gets a CSS hover tooltip showing its definition ("undefined
/// term" when there is none); resolved cross-references link in-document.
std::string render_html(const AnalyzedDocument& analyzed);

/// Structured export, schema_version 1. Stable key order and byte-stable
/// across runs.
std::string render_json(const AnalyzedDocument& analyzed);

/// Canonical source form: one blank line between blocks, optional arguments
/// as [\type{A}\label{B}], escapes reapplied, one \item per line. Parsing
/// the output yields a structurally equal document, and the emitter is a
/// fixed point on its own output.
std::string render_markup(const Document& doc);

/// Canonical form of a single block (used for clause extraction and diff).
std::string render_markup_fragment(const BlockNode& block);

/// Canonical form of an inline sequence, escapes reapplied.
std::string render_markup_inline(const InlineSeq& content);

} // namespace lexm
