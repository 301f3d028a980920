// analyzer.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lexm/diagnostics.hpp"
#include "lexm/model.hpp"

namespace lexm {

/// Identifies a section by its sibling indices among sections only:
/// {} is the document, {0} the first top-level section, {0, 2} the third
/// subsection of the first section. The printed number is the same path
/// one-based and dot-joined.
using SectionPath = std::vector<int>;

struct DefinitionInfo {
    InlineSeq definition;
    SourceSpan decl_span;
    std::vector<SourceSpan> uses;
};

struct LabelTarget {
    SectionPath section_path;
    std::string number;
    bool explicit_label = false; // \label key as opposed to a section title
};

struct CiteOccurrence {
    std::string raw;
    SourceSpan span;
};

struct SymbolTables {
    std::map<std::string, DefinitionInfo> definitions;
    /// Key (normalized) -> candidate targets in document order. Both \label
    /// keys and title-derived keys live here, told apart by explicit_label.
    std::map<std::string, std::vector<LabelTarget>> labels;
    /// Canonical citation -> occurrences in document order.
    std::map<std::string, std::vector<CiteOccurrence>> legislation;
    /// \type name -> section paths carrying it, in document order.
    std::map<std::string, std::vector<SectionPath>> types;
    /// Term -> spans of uses with no declaration.
    std::map<std::string, std::vector<SourceSpan>> undefined_uses;
    /// Second and later declarations of an already-declared term.
    std::vector<std::pair<std::string, SourceSpan>> duplicate_definitions;
};

struct Numbering {
    /// Section path -> printed number ("1", "1.2", ...).
    std::map<SectionPath, std::string> sections;
    /// Structural item path -> printed marker ("(a)", "(i)", ...). The path
    /// is the chain of child indices from the document body through block
    /// lists, then alternating item / sublist indices.
    std::map<std::vector<int>, std::string> items;
};

struct AnalyzedDocument {
    Document doc; // CrossRef.resolved_number and LegCite.canonical filled
    SymbolTables tables;
    Numbering numbering;
    std::vector<Diagnostic> diagnostics; // sorted by (path, byte_start, code)
};

/// Runs the full semantic pass: numbering, symbol tables, definition checks,
/// reference resolution, citation canonicalization, list-connective checks.
/// `carried` diagnostics (typically from the parser) are merged into the
/// result. Never throws; findings are aggregated into diagnostics.
AnalyzedDocument analyze(const Document& doc, std::vector<Diagnostic> carried = {});

/// Clause numbers and list markers, document-order depth-first. Level-1
/// sections count "1","2",..., nested levels dot-append. Top-level list
/// items run "(a)".."(z)","(aa)".., nested items "(i)","(ii)",.. roman.
Numbering assign_numbers(const Document& doc);

SymbolTables build_tables(const Document& doc, const Numbering& numbering);

/// E010 per use of an undeclared term, W011 per unused declaration,
/// E012 per duplicate declaration.
std::vector<Diagnostic> check_definitions(const SymbolTables& tables);

/// Resolves CrossRef targets case-sensitively after normalization, explicit
/// \label keys first, then section titles. E020 unresolved, W021 ambiguous
/// (first in document order wins).
std::pair<Document, std::vector<Diagnostic>> resolve_refs(Document doc,
                                                          const SymbolTables& tables);

/// Whitespace-normalizes and expands provision abbreviations ("s"/"s."/
/// "sec"/"sec." -> "section", "ss"/"ss." -> "sections", "cl"/"cl." ->
/// "clause") when they appear as whole lowercase tokens before a number.
/// Anything unrecognized passes through unchanged.
std::string normalize_citation(std::string_view raw);

/// Connective placement checks over every list of two or more items.
std::vector<Diagnostic> check_lists(const Document& doc);

/// Applies every diagnostic that carries a fix. All other content unchanged.
Document apply_fixes(const AnalyzedDocument& analyzed);

/// Marker helpers, shared with rendering so both sides agree byte-for-byte.
std::string section_number(const SectionPath& path);
std::string item_marker(int nesting_depth, int index); // depth 0 = outermost
std::string alpha_marker(int index);                   // 0 -> "a", 26 -> "aa"
std::string roman_marker(int index);                   // 0 -> "i", 3 -> "iv"

} // namespace lexm
