// docdiff.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lexm/analyzer.hpp"
#include "lexm/model.hpp"

namespace lexm {

/// One word-level edit of a modified clause. Concatenating the keep+delete
/// words (space-joined) reproduces the old clause text, keep+insert the new.
struct WordEdit {
    enum class Op { Keep, Insert, Delete };
    Op op = Op::Keep;
    std::string text;
};

struct SectionDelta {
    enum class Status { Added, Removed, Modified, Moved, Unchanged };
    Status status = Status::Unchanged;
    std::string key;
    std::optional<std::string> old_number;
    std::optional<std::string> new_number;
    std::vector<WordEdit> word_edits; // only when modified
    std::string text; // clause plain text, only when added/removed
};

/// Clause-level deltas between two document versions. Every section of both
/// documents appears in exactly one delta; a preamble pseudo-section keyed
/// "T:\u27E8preamble\u27E9" covers body text outside any section.
struct DiffReport {
    std::vector<SectionDelta> deltas;
    std::string old_path;
    std::string new_path;

    bool has_changes() const;
};

/// Stable identity of a section for matching: "L:" + explicit label when
/// present, else "T:" + normalized title text.
std::string section_key(const Section& section);

/// Pairs sections of equal key (duplicates in document order). Unpaired
/// sections become added/removed; paired sections with equal canonical
/// content are unchanged, or moved when their relative order among paired
/// sections changed; otherwise modified with word-level LCS edits over the
/// clause's plain text. Deltas follow new-document order with removed
/// sections appended in old-document order.
DiffReport diff(const AnalyzedDocument& old_doc, const AnalyzedDocument& new_doc);

/// "+ " / "- " prefixed change lines under one header per delta; unchanged
/// deltas are suppressed.
std::string render_diff_text(const DiffReport& report);

/// JSON mirror of the report, schema_version 1.
std::string render_diff_json(const DiffReport& report);

/// Word-level diff used for modified clauses; exposed for testing against
/// the brute-force oracle. Tokens are whitespace-split words, punctuation
/// kept attached.
std::vector<WordEdit> word_diff(const std::vector<std::string>& old_words,
                                const std::vector<std::string>& new_words);

std::vector<std::string> split_words(std::string_view text);

const char* delta_status_name(SectionDelta::Status status);

} // namespace lexm
