// corpus.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lexm/analyzer.hpp"

namespace lexm {

/// Clause selector: by \type label or by section key (explicit label or
/// title, same matching as cross-references).
struct Selector {
    std::optional<std::string> type;
    std::optional<std::string> label;
};

struct ExtractedClause {
    std::string source_path;
    std::string fragment; // canonical markup of the section, children included
};

/// Pulls every section matching the selector out of the corpus, document
/// order within a file, files ordered by path. An empty result is not an
/// error.
std::vector<ExtractedClause> extract(const std::vector<AnalyzedDocument>& docs,
                                     const Selector& selector);

struct TypeStat {
    std::string type;
    int doc_count = 0;
    double fraction = 0.0; // of all documents, rounded to 4 decimals
    struct ItemFrequency {
        std::string text; // normalized item text
        int doc_count = 0;
        double fraction = 0.0; // of documents carrying this type
    };
    std::vector<ItemFrequency> item_frequencies;
};

struct CorpusStats {
    int doc_count = 0;
    std::vector<TypeStat> type_stats; // sorted by desc doc_count, then type
};

/// Cross-corpus analytics: how many documents carry each clause type, and
/// which normalized list items recur inside sections of that type. Item
/// identity is exact text match after normalization, casefolding and
/// stripping a trailing connective word and trailing punctuation; each
/// document counts once per distinct item text. Order-independent.
CorpusStats stats(const std::vector<AnalyzedDocument>& docs);

/// The normalization applied to list items for frequency counting.
std::string normalize_item_text(const InlineSeq& content);

std::string render_stats_text(const CorpusStats& stats);
std::string render_stats_json(const CorpusStats& stats);

} // namespace lexm
