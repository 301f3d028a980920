// model.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lexm/source_span.hpp"

namespace lexm {

// ---------------------------------------------------------------------------
// Inline content
// ---------------------------------------------------------------------------

/// Literal prose.
struct Text {
    std::string text;
    SourceSpan span;
};

/// A tagged usage of a defined term (\def{Term}). The term string is
/// whitespace-normalized; matching against declarations is case-sensitive.
struct TermUse {
    std::string term;
    SourceSpan span;
};

/// A legislation or case citation (\leg{...}). `raw` is the authored text;
/// `canonical` is filled by analysis when the citation normalizes.
struct LegCite {
    std::string raw;
    std::optional<std::string> canonical;
    SourceSpan span;
};

/// A cross-reference to another section (\ref{Target}). `resolved_number`
/// is filled by analysis when the target resolves.
struct CrossRef {
    std::string target;
    std::optional<std::string> resolved_number;
    SourceSpan span;
};

/// A template variable slot (\var{Name}).
struct VarSlot {
    std::string name;
    SourceSpan span;
};

/// A tagged list connective (\or, \and). Carries no argument.
struct Connective {
    enum class Kind { Or, And };
    Kind kind = Kind::Or;
    SourceSpan span;
};

using InlineNode = std::variant<Text, TermUse, LegCite, CrossRef, VarSlot, Connective>;
using InlineSeq = std::vector<InlineNode>;

// ---------------------------------------------------------------------------
// Block content
// ---------------------------------------------------------------------------

struct Section;
struct ListBlock;

/// A free paragraph of inline content.
struct Paragraph {
    InlineSeq content;
    SourceSpan span;
};

/// One \item of an itemize environment. `content` may be empty only when
/// the item exists solely to hold nested lists.
struct ListItem {
    InlineSeq content;
    std::vector<ListBlock> sublists;
    SourceSpan span;
};

/// A \begin{itemize}...\end{itemize} environment.
struct ListBlock {
    std::vector<ListItem> items;
    SourceSpan span;
};

/// A term declaration: \define{Term}{definition text}. The declaration side
/// that \def usages are checked against.
struct DefineBlock {
    std::string term;
    InlineSeq definition;
    SourceSpan span;
};

using BlockNode = std::variant<Section, Paragraph, ListBlock, DefineBlock>;

/// A clause. Level 1 is \section, 2 \subsection, 3 \subsubsection; the tree
/// is reconstructed from the level sequence of a flat source file.
struct Section {
    int level = 1;
    std::vector<std::string> types;
    std::optional<std::string> label;
    InlineSeq title;
    std::vector<BlockNode> children;
    SourceSpan span;
};

/// The parse of one source file.
struct Document {
    std::optional<InlineSeq> title;
    std::vector<BlockNode> body;
    std::string source_path;
};

// ---------------------------------------------------------------------------
// Structural equality (ignores spans)
// ---------------------------------------------------------------------------

bool structurally_equal(const InlineNode& a, const InlineNode& b);
bool structurally_equal(const InlineSeq& a, const InlineSeq& b);
bool structurally_equal(const BlockNode& a, const BlockNode& b);
bool structurally_equal(const Document& a, const Document& b);

const char* connective_word(Connective::Kind kind);

} // namespace lexm
