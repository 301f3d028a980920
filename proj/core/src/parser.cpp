// parser.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include "lexm/parser.hpp"

#include <algorithm>

#include "lexm/text.hpp"
#include "lexm/token.hpp"

namespace lexm {

namespace {

constexpr int kMaxGroupDepth = 100;
constexpr int kMaxListDepth = 64;

bool is_inline_command(const std::string& name) {
    return name == "def" || name == "leg" || name == "ref" || name == "var" ||
           name == "or" || name == "and";
}

bool is_structural_command(const std::string& name) {
    return name == "section" || name == "subsection" || name == "subsubsection" ||
           name == "title" || name == "define" || name == "item" ||
           name == "begin" || name == "end";
}

int section_level(const std::string& name) {
    if (name == "section") return 1;
    if (name == "subsection") return 2;
    if (name == "subsubsection") return 3;
    return 0;
}

// Merges adjacent text nodes, drops empty ones, and trims whitespace off the
// edges of the sequence. Interior whitespace (including line breaks) is kept
// verbatim so the canonical emitter can reproduce it.
InlineSeq normalize_seq(InlineSeq seq) {
    InlineSeq merged;
    for (InlineNode& node : seq) {
        if (auto* t = std::get_if<Text>(&node)) {
            if (t->text.empty()) continue;
            if (!merged.empty()) {
                if (auto* prev = std::get_if<Text>(&merged.back())) {
                    prev->text += t->text;
                    prev->span.byte_end = t->span.byte_end;
                    continue;
                }
            }
        }
        merged.push_back(std::move(node));
    }
    while (!merged.empty()) {
        auto* t = std::get_if<Text>(&merged.front());
        if (!t) break;
        std::size_t i = 0;
        while (i < t->text.size() && is_space_byte(t->text[i])) ++i;
        if (i == t->text.size()) {
            merged.erase(merged.begin());
        } else {
            t->text.erase(0, i);
            break;
        }
    }
    while (!merged.empty()) {
        auto* t = std::get_if<Text>(&merged.back());
        if (!t) break;
        std::size_t n = t->text.size();
        while (n > 0 && is_space_byte(t->text[n - 1])) --n;
        if (n == 0) {
            merged.pop_back();
        } else {
            t->text.resize(n);
            break;
        }
    }
    return merged;
}

class Parser {
  public:
    Parser(std::vector<Token> tokens, std::vector<Diagnostic> diags,
           std::string path, std::string_view source)
        : tokens_(std::move(tokens)), diags_(std::move(diags)),
          path_(std::move(path)), source_size_(source.size()) {
        eof_line_ = 1 + static_cast<int>(std::count(source.begin(), source.end(), '\n'));
        std::size_t last_nl = source.rfind('\n');
        eof_col_ = last_nl == std::string_view::npos
                       ? static_cast<int>(source.size()) + 1
                       : static_cast<int>(source.size() - last_nl);
    }

    ParseResult run() {
        doc_.source_path = path_;
        while (!at_end()) parse_block_token();
        finish_paragraph();
        while (!section_stack_.empty()) pop_section();
        return {std::move(doc_), std::move(diags_)};
    }

  private:
    // ----- token access -------------------------------------------------

    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    bool peek_is(Token::Kind kind) const { return !at_end() && peek().kind == kind; }

    bool peek_is_break() const {
        return peek_is(Token::Kind::Text) && peek().paragraph_break;
    }

    // Skips whitespace-only text between a command and its arguments.
    void skip_inline_ws() {
        while (peek_is(Token::Kind::Text) && !peek().paragraph_break &&
               all_whitespace(peek().text)) {
            ++pos_;
        }
    }

    SourceSpan eof_span() const {
        SourceSpan s;
        s.path = path_;
        s.byte_start = s.byte_end = source_size_;
        s.line = eof_line_;
        s.col = eof_col_;
        return s;
    }

    SourceSpan span_between(std::size_t first_tok, std::size_t end_tok) const {
        if (first_tok >= tokens_.size() || end_tok <= first_tok) return eof_span();
        SourceSpan s = tokens_[first_tok].span;
        s.byte_end = tokens_[end_tok - 1].span.byte_end;
        return s;
    }

    void report(const char* code, SourceSpan span, std::string message) {
        diags_.push_back(make_diagnostic(code, std::move(span), std::move(message)));
    }

    // ----- block level ---------------------------------------------------

    std::vector<BlockNode>& current_blocks() {
        return section_stack_.empty() ? doc_.body : section_stack_.back().children;
    }

    void pop_section() {
        Section done = std::move(section_stack_.back());
        section_stack_.pop_back();
        current_blocks().push_back(std::move(done));
    }

    void parse_block_token() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Token::Kind::Text:
                if (tok.paragraph_break) {
                    finish_paragraph();
                    ++pos_;
                } else if (all_whitespace(tok.text) && paragraph_.empty()) {
                    ++pos_;
                } else {
                    append_paragraph_text(take());
                }
                return;
            case Token::Kind::Command:
                parse_block_command();
                return;
            case Token::Kind::BeginEnv:
                finish_paragraph();
                if (tok.text == "itemize") {
                    std::size_t start = pos_++;
                    ListBlock list = parse_list(0);
                    list.span = span_between(start, pos_);
                    current_blocks().push_back(std::move(list));
                } else {
                    report("E004", tok.span, "unknown environment '" + tok.text + "'");
                    ignored_envs_.push_back(tok.text);
                    ++pos_;
                }
                return;
            case Token::Kind::EndEnv:
                if (!ignored_envs_.empty() && ignored_envs_.back() == tok.text) {
                    ignored_envs_.pop_back();
                } else {
                    report("E002", tok.span,
                           "\\end{" + tok.text + "} does not match any open environment");
                }
                ++pos_;
                return;
            case Token::Kind::LBrace: {
                // Bare group: contents are spliced into the paragraph.
                InlineSeq group = parse_group();
                for (InlineNode& n : group) paragraph_.push_back(std::move(n));
                return;
            }
            case Token::Kind::RBrace:
                report("E001", tok.span, "unmatched '}'");
                ++pos_;
                return;
            case Token::Kind::LBracket:
            case Token::Kind::RBracket:
                paragraph_.push_back(Text{tok.text, tok.span});
                ++pos_;
                return;
        }
    }

    void parse_block_command() {
        const Token tok = peek();
        const std::string& name = tok.text;
        if (int level = section_level(name); level > 0) {
            finish_paragraph();
            parse_section(level);
            return;
        }
        if (name == "title") {
            finish_paragraph();
            ++pos_;
            skip_inline_ws();
            if (!peek_is(Token::Kind::LBrace)) {
                report("E004", tok.span, "expected '{' after \\title");
                return;
            }
            InlineSeq content = normalize_seq(parse_group());
            if (!doc_.title) doc_.title = std::move(content);
            return;
        }
        if (name == "define") {
            finish_paragraph();
            parse_define(tok);
            return;
        }
        if (is_inline_command(name)) {
            if (auto node = parse_inline_command()) paragraph_.push_back(std::move(*node));
            return;
        }
        if (name == "item") {
            report("E003", tok.span, "\\item outside itemize environment");
            ++pos_;
            return;
        }
        if (name == "begin" || name == "end") {
            report("E002", tok.span, "malformed \\" + name + "; expected \\" + name + "{name}");
            ++pos_;
            return;
        }
        // Unknown command: node dropped, argument text preserved.
        report("E004", tok.span, "unknown command '\\" + name + "'");
        ++pos_;
        skip_inline_ws();
        if (peek_is(Token::Kind::LBrace)) {
            InlineSeq group = parse_group();
            for (InlineNode& n : group) paragraph_.push_back(std::move(n));
        }
    }

    void parse_section(int level) {
        std::size_t start = pos_;
        const Token cmd = take();
        // A level-k section closes when a section of level <= k begins.
        while (!section_stack_.empty() && section_stack_.back().level >= level)
            pop_section();
        int parent_level = section_stack_.empty() ? 0 : section_stack_.back().level;
        if (level > parent_level + 1) {
            report("W005", cmd.span,
                   "section level jumps from " + std::to_string(parent_level) + " to " +
                       std::to_string(level));
        }

        Section section;
        section.level = level;
        skip_inline_ws();
        if (peek_is(Token::Kind::LBracket)) parse_optional_arg(section);
        skip_inline_ws();
        if (peek_is(Token::Kind::LBrace)) {
            section.title = normalize_seq(parse_group());
        } else {
            report("E004", cmd.span, "expected '{' after \\" + cmd.text);
        }
        section.span = span_between(start, pos_);
        section_stack_.push_back(std::move(section));
    }

    void parse_optional_arg(Section& section) {
        const Token open = take();
        while (!at_end()) {
            const Token& tok = peek();
            if (tok.kind == Token::Kind::RBracket) {
                ++pos_;
                return;
            }
            if (tok.kind == Token::Kind::Text) {
                if (tok.paragraph_break) break;
                if (!all_whitespace(tok.text))
                    report("E004", tok.span, "unexpected text in optional argument");
                ++pos_;
                continue;
            }
            if (tok.kind == Token::Kind::Command &&
                (tok.text == "type" || tok.text == "label")) {
                const Token cmd = take();
                skip_inline_ws();
                if (!peek_is(Token::Kind::LBrace)) {
                    report("E004", cmd.span, "expected '{' after \\" + cmd.text);
                    continue;
                }
                std::string value = normalize_text(plain_text(parse_group()));
                if (value.empty()) {
                    report("E004", cmd.span, "empty argument to \\" + cmd.text);
                } else if (cmd.text == "type") {
                    section.types.push_back(std::move(value));
                } else if (section.label) {
                    report("E004", cmd.span, "duplicate \\label in optional argument");
                } else {
                    section.label = std::move(value);
                }
                continue;
            }
            // Only \type and \label belong here.
            report("E004", tok.span,
                   tok.kind == Token::Kind::Command
                       ? "'\\" + tok.text + "' is not allowed in an optional argument"
                       : "unexpected token in optional argument");
            if (tok.kind == Token::Kind::Command) {
                ++pos_;
                skip_inline_ws();
                if (peek_is(Token::Kind::LBrace)) parse_group();
            } else if (tok.kind == Token::Kind::LBrace) {
                parse_group();
            } else {
                ++pos_;
            }
        }
        report("E001", open.span, "unclosed '['");
    }

    void parse_define(const Token& cmd) {
        std::size_t start = pos_;
        ++pos_;
        skip_inline_ws();
        if (!peek_is(Token::Kind::LBrace)) {
            report("E004", cmd.span, "expected '{' after \\define");
            return;
        }
        InlineSeq term_seq = parse_group();
        std::string term = normalize_text(plain_text(term_seq));
        skip_inline_ws();
        InlineSeq definition;
        if (peek_is(Token::Kind::LBrace)) {
            definition = normalize_seq(parse_group());
        } else {
            report("E004", cmd.span, "expected a second argument to \\define");
        }
        if (term.empty()) {
            report("E004", cmd.span, "empty term in \\define");
            // Keep the definition text as a paragraph so nothing is lost.
            for (InlineNode& n : definition) paragraph_.push_back(std::move(n));
            finish_paragraph();
            return;
        }
        DefineBlock block;
        block.term = std::move(term);
        block.definition = std::move(definition);
        block.span = span_between(start, pos_);
        current_blocks().push_back(std::move(block));
    }

    // ----- paragraphs ----------------------------------------------------

    void append_paragraph_text(const Token& tok) {
        paragraph_.push_back(Text{tok.text, tok.span});
    }

    void finish_paragraph() {
        if (paragraph_.empty()) return;
        InlineSeq content = normalize_seq(std::move(paragraph_));
        paragraph_.clear();
        if (content.empty()) return;
        Paragraph para;
        para.span = span_of_seq(content);
        para.content = std::move(content);
        current_blocks().push_back(std::move(para));
    }

    static SourceSpan span_of_node(const InlineNode& node) {
        return std::visit([](const auto& n) { return n.span; }, node);
    }

    static SourceSpan span_of_seq(const InlineSeq& seq) {
        SourceSpan s = span_of_node(seq.front());
        s.byte_end = span_of_node(seq.back()).byte_end;
        return s;
    }

    // ----- lists -----------------------------------------------------------

    ListBlock parse_list(int depth) {
        ListBlock list;
        bool in_item = false;
        ListItem item;

        auto finish_item = [&] {
            if (!in_item) return;
            item.content = normalize_seq(std::move(item.content));
            // An item must carry content or a sublist.
            if (!item.content.empty() || !item.sublists.empty())
                list.items.push_back(std::move(item));
            item = ListItem{};
            in_item = false;
        };
        auto ensure_item = [&](const SourceSpan& at, const char* what) {
            if (in_item) return;
            report("E003", at, std::string(what) + " before the first \\item");
            in_item = true;
            item.span = at;
        };

        while (!at_end()) {
            const Token& tok = peek();
            switch (tok.kind) {
                case Token::Kind::Command: {
                    if (tok.text == "item") {
                        finish_item();
                        in_item = true;
                        item.span = tok.span;
                        ++pos_;
                        continue;
                    }
                    if (is_inline_command(tok.text)) {
                        ensure_item(tok.span, "content");
                        if (auto node = parse_inline_command())
                            item.content.push_back(std::move(*node));
                        continue;
                    }
                    if (tok.text == "begin" || tok.text == "end") {
                        report("E002", tok.span,
                               "malformed \\" + tok.text + "; expected \\" + tok.text + "{name}");
                        ++pos_;
                        continue;
                    }
                    if (is_structural_command(tok.text)) {
                        // A heading or declaration inside an open list: the
                        // environment was not closed. Recover at block level.
                        report("E002", tok.span, "unclosed environment 'itemize'");
                        finish_item();
                        return list;
                    }
                    report("E004", tok.span, "unknown command '\\" + tok.text + "'");
                    ++pos_;
                    skip_inline_ws();
                    if (peek_is(Token::Kind::LBrace)) {
                        ensure_item(tok.span, "content");
                        InlineSeq group = parse_group();
                        for (InlineNode& n : group) item.content.push_back(std::move(n));
                    }
                    continue;
                }
                case Token::Kind::BeginEnv: {
                    if (tok.text != "itemize") {
                        report("E004", tok.span, "unknown environment '" + tok.text + "'");
                        ignored_envs_.push_back(tok.text);
                        ++pos_;
                        continue;
                    }
                    if (depth + 1 >= kMaxListDepth) {
                        report("E002", tok.span, "itemize nested too deeply");
                        skip_balanced_env();
                        continue;
                    }
                    if (!in_item) {
                        // A nested list may open before any \item; give it an
                        // anonymous holder so the content survives.
                        in_item = true;
                        item.span = tok.span;
                    }
                    std::size_t start = pos_++;
                    ListBlock sub = parse_list(depth + 1);
                    sub.span = span_between(start, pos_);
                    item.sublists.push_back(std::move(sub));
                    continue;
                }
                case Token::Kind::EndEnv: {
                    if (tok.text == "itemize") {
                        ++pos_;
                        finish_item();
                        return list;
                    }
                    if (!ignored_envs_.empty() && ignored_envs_.back() == tok.text) {
                        ignored_envs_.pop_back();
                        ++pos_;
                        continue;
                    }
                    report("E002", tok.span,
                           "environment 'itemize' closed by \\end{" + tok.text + "}");
                    ++pos_;
                    finish_item();
                    return list;
                }
                case Token::Kind::Text: {
                    if (!in_item && all_whitespace(tok.text)) {
                        ++pos_;
                        continue;
                    }
                    ensure_item(tok.span, "text");
                    item.content.push_back(Text{tok.text, tok.span});
                    ++pos_;
                    continue;
                }
                case Token::Kind::LBrace: {
                    ensure_item(tok.span, "content");
                    InlineSeq group = parse_group();
                    for (InlineNode& n : group) item.content.push_back(std::move(n));
                    continue;
                }
                case Token::Kind::RBrace:
                    report("E001", tok.span, "unmatched '}'");
                    ++pos_;
                    continue;
                case Token::Kind::LBracket:
                case Token::Kind::RBracket:
                    ensure_item(tok.span, "text");
                    item.content.push_back(Text{tok.text, tok.span});
                    ++pos_;
                    continue;
            }
        }
        report("E002", eof_span(), "unclosed environment 'itemize'");
        finish_item();
        return list;
    }

    // Consumes a too-deep environment wholesale, keeping begin/end balance.
    void skip_balanced_env() {
        int depth = 0;
        while (!at_end()) {
            const Token& tok = take();
            if (tok.kind == Token::Kind::BeginEnv && tok.text == "itemize") ++depth;
            if (tok.kind == Token::Kind::EndEnv && tok.text == "itemize") {
                if (--depth == 0) return;
            }
        }
    }

    // ----- inline level ----------------------------------------------------

    // Called with the cursor on an inline command token. Returns the node, or
    // nothing when the command had to be dropped.
    std::optional<InlineNode> parse_inline_command() {
        std::size_t start = pos_;
        const Token cmd = take();
        const std::string& name = cmd.text;
        if (name == "or" || name == "and") {
            Connective c;
            c.kind = name == "or" ? Connective::Kind::Or : Connective::Kind::And;
            c.span = cmd.span;
            return InlineNode{std::move(c)};
        }
        skip_inline_ws();
        if (!peek_is(Token::Kind::LBrace)) {
            report("E004", cmd.span, "expected '{' after \\" + name);
            return std::nullopt;
        }
        InlineSeq group = parse_group();
        SourceSpan span = span_between(start, pos_);
        if (name == "leg") {
            LegCite cite;
            cite.raw = plain_text(group); // verbatim; analysis canonicalizes
            cite.span = std::move(span);
            if (normalize_text(cite.raw).empty()) {
                report("E004", cmd.span, "empty argument to \\leg");
                return std::nullopt;
            }
            return InlineNode{std::move(cite)};
        }
        std::string value = normalize_text(plain_text(group));
        if (value.empty()) {
            report("E004", cmd.span, "empty argument to \\" + name);
            return std::nullopt;
        }
        if (name == "def") return InlineNode{TermUse{std::move(value), std::move(span)}};
        if (name == "ref")
            return InlineNode{CrossRef{std::move(value), std::nullopt, std::move(span)}};
        return InlineNode{VarSlot{std::move(value), std::move(span)}};
    }

    // Called with the cursor on the opening brace. Returns the group content;
    // recovery on a runaway group stops at the offending token without
    // consuming it.
    InlineSeq parse_group() {
        const Token open = take();
        InlineSeq content;
        if (group_depth_ >= kMaxGroupDepth) {
            // Treat the brace as literal text; deeper nesting than this is
            // not authored input.
            content.push_back(Text{"{", open.span});
            return content;
        }
        ++group_depth_;
        bool closed = false;
        while (!at_end()) {
            const Token& tok = peek();
            if (tok.kind == Token::Kind::RBrace) {
                ++pos_;
                closed = true;
                break;
            }
            if (tok.kind == Token::Kind::LBrace) {
                InlineSeq inner = parse_group();
                for (InlineNode& n : inner) content.push_back(std::move(n));
                continue;
            }
            if (tok.kind == Token::Kind::Text) {
                if (tok.paragraph_break) break; // runaway argument
                content.push_back(Text{tok.text, tok.span});
                ++pos_;
                continue;
            }
            if (tok.kind == Token::Kind::LBracket || tok.kind == Token::Kind::RBracket) {
                content.push_back(Text{tok.text, tok.span});
                ++pos_;
                continue;
            }
            if (tok.kind == Token::Kind::Command) {
                if (is_inline_command(tok.text)) {
                    if (auto node = parse_inline_command()) content.push_back(std::move(*node));
                    continue;
                }
                if (is_structural_command(tok.text)) break; // runaway argument
                report("E004", tok.span, "unknown command '\\" + tok.text + "'");
                ++pos_;
                skip_inline_ws();
                if (peek_is(Token::Kind::LBrace)) {
                    InlineSeq inner = parse_group();
                    for (InlineNode& n : inner) content.push_back(std::move(n));
                }
                continue;
            }
            // begin/end environments never open inside an argument.
            break;
        }
        --group_depth_;
        if (!closed) report("E001", open.span, "unclosed '{'");
        return content;
    }

    std::vector<Token> tokens_;
    std::vector<Diagnostic> diags_;
    std::string path_;
    std::size_t source_size_;
    int eof_line_ = 1;
    int eof_col_ = 1;
    std::size_t pos_ = 0;

    Document doc_;
    std::vector<Section> section_stack_;
    InlineSeq paragraph_;
    std::vector<std::string> ignored_envs_;
    int group_depth_ = 0;
};

} // namespace

ParseResult parse(std::string_view source, const std::string& path) {
    std::string normalized = normalize_newlines(source);
    TokenizeResult lexed = tokenize(normalized, path);
    Parser parser(std::move(lexed.tokens), std::move(lexed.diagnostics), path, normalized);
    ParseResult result = parser.run();
    sort_diagnostics(result.diagnostics);
    return result;
}

} // namespace lexm
