// tokenizer.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include "lexm/token.hpp"

#include <cctype>

#include "lexm/text.hpp"

namespace lexm {

namespace {

bool is_command_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_escapable(char c) {
    return c == '\\' || c == '{' || c == '}' || c == '%' || c == '[' || c == ']';
}

class Scanner {
  public:
    Scanner(std::string_view src, const std::string& path) : src_(src), path_(path) {}

    TokenizeResult run() {
        while (!at_end()) {
            char c = peek();
            if (is_space_byte(c)) {
                scan_whitespace_run();
            } else if (c == '%') {
                skip_comment();
            } else if (c == '\\') {
                scan_backslash();
            } else if (c == '{' || c == '}' || c == '[' || c == ']') {
                flush_text();
                Token::Kind kind = c == '{'   ? Token::Kind::LBrace
                                   : c == '}' ? Token::Kind::RBrace
                                   : c == '[' ? Token::Kind::LBracket
                                              : Token::Kind::RBracket;
                SourceSpan span = span_here(1);
                advance();
                push(kind, std::string(1, c), span);
            } else {
                begin_text();
                text_ += c;
                advance();
            }
        }
        flush_text();
        return {std::move(tokens_), std::move(diags_)};
    }

  private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    SourceSpan span_here(std::size_t len) const {
        SourceSpan s;
        s.path = path_;
        s.byte_start = pos_;
        s.byte_end = pos_ + len;
        s.line = line_;
        s.col = col_;
        return s;
    }

    void push(Token::Kind kind, std::string text, SourceSpan span, bool brk = false) {
        Token t;
        t.kind = kind;
        t.text = std::move(text);
        t.span = std::move(span);
        t.paragraph_break = brk;
        tokens_.push_back(std::move(t));
    }

    void begin_text() {
        if (!in_text_) {
            in_text_ = true;
            text_.clear();
            text_span_ = span_here(0);
        }
    }

    void flush_text() { flush_text(pos_); }

    void flush_text(std::size_t end_pos) {
        if (in_text_) {
            text_span_.byte_end = end_pos;
            push(Token::Kind::Text, text_, text_span_);
            in_text_ = false;
        }
    }

    // A maximal whitespace run separates paragraphs when it holds a blank
    // source line: two newlines, or one newline in a run that begins at the
    // start of a line (the case left behind by a consumed comment line).
    void scan_whitespace_run() {
        bool begins_at_line_start = (col_ == 1);
        SourceSpan run_span = span_here(0);
        std::size_t run_start = pos_;
        std::string run;
        int newlines = 0;
        while (!at_end() && is_space_byte(peek())) {
            if (peek() == '\n') ++newlines;
            run += peek();
            advance();
        }
        run_span.byte_end = pos_;
        bool is_break = newlines >= 2 || (begins_at_line_start && newlines >= 1);
        if (is_break) {
            flush_text(run_start);
            push(Token::Kind::Text, std::move(run), run_span, /*brk=*/true);
        } else {
            begin_text();
            if (text_.empty()) text_span_ = run_span;
            text_ += run;
        }
    }

    void skip_comment() {
        flush_text();
        while (!at_end() && peek() != '\n') advance();
        if (!at_end()) advance(); // the line break belongs to the comment
    }

    void scan_backslash() {
        SourceSpan start = span_here(1);
        char next = peek(1);
        if (is_escapable(next)) {
            begin_text();
            if (text_.empty()) text_span_ = start;
            text_ += next;
            advance();
            advance();
            return;
        }
        if (is_command_letter(next)) {
            flush_text();
            advance(); // backslash
            std::string name;
            while (!at_end() && is_command_letter(peek())) {
                name += peek();
                advance();
            }
            SourceSpan span = start;
            span.byte_end = pos_;
            if (name == "begin" || name == "end") {
                if (scan_environment(name, span)) return;
            }
            push(Token::Kind::Command, std::move(name), std::move(span));
            return;
        }
        // Stray backslash: keep it as literal text and carry on.
        diags_.push_back(make_diagnostic(
            "W001", start,
            at_end() || next == '\0'
                ? std::string("stray '\\' at end of input")
                : "unknown escape sequence '\\" + std::string(1, next) + "'"));
        begin_text();
        if (text_.empty()) text_span_ = start;
        text_ += '\\';
        advance();
    }

    // \begin{name} / \end{name}. On any malformation the plain command token
    // is emitted instead and the parser reports the mismatch.
    bool scan_environment(const std::string& which, SourceSpan span) {
        std::size_t save_pos = pos_;
        int save_line = line_, save_col = col_;
        auto restore = [&] {
            pos_ = save_pos;
            line_ = save_line;
            col_ = save_col;
        };
        while (!at_end() && is_space_byte(peek()) && peek() != '\n') advance();
        if (at_end() || peek() != '{') {
            restore();
            return false;
        }
        advance();
        while (!at_end() && is_space_byte(peek())) advance();
        std::string name;
        while (!at_end() && is_command_letter(peek())) {
            name += peek();
            advance();
        }
        while (!at_end() && is_space_byte(peek())) advance();
        if (name.empty() || at_end() || peek() != '}') {
            restore();
            return false;
        }
        advance();
        span.byte_end = pos_;
        push(which == "begin" ? Token::Kind::BeginEnv : Token::Kind::EndEnv,
             std::move(name), std::move(span));
        return true;
    }

    std::string_view src_;
    const std::string& path_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    bool in_text_ = false;
    std::string text_;
    SourceSpan text_span_;

    std::vector<Token> tokens_;
    std::vector<Diagnostic> diags_;
};

} // namespace

std::string normalize_newlines(std::string_view source) {
    std::string out;
    out.reserve(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        if (source[i] == '\r' && i + 1 < source.size() && source[i + 1] == '\n') continue;
        out += source[i];
    }
    return out;
}

TokenizeResult tokenize(std::string_view source, const std::string& path) {
    std::string normalized = normalize_newlines(source);
    return Scanner(normalized, path).run();
}

} // namespace lexm
