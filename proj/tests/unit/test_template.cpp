// test_template.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "../support/fixtures.hpp"
#include "lexm/parser.hpp"
#include "lexm/template_fill.hpp"
#include "lexm/text.hpp"
#include "lexm/walk.hpp"

using namespace lexm;

namespace {

std::vector<std::string> codes_of(const std::vector<Diagnostic>& diags) {
    std::vector<std::string> out;
    for (const Diagnostic& d : diags) out.push_back(d.code);
    return out;
}

int slot_count(const Document& doc) {
    int n = 0;
    for_each_seq(doc, [&](const InlineSeq& seq) {
        for (const InlineNode& node : seq)
            if (std::holds_alternative<VarSlot>(node)) ++n;
    });
    return n;
}

} // namespace

TEST_CASE("a binding line maps name to its trimmed value") {
    auto [bindings, diags] = parse_bindings("PurchasePrice = $1,000,000", "deal.vars");
    CHECK(diags.empty());
    REQUIRE(bindings.values.count("PurchasePrice") == 1);
    CHECK(bindings.values.at("PurchasePrice").value == "$1,000,000");
}

TEST_CASE("empty input parses to empty bindings") {
    auto [bindings, diags] = parse_bindings("", "deal.vars");
    CHECK(bindings.values.empty());
    CHECK(diags.empty());
}

TEST_CASE("comments and blank lines are ignored") {
    auto [bindings, diags] = parse_bindings("# header\n\nA = 1\n  # indented comment\n", "v");
    CHECK(diags.empty());
    CHECK(bindings.values.size() == 1);
}

TEST_CASE("a duplicate binding keeps the first value under E061") {
    auto [bindings, diags] = parse_bindings("X = 1\nX = 2", "v");
    CHECK(codes_of(diags) == std::vector<std::string>{"E061"});
    CHECK(diags[0].span.line == 2);
    CHECK(bindings.values.at("X").value == "1");
}

TEST_CASE("a line without an equals sign is E062 and skipped") {
    auto [bindings, diags] = parse_bindings("just words\nA = 1", "v");
    CHECK(codes_of(diags) == std::vector<std::string>{"E062"});
    CHECK(bindings.values.size() == 1);
}

TEST_CASE("an invalid name is E062 and skipped") {
    auto [bindings, diags] = parse_bindings("9lives = cat\n_x = 1\nok_1 = yes", "v");
    CHECK(codes_of(diags) == std::vector<std::string>{"E062", "E062"});
    CHECK(bindings.values.size() == 1);
    CHECK(bindings.values.count("ok_1") == 1);
}

TEST_CASE("values may contain equals signs and spaces") {
    auto [bindings, diags] = parse_bindings("Formula = a = b + c", "v");
    CHECK(bindings.values.at("Formula").value == "a = b + c");
}

TEST_CASE("a bound slot becomes literal text") {
    auto [doc, pdiags] = parse("pay \\var{PurchasePrice} now", "t");
    auto [bindings, bdiags] = parse_bindings("PurchasePrice = $1,000,000", "v");
    FillResult filled = fill(std::move(doc), bindings, /*strict=*/false);
    CHECK(filled.diagnostics.empty());
    CHECK(slot_count(filled.document) == 0);
    const auto* para = std::get_if<Paragraph>(&filled.document.body[0]);
    REQUIRE(para != nullptr);
    CHECK(normalize_text(plain_text(para->content)) == "pay $1,000,000 now");
}

TEST_CASE("a strict unbound slot is E060 and the slot is kept") {
    auto [doc, pdiags] = parse("pay \\var{Missing} now", "t");
    FillResult filled = fill(std::move(doc), VarBindings{}, /*strict=*/true);
    CHECK(codes_of(filled.diagnostics) == std::vector<std::string>{"E060"});
    CHECK(filled.diagnostics[0].severity == Severity::Error);
    CHECK(slot_count(filled.document) == 1);
}

TEST_CASE("a draft unbound slot is W060 and the slot is kept") {
    auto [doc, pdiags] = parse("pay \\var{Missing} now", "t");
    FillResult filled = fill(std::move(doc), VarBindings{}, /*strict=*/false);
    CHECK(codes_of(filled.diagnostics) == std::vector<std::string>{"W060"});
    CHECK(filled.diagnostics[0].severity == Severity::Warning);
    CHECK(slot_count(filled.document) == 1);
}

TEST_CASE("an unused binding is W062 and the document is untouched") {
    auto [doc, pdiags] = parse("no slots here", "t");
    Document original = doc;
    auto [bindings, bdiags] = parse_bindings("A = 1", "v");
    FillResult filled = fill(std::move(doc), bindings, /*strict=*/false);
    CHECK(codes_of(filled.diagnostics) == std::vector<std::string>{"W062"});
    CHECK(filled.diagnostics[0].span.path == "v");
    CHECK(structurally_equal(filled.document, original));
}

TEST_CASE("a clean strict fill leaves no slots and is idempotent") {
    std::string source = test::read_fixture("vars/term_sheet.lexm");
    std::string data = test::read_fixture("vars/complete.vars");
    auto [doc, pdiags] = parse(source, "t");
    auto [bindings, bdiags] = parse_bindings(data, "v");
    REQUIRE(bdiags.empty());

    FillResult once = fill(std::move(doc), bindings, /*strict=*/true);
    CHECK(once.diagnostics.empty());
    CHECK(slot_count(once.document) == 0);

    FillResult twice = fill(once.document, bindings, /*strict=*/true);
    CHECK(structurally_equal(twice.document, once.document));
}

TEST_CASE("fill only ever touches variable slots") {
    std::string source = test::read_fixture("vars/term_sheet.lexm");
    auto [doc, pdiags] = parse(source, "t");
    auto [bindings, bdiags] = parse_bindings(test::read_fixture("vars/partial.vars"), "v");

    // Collect every non-slot node before and after; they must be untouched.
    std::vector<InlineNode> before;
    for_each_seq(doc, [&](const InlineSeq& seq) {
        for (const InlineNode& node : seq)
            if (!std::holds_alternative<VarSlot>(node)) before.push_back(node);
    });
    FillResult filled = fill(doc, bindings, /*strict=*/false);
    std::vector<InlineNode> after;
    int replaced = 0;
    for_each_seq(filled.document, [&](const InlineSeq& seq) {
        for (const InlineNode& node : seq) {
            if (std::holds_alternative<VarSlot>(node)) continue;
            if (const auto* text = std::get_if<Text>(&node);
                text && text->text == "$1,000,000") {
                ++replaced; // the substituted slot
                continue;
            }
            after.push_back(node);
        }
    });
    CHECK(replaced == 1);
    REQUIRE(after.size() == before.size());
    for (std::size_t i = 0; i < before.size(); ++i)
        CHECK(structurally_equal(before[i], after[i]));
}

TEST_CASE("partial data under strict mode reports each case exactly once") {
    std::string source = test::read_fixture("vars/term_sheet.lexm");
    auto [doc, pdiags] = parse(source, "t");
    auto [bindings, bdiags] = parse_bindings(test::read_fixture("vars/partial.vars"), "v");
    FillResult filled = fill(std::move(doc), bindings, /*strict=*/true);
    // ClosingDate and PreMoney unbound, Discount unused.
    CHECK(codes_of(filled.diagnostics) ==
          std::vector<std::string>{"E060", "E060", "W062"});
}
