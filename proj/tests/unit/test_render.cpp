// test_render.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <json.hpp>

#include "../support/fixtures.hpp"
#include "../support/generators.hpp"
#include "lexm/analyzer.hpp"
#include "lexm/parser.hpp"
#include "lexm/render.hpp"
#include "lexm/walk.hpp"

using namespace lexm;

namespace {

AnalyzedDocument analyze_source(const std::string& source, const std::string& path = "t") {
    auto [doc, diags] = parse(source, path);
    return analyze(doc, std::move(diags));
}

// The Figure 1 body, exactly as published.
const std::string kFigure1Body =
    "Permitted disclosure of Confidential Information\n"
    "\n"
    "The parties must not disclose Confidential Information, unless:\n"
    "\n"
    "    (a) required by the Corporations Act section 87 or any other Law;\n"
    "    (b) to a Prospective Investor; or\n"
    "    (c) in accordance with clause 19.\n";

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t at = haystack.find(needle); at != std::string::npos;
         at = haystack.find(needle, at + needle.size()))
        ++count;
    return count;
}

std::string visible_text(const std::string& html) {
    std::string out;
    bool in_tag = false;
    for (char c : html) {
        if (c == '<') in_tag = true;
        else if (c == '>') in_tag = false;
        else if (!in_tag) out += c;
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// render_text
// ---------------------------------------------------------------------------

TEST_CASE("the published fixture reproduces the Figure 1 body byte for byte") {
    auto analyzed = analyze_source(test::read_fixture("fig1_fixture.lexm"));
    REQUIRE(analyzed.diagnostics.empty());
    std::string text = render_text(analyzed);
    CHECK(text.find(kFigure1Body) != std::string::npos);
}

TEST_CASE("rendering an empty document yields an empty string") {
    auto analyzed = analyze_source("");
    CHECK(render_text(analyzed) == "");
}

TEST_CASE("an unresolved reference renders bracketed in draft mode") {
    auto analyzed = analyze_source("in accordance with clause \\ref{X}.");
    CHECK(render_text(analyzed) == "in accordance with clause \u27E8X\u27E9.\n");
}

TEST_CASE("numbered headings are opt-in") {
    auto analyzed = analyze_source("\\section{Scope}\n\nBody.");
    CHECK(render_text(analyzed) == "Scope\n\nBody.\n");
    CHECK(render_text(analyzed, /*numbered=*/true) == "1. Scope\n\nBody.\n");
}

TEST_CASE("nested lists indent eight spaces with roman markers") {
    auto analyzed = analyze_source(
        "\\begin{itemize}\\item outer\n"
        "\\begin{itemize}\\item first\\item second\\end{itemize}\n"
        "\\item next\\end{itemize}");
    std::string text = render_text(analyzed);
    CHECK(text.find("    (a) outer") != std::string::npos);
    CHECK(text.find("        (i) first") != std::string::npos);
    CHECK(text.find("        (ii) second") != std::string::npos);
    CHECK(text.find("    (b) next") != std::string::npos);
}

TEST_CASE("published text never leaks tag syntax") {
    static const char* kTags[] = {"\\def",    "\\leg",  "\\ref",     "\\var",
                                  "\\or",     "\\and",  "\\begin",   "\\end",
                                  "\\item",   "\\type", "\\label",   "\\title",
                                  "\\section", "\\define"};
    for (std::uint32_t seed = 0; seed < 30; ++seed) {
        test::DocumentGenerator gen(7100 + seed);
        auto analyzed = analyze_source(gen.source());
        std::string text = render_text(analyzed);
        for (const char* tag : kTags) CHECK(text.find(tag) == std::string::npos);
    }
}

// ---------------------------------------------------------------------------
// render_html
// ---------------------------------------------------------------------------

TEST_CASE("hovering a defined term shows its definition") {
    auto analyzed = analyze_source(test::read_fixture("fig1_fixture.lexm"));
    std::string html = render_html(analyzed);
    CHECK(html.find("any information disclosed by one party to another") != std::string::npos);
    // One tooltip-bearing element per term use: 4 in the clause + 0 others.
    CHECK(count_occurrences(html, "class=\"term\"") == 4);
    CHECK(count_occurrences(html, "class=\"tooltip\"") == 4);
}

TEST_CASE("type labels are machine-readable but invisible") {
    auto analyzed = analyze_source(test::read_fixture("fig1_fixture.lexm"));
    std::string html = render_html(analyzed);
    CHECK(html.find("data-type=\"Confidentiality\"") != std::string::npos);
    CHECK(visible_text(html).find("Confidentiality") == std::string::npos);
}

TEST_CASE("an undefined term gets an explanatory tooltip") {
    auto analyzed = analyze_source("Uses \\def{Mystery} here.");
    std::string html = render_html(analyzed);
    CHECK(html.find(">undefined term<") != std::string::npos);
}

TEST_CASE("resolved references link to their section anchor") {
    auto analyzed = analyze_source(
        "\\section{Terms}\n\nSee \\ref{Terms} again.\n");
    std::string html = render_html(analyzed);
    CHECK(html.find("id=\"sec-1\"") != std::string::npos);
    CHECK(html.find("href=\"#sec-1\"") != std::string::npos);
}

TEST_CASE("an empty document still renders a valid skeleton") {
    auto analyzed = analyze_source("");
    std::string html = render_html(analyzed);
    CHECK(html.rfind("<!DOCTYPE html>", 0) == 0);
    CHECK(html.find("<body>") != std::string::npos);
    CHECK(html.find("</html>") != std::string::npos);
    CHECK(html.find("<script") == std::string::npos);
}

TEST_CASE("html escapes markup-significant characters") {
    auto analyzed = analyze_source("5 \\% < 10 % trailing note\nand a\\{b\\}");
    std::string html = render_html(analyzed);
    CHECK(html.find("&lt;") != std::string::npos);
}

TEST_CASE("exactly one tooltip per term use on generated documents") {
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        test::DocumentGenerator gen(8200 + seed);
        auto analyzed = analyze_source(gen.source());
        int uses = 0;
        for_each_seq(analyzed.doc, [&](const InlineSeq& seq) {
            for (const InlineNode& node : seq)
                if (std::holds_alternative<TermUse>(node)) ++uses;
        });
        std::string html = render_html(analyzed);
        CHECK(count_occurrences(html, "class=\"term\"") == static_cast<std::size_t>(uses));
    }
}

// ---------------------------------------------------------------------------
// render_json
// ---------------------------------------------------------------------------

TEST_CASE("the fixture exports three definitions and one canonical citation") {
    auto analyzed = analyze_source(test::read_fixture("fig1_fixture.lexm"));
    std::string out = render_json(analyzed);
    auto j = nlohmann::json::parse(out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["definitions"].size() == 3);
    REQUIRE(j["legislation"].size() == 1);
    CHECK(j["legislation"][0]["canonical"] == "Corporations Act section 87");
    REQUIRE(j["references"].size() == 1);
    CHECK(j["references"][0]["resolved"] == "19");
    CHECK(j["types_index"]["Confidentiality"][0] == "2");
}

TEST_CASE("an empty document exports empty arrays under schema_version 1") {
    auto analyzed = analyze_source("");
    auto j = nlohmann::json::parse(render_json(analyzed));
    CHECK(j["schema_version"] == 1);
    CHECK(j["title"].is_null());
    CHECK(j["sections"].empty());
    CHECK(j["definitions"].empty());
    CHECK(j["references"].empty());
    CHECK(j["legislation"].empty());
    CHECK(j["variables"].empty());
    CHECK(j["types_index"].empty());
    CHECK(j["diagnostics"].empty());
}

TEST_CASE("variable slots are collected by first appearance") {
    auto analyzed = analyze_source("pay \\var{PurchasePrice} by \\var{ClosingDate}; "
                                   "confirm \\var{PurchasePrice}.");
    auto j = nlohmann::json::parse(render_json(analyzed));
    REQUIRE(j["variables"].size() == 2);
    CHECK(j["variables"][0] == "PurchasePrice");
    CHECK(j["variables"][1] == "ClosingDate");
}

TEST_CASE("the documented key order is stable") {
    auto analyzed = analyze_source(test::read_fixture("fig1_fixture.lexm"));
    std::string out = render_json(analyzed);
    const char* keys[] = {"\"schema_version\"", "\"title\"",       "\"sections\"",
                          "\"definitions\"",    "\"references\"",  "\"legislation\"",
                          "\"variables\"",      "\"types_index\"", "\"diagnostics\""};
    std::size_t last = 0;
    for (const char* key : keys) {
        std::size_t at = out.find(key);
        REQUIRE(at != std::string::npos);
        CHECK(at >= last);
        last = at;
    }
}

TEST_CASE("json export is byte-stable across runs") {
    std::string source = test::read_fixture("fig1_fixture.lexm");
    CHECK(render_json(analyze_source(source)) == render_json(analyze_source(source)));
}

TEST_CASE("diagnostics appear in the export") {
    auto analyzed = analyze_source("Uses \\def{Mystery}.");
    auto j = nlohmann::json::parse(render_json(analyzed));
    REQUIRE(j["diagnostics"].size() == 1);
    CHECK(j["diagnostics"][0]["code"] == "E010");
    CHECK(j["diagnostics"][0]["severity"] == "error");
    CHECK(j["diagnostics"][0]["line"] == 1);
}

// ---------------------------------------------------------------------------
// render_markup
// ---------------------------------------------------------------------------

TEST_CASE("the canonical emitter round-trips the Figure 2 clause") {
    std::string source = test::read_fixture("fig2.lexm");
    auto [doc, diags] = parse(source, "t");
    REQUIRE(diags.empty());
    std::string emitted = render_markup(doc);
    auto [again, diags2] = parse(emitted, "t");
    CHECK(diags2.empty());
    CHECK(structurally_equal(doc, again));
}

TEST_CASE("the canonical emitter is a fixed point on its own output") {
    std::string source = test::read_fixture("fig1_fixture.lexm");
    auto [doc, diags] = parse(source, "t");
    std::string once = render_markup(doc);
    auto [again, diags2] = parse(once, "t");
    CHECK(render_markup(again) == once);
}

TEST_CASE("special characters are re-escaped") {
    auto [doc, diags] = parse("progress: 100\\% done and a\\{b\\}c", "t");
    REQUIRE(diags.empty());
    std::string emitted = render_markup(doc);
    CHECK(emitted.find("100\\% done") != std::string::npos);
    CHECK(emitted.find("a\\{b\\}c") != std::string::npos);
}

TEST_CASE("optional arguments are re-emitted with types before the label") {
    auto [doc, diags] = parse("\\section[\\type{A}\\type{B}\\label{K}]{T}\n\nx", "t");
    std::string emitted = render_markup(doc);
    CHECK(emitted.find("\\section[\\type{A}\\type{B}\\label{K}]{T}") != std::string::npos);
}

TEST_CASE("a connective before letter text keeps a separating group") {
    InlineSeq seq;
    seq.push_back(Text{"a ", {}});
    seq.push_back(Connective{Connective::Kind::Or, {}});
    seq.push_back(Text{"x", {}});
    Paragraph para{std::move(seq), {}};
    Document doc;
    doc.body.push_back(BlockNode{std::move(para)});
    std::string emitted = render_markup(doc);
    CHECK(emitted.find("\\or{}x") != std::string::npos);
    auto [again, diags] = parse(emitted, "t");
    CHECK(diags.empty());
    CHECK(structurally_equal(doc, again));
}
