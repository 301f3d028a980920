// test_text.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "lexm/text.hpp"

using namespace lexm;

TEST_CASE("plain_text flattens the Figure 1 fragment") {
    InlineSeq seq;
    seq.push_back(Text{"to a ", {}});
    seq.push_back(TermUse{"Prospective Investor", {}});
    seq.push_back(Text{"; ", {}});
    seq.push_back(Connective{Connective::Kind::Or, {}});
    CHECK(plain_text(seq) == "to a Prospective Investor; or");
}

TEST_CASE("plain_text of an empty sequence is empty") {
    CHECK(plain_text({}) == "");
}

TEST_CASE("plain_text brackets variable slots") {
    InlineSeq seq;
    seq.push_back(VarSlot{"PurchasePrice", {}});
    CHECK(plain_text(seq) == "⟨PurchasePrice⟩");
}

TEST_CASE("plain_text prefers canonical citations and resolved numbers") {
    InlineSeq seq;
    seq.push_back(LegCite{"Corporations Act s 87", "Corporations Act section 87", {}});
    seq.push_back(Text{" / ", {}});
    seq.push_back(CrossRef{"Dispute Resolution", "19", {}});
    seq.push_back(Text{" / ", {}});
    seq.push_back(CrossRef{"Unresolved", std::nullopt, {}});
    CHECK(plain_text(seq) == "Corporations Act section 87 / 19 / Unresolved");
}

TEST_CASE("normalize_text trims and collapses whitespace") {
    CHECK(normalize_text("  Dispute   Resolution ") == "Dispute Resolution");
    CHECK(normalize_text("Confidential Information") == "Confidential Information");
    CHECK(normalize_text("a\t\nb") == "a b");
    CHECK(normalize_text("") == "");
    CHECK(normalize_text("   ") == "");
}

TEST_CASE("normalize_text keeps case") {
    CHECK(normalize_text("Law") == "Law");
    CHECK(normalize_text("law") == "law");
}

TEST_CASE("normalize_text is idempotent on random strings") {
    std::mt19937 rng(7);
    const char alphabet[] = " \t\nabcXYZ.;  ";
    for (int trial = 0; trial < 500; ++trial) {
        std::string s;
        int n = static_cast<int>(rng() % 40);
        for (int i = 0; i < n; ++i) s += alphabet[rng() % (sizeof(alphabet) - 1)];
        std::string once = normalize_text(s);
        CHECK(normalize_text(once) == once);
    }
}
