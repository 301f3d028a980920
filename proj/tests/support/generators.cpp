// generators.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include "generators.hpp"

#include "lexm/render.hpp"
#include "lexm/text.hpp"

namespace lexm::test {

namespace {

const char* kWords[] = {
    "party",     "parties",   "agreement",  "disclose",   "information",
    "payment",   "notice",    "tenant",     "landlord",   "liability",
    "warranty",  "indemnity", "obligation", "terminate",  "breach",
    "remedy",    "interest",  "schedule",   "completion", "settlement",
    "consent",   "approval",  "assignment", "insurance",  "dispute",
    "holder",    "shares",    "valuation",  "dividend",   "preference",
};

const char* kTerms[] = {
    "Confidential Information", "Law", "Prospective Investor", "Business Day",
    "Completion Date",          "Purchase Price",
};

const char* kCites[] = {
    "Corporations Act section 87", "Corporations Act s 87", "Privacy Act sec 12",
    "Smith v Jones",               "Sale of Goods Act cl 4",
};

const char* kSpecials[] = {"100% done", "a{b}c", "[bracketed]", "back\\slash", "50%"};

const char* kMutations[] = {
    "\\def{",  "}",      "\\begin{itemize}", "\\end{itemize}", "\\item ",
    "{",       "[",      "]",                "\\unknowncmd{x}", "%",
    "\\1",     "\\\\",   "\\section{",       "\\end{quote}",    "\n\n",
};

} // namespace

int DocumentGenerator::pick(int n) {
    return static_cast<int>(rng_() % static_cast<std::uint32_t>(n));
}

bool DocumentGenerator::chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
}

std::string DocumentGenerator::word() {
    return kWords[pick(static_cast<int>(std::size(kWords)))];
}

std::string DocumentGenerator::text_run(bool allow_specials) {
    std::string out;
    int n = 1 + pick(6);
    for (int i = 0; i < n; ++i) {
        if (!out.empty()) out += ' ';
        if (allow_specials && chance(0.08)) {
            out += kSpecials[pick(static_cast<int>(std::size(kSpecials)))];
        } else {
            out += word();
        }
    }
    return out;
}

InlineSeq DocumentGenerator::inline_seq(int budget, bool allow_connective) {
    InlineSeq seq;
    seq.push_back(Text{text_run(true), {}});
    for (int i = 0; i < budget; ++i) {
        switch (pick(6)) {
            case 0:
                seq.push_back(TermUse{kTerms[pick(static_cast<int>(std::size(kTerms)))], {}});
                break;
            case 1:
                seq.push_back(LegCite{kCites[pick(static_cast<int>(std::size(kCites)))],
                                      std::nullopt,
                                      {}});
                break;
            case 2: seq.push_back(CrossRef{"Clause " + word(), std::nullopt, {}}); break;
            case 3: seq.push_back(VarSlot{"Var_" + word(), {}}); break;
            default: seq.push_back(Text{" " + text_run(false), {}}); break;
        }
    }
    seq.push_back(Text{" " + text_run(true), {}});
    if (allow_connective && chance(0.4)) {
        seq.push_back(Text{"; ", {}});
        seq.push_back(Connective{chance(0.5) ? Connective::Kind::Or : Connective::Kind::And, {}});
    }
    return seq;
}

ListBlock DocumentGenerator::list_block(int depth) {
    ListBlock list;
    int items = 2 + pick(4);
    for (int i = 0; i < items; ++i) {
        ListItem item;
        item.content = inline_seq(pick(3), /*allow_connective=*/i == items - 2);
        if (depth < 2 && chance(0.2)) item.sublists.push_back(list_block(depth + 1));
        list.items.push_back(std::move(item));
    }
    return list;
}

Document DocumentGenerator::document() {
    Document doc;
    doc.source_path = "generated.lexm";
    if (chance(0.5)) doc.title = inline_seq(1, false);

    if (chance(0.3)) {
        Paragraph preamble;
        preamble.content = inline_seq(2, false);
        doc.body.push_back(std::move(preamble));
    }

    int sections = 1 + pick(4);
    int level = 1;
    for (int s = 0; s < sections; ++s) {
        Section section;
        // Wander through levels without ever jumping deeper by more than one.
        if (chance(0.35) && level < 3) ++level;
        else if (chance(0.35) && level > 1) --level;
        section.level = 1; // levels applied through nesting below
        section.title = inline_seq(1, false);
        if (chance(0.5)) section.types.push_back(word());
        if (chance(0.3)) section.label = "key " + word();

        int blocks = 1 + pick(3);
        for (int b = 0; b < blocks; ++b) {
            switch (pick(4)) {
                case 0: {
                    Paragraph para;
                    para.content = inline_seq(pick(4), false);
                    section.children.push_back(std::move(para));
                    break;
                }
                case 1: section.children.push_back(list_block(0)); break;
                case 2: {
                    DefineBlock def;
                    def.term = kTerms[pick(static_cast<int>(std::size(kTerms)))];
                    def.definition = inline_seq(1, false);
                    section.children.push_back(std::move(def));
                    break;
                }
                default: {
                    Paragraph para;
                    para.content = inline_seq(1, false);
                    section.children.push_back(std::move(para));
                    break;
                }
            }
        }
        if (level >= 2) {
            Section sub;
            sub.level = 2;
            sub.title = inline_seq(0, false);
            Paragraph para;
            para.content = inline_seq(1, false);
            sub.children.push_back(std::move(para));
            if (level == 3) {
                Section subsub;
                subsub.level = 3;
                subsub.title = inline_seq(0, false);
                Paragraph inner;
                inner.content = inline_seq(0, false);
                subsub.children.push_back(std::move(inner));
                sub.children.push_back(std::move(subsub));
            }
            section.children.push_back(std::move(sub));
        }
        doc.body.push_back(std::move(section));
    }
    return doc;
}

std::string DocumentGenerator::source() { return render_markup(document()); }

std::string DocumentGenerator::mutated_source() {
    std::string src = source();
    int edits = 1 + pick(5);
    for (int i = 0; i < edits; ++i) {
        if (src.empty()) break;
        std::size_t at = static_cast<std::size_t>(pick(static_cast<int>(src.size())));
        switch (pick(3)) {
            case 0:
                src.insert(at, kMutations[pick(static_cast<int>(std::size(kMutations)))]);
                break;
            case 1: src.erase(at, std::min<std::size_t>(1 + pick(8), src.size() - at)); break;
            default: src[at] = static_cast<char>(32 + pick(95)); break;
        }
    }
    return src;
}

std::string DocumentGenerator::fuzz_bytes() {
    if (chance(0.5)) return mutated_source();
    std::string out;
    int n = pick(400);
    const char* alphabet =
        "abcdefghijklmnop \\{}[]%\n\n\t\\def\\leg\\ref\\var\\or\\and\\begin\\end\\item{}";
    std::size_t alphabet_len = std::char_traits<char>::length(alphabet);
    for (int i = 0; i < n; ++i) {
        if (chance(0.05)) {
            out += static_cast<char>(rng_() % 256);
        } else {
            out += alphabet[rng_() % alphabet_len];
        }
    }
    return out;
}

namespace {

std::string blocks_text(const std::vector<BlockNode>& blocks);

std::string list_text(const ListBlock& list) {
    std::string out;
    for (const ListItem& item : list.items) {
        if (!out.empty()) out += ' ';
        out += plain_text(item.content);
        for (const ListBlock& sub : item.sublists) out += ' ' + list_text(sub);
    }
    return out;
}

std::string blocks_text(const std::vector<BlockNode>& blocks) {
    std::string out;
    for (const BlockNode& block : blocks) {
        std::string piece = std::visit(
            [](const auto& b) -> std::string {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, Section>) {
                    return plain_text(b.title) + ' ' + blocks_text(b.children);
                } else if constexpr (std::is_same_v<T, Paragraph>) {
                    return plain_text(b.content);
                } else if constexpr (std::is_same_v<T, ListBlock>) {
                    return list_text(b);
                } else {
                    return b.term + ' ' + plain_text(b.definition);
                }
            },
            block);
        if (!out.empty()) out += ' ';
        out += piece;
    }
    return out;
}

} // namespace

std::string document_plain_text(const Document& doc) {
    std::string out;
    if (doc.title) out = plain_text(*doc.title);
    std::string body = blocks_text(doc.body);
    if (!body.empty()) out += (out.empty() ? "" : " ") + body;
    return out;
}

} // namespace lexm::test
