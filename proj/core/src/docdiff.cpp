// docdiff.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include "lexm/docdiff.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "lexm/render.hpp"
#include "lexm/text.hpp"

namespace lexm {

namespace {

constexpr const char* kPreambleKey = "T:\u27E8preamble\u27E9";

// One comparable clause: a section (sans its subsections, which are clauses
// of their own) or the preamble pseudo-section.
struct Clause {
    std::string key;
    std::optional<std::string> number;
    std::string canonical; // normalized canonical markup, identity of content
    std::string text;      // normalized plain text, input to the word diff
};

Section without_subsections(const Section& section) {
    Section trimmed;
    trimmed.level = section.level;
    trimmed.types = section.types;
    trimmed.label = section.label;
    trimmed.title = section.title;
    for (const BlockNode& child : section.children) {
        if (!std::holds_alternative<Section>(child)) trimmed.children.push_back(child);
    }
    return trimmed;
}

std::string blocks_plain_text(const std::vector<BlockNode>& blocks);

std::string list_plain_text(const ListBlock& list) {
    std::string out;
    for (const ListItem& item : list.items) {
        if (!out.empty()) out += ' ';
        out += plain_text(item.content);
        for (const ListBlock& sub : item.sublists) {
            out += ' ';
            out += list_plain_text(sub);
        }
    }
    return out;
}

std::string block_plain_text(const BlockNode& block) {
    return std::visit(
        [&](const auto& b) -> std::string {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Section>) {
                std::string out = plain_text(b.title);
                std::string rest = blocks_plain_text(b.children);
                if (!rest.empty()) out += ' ' + rest;
                return out;
            } else if constexpr (std::is_same_v<T, Paragraph>) {
                return plain_text(b.content);
            } else if constexpr (std::is_same_v<T, ListBlock>) {
                return list_plain_text(b);
            } else {
                std::string out = b.term + " " + plain_text(b.definition);
                return out;
            }
        },
        block);
}

std::string blocks_plain_text(const std::vector<BlockNode>& blocks) {
    std::string out;
    for (const BlockNode& block : blocks) {
        if (!out.empty()) out += ' ';
        out += block_plain_text(block);
    }
    return out;
}

void collect_sections(const std::vector<BlockNode>& blocks, SectionPath& path,
                      const Numbering& numbering, std::vector<Clause>& out) {
    int index = 0;
    for (const BlockNode& block : blocks) {
        const auto* section = std::get_if<Section>(&block);
        if (!section) continue;
        path.push_back(index++);
        Section own = without_subsections(*section);
        Clause clause;
        clause.key = section_key(*section);
        clause.number = numbering.sections.at(path);
        clause.canonical = normalize_text(render_markup_fragment(BlockNode{own}));
        clause.text = normalize_text(block_plain_text(BlockNode{own}));
        out.push_back(std::move(clause));
        collect_sections(section->children, path, numbering, out);
        path.pop_back();
    }
}

std::vector<Clause> flatten(const AnalyzedDocument& doc) {
    std::vector<Clause> out;
    std::vector<BlockNode> preamble;
    for (const BlockNode& block : doc.doc.body) {
        if (!std::holds_alternative<Section>(block)) preamble.push_back(block);
    }
    if (!preamble.empty() || doc.doc.title) {
        Clause clause;
        clause.key = kPreambleKey;
        std::string text;
        if (doc.doc.title) text = plain_text(*doc.doc.title);
        std::string rest = blocks_plain_text(preamble);
        if (!rest.empty()) text += (text.empty() ? "" : " ") + rest;
        std::string canonical;
        if (doc.doc.title)
            canonical = "\\title{" + render_markup_inline(*doc.doc.title) + "}";
        for (const BlockNode& block : preamble) {
            if (!canonical.empty()) canonical += "\n\n";
            canonical += render_markup_fragment(block);
        }
        clause.text = normalize_text(text);
        clause.canonical = normalize_text(canonical);
        out.push_back(std::move(clause));
    }
    SectionPath path;
    collect_sections(doc.doc.body, path, doc.numbering, out);
    return out;
}

// Longest strictly increasing subsequence over the old-side indices of the
// paired clauses; everything off it moved. Patience algorithm, O(n log n).
std::vector<bool> lis_membership(const std::vector<int>& values) {
    std::vector<int> tails;        // tails[k] = index into values
    std::vector<int> predecessors(values.size(), -1);
    std::vector<int> tail_values;
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto it = std::lower_bound(tail_values.begin(), tail_values.end(), values[i]);
        std::size_t k = static_cast<std::size_t>(it - tail_values.begin());
        if (k > 0) predecessors[i] = tails[k - 1];
        if (it == tail_values.end()) {
            tail_values.push_back(values[i]);
            tails.push_back(static_cast<int>(i));
        } else {
            *it = values[i];
            tails[k] = static_cast<int>(i);
        }
    }
    std::vector<bool> member(values.size(), false);
    if (!tails.empty()) {
        for (int i = tails.back(); i != -1; i = predecessors[i]) member[i] = true;
    }
    return member;
}

} // namespace

std::string section_key(const Section& section) {
    if (section.label) return "L:" + *section.label;
    return "T:" + normalize_text(plain_text(section.title));
}

std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space_byte(text[i])) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_space_byte(text[i])) ++i;
        if (i > start) words.emplace_back(text.substr(start, i - start));
    }
    return words;
}

std::vector<WordEdit> word_diff(const std::vector<std::string>& old_words,
                                const std::vector<std::string>& new_words) {
    // Shared prefix/suffix first; the quadratic table only sees the middle.
    std::size_t prefix = 0;
    while (prefix < old_words.size() && prefix < new_words.size() &&
           old_words[prefix] == new_words[prefix])
        ++prefix;
    std::size_t suffix = 0;
    while (suffix < old_words.size() - prefix && suffix < new_words.size() - prefix &&
           old_words[old_words.size() - 1 - suffix] == new_words[new_words.size() - 1 - suffix])
        ++suffix;

    std::size_t n = old_words.size() - prefix - suffix;
    std::size_t m = new_words.size() - prefix - suffix;

    std::vector<WordEdit> edits;
    edits.reserve(old_words.size() + new_words.size());
    for (std::size_t i = 0; i < prefix; ++i)
        edits.push_back({WordEdit::Op::Keep, old_words[i]});

    if (n > 0 && m > 0 && n * m <= 4'000'000) {
        const std::string* a = old_words.data() + prefix;
        const std::string* b = new_words.data() + prefix;
        std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= m; ++j)
                lcs[i][j] = a[i - 1] == b[j - 1]
                                ? lcs[i - 1][j - 1] + 1
                                : std::max(lcs[i - 1][j], lcs[i][j - 1]);
        std::vector<WordEdit> middle;
        std::size_t i = n, j = m;
        while (i > 0 || j > 0) {
            if (i > 0 && j > 0 && a[i - 1] == b[j - 1]) {
                middle.push_back({WordEdit::Op::Keep, a[i - 1]});
                --i, --j;
            } else if (j > 0 && (i == 0 || lcs[i][j - 1] >= lcs[i - 1][j])) {
                middle.push_back({WordEdit::Op::Insert, b[j - 1]});
                --j;
            } else {
                middle.push_back({WordEdit::Op::Delete, a[i - 1]});
                --i;
            }
        }
        edits.insert(edits.end(), middle.rbegin(), middle.rend());
    } else {
        // Degenerate or oversized middle: replace wholesale. Still satisfies
        // the reconstruction contract, just not minimal.
        for (std::size_t i = 0; i < n; ++i)
            edits.push_back({WordEdit::Op::Delete, old_words[prefix + i]});
        for (std::size_t j = 0; j < m; ++j)
            edits.push_back({WordEdit::Op::Insert, new_words[prefix + j]});
    }

    for (std::size_t i = 0; i < suffix; ++i)
        edits.push_back({WordEdit::Op::Keep, old_words[old_words.size() - suffix + i]});
    return edits;
}

bool DiffReport::has_changes() const {
    return std::any_of(deltas.begin(), deltas.end(), [](const SectionDelta& d) {
        return d.status != SectionDelta::Status::Unchanged;
    });
}

DiffReport diff(const AnalyzedDocument& old_doc, const AnalyzedDocument& new_doc) {
    DiffReport report;
    report.old_path = old_doc.doc.source_path;
    report.new_path = new_doc.doc.source_path;

    std::vector<Clause> old_clauses = flatten(old_doc);
    std::vector<Clause> new_clauses = flatten(new_doc);

    // Pair equal keys in document order.
    std::map<std::string, std::vector<std::size_t>> old_by_key;
    for (std::size_t i = 0; i < old_clauses.size(); ++i)
        old_by_key[old_clauses[i].key].push_back(i);

    std::vector<int> pair_of_new(new_clauses.size(), -1);
    std::vector<bool> old_paired(old_clauses.size(), false);
    std::map<std::string, std::size_t> next_use;
    for (std::size_t j = 0; j < new_clauses.size(); ++j) {
        auto it = old_by_key.find(new_clauses[j].key);
        if (it == old_by_key.end()) continue;
        std::size_t& cursor = next_use[new_clauses[j].key];
        if (cursor >= it->second.size()) continue;
        std::size_t i = it->second[cursor++];
        pair_of_new[j] = static_cast<int>(i);
        old_paired[i] = true;
    }

    // Relative order among the paired clauses, judged on the old side.
    std::vector<int> paired_old_indices;
    for (std::size_t j = 0; j < new_clauses.size(); ++j)
        if (pair_of_new[j] >= 0) paired_old_indices.push_back(pair_of_new[j]);
    std::vector<bool> in_order = lis_membership(paired_old_indices);

    std::size_t paired_seen = 0;
    for (std::size_t j = 0; j < new_clauses.size(); ++j) {
        const Clause& nc = new_clauses[j];
        SectionDelta delta;
        delta.key = nc.key;
        delta.new_number = nc.number;
        if (pair_of_new[j] < 0) {
            delta.status = SectionDelta::Status::Added;
            delta.text = nc.text;
        } else {
            const Clause& oc = old_clauses[static_cast<std::size_t>(pair_of_new[j])];
            bool ordered = in_order[paired_seen++];
            delta.old_number = oc.number;
            if (oc.canonical == nc.canonical) {
                delta.status = ordered ? SectionDelta::Status::Unchanged
                                       : SectionDelta::Status::Moved;
            } else {
                delta.status = SectionDelta::Status::Modified;
                delta.word_edits = word_diff(split_words(oc.text), split_words(nc.text));
            }
        }
        report.deltas.push_back(std::move(delta));
    }
    for (std::size_t i = 0; i < old_clauses.size(); ++i) {
        if (old_paired[i]) continue;
        const Clause& oc = old_clauses[i];
        SectionDelta delta;
        delta.status = SectionDelta::Status::Removed;
        delta.key = oc.key;
        delta.old_number = oc.number;
        delta.text = oc.text;
        report.deltas.push_back(std::move(delta));
    }
    return report;
}

const char* delta_status_name(SectionDelta::Status status) {
    switch (status) {
        case SectionDelta::Status::Added: return "added";
        case SectionDelta::Status::Removed: return "removed";
        case SectionDelta::Status::Modified: return "modified";
        case SectionDelta::Status::Moved: return "moved";
        case SectionDelta::Status::Unchanged: return "unchanged";
    }
    return "unchanged";
}

std::string render_diff_text(const DiffReport& report) {
    std::string out;
    for (const SectionDelta& delta : report.deltas) {
        if (delta.status == SectionDelta::Status::Unchanged) continue;
        if (!out.empty()) out += '\n';
        out += '[';
        out += delta_status_name(delta.status);
        out += ']';
        const std::optional<std::string>& number =
            delta.status == SectionDelta::Status::Removed ? delta.old_number
                                                          : delta.new_number;
        if (number) out += " \u00A7" + *number;
        out += ' ' + delta.key;
        if (delta.status == SectionDelta::Status::Moved && delta.old_number &&
            delta.new_number && *delta.old_number != *delta.new_number) {
            out += " (was \u00A7" + *delta.old_number + ")";
        }
        out += '\n';

        if (delta.status == SectionDelta::Status::Added && !delta.text.empty()) {
            out += "+ " + delta.text + '\n';
            continue;
        }
        if (delta.status == SectionDelta::Status::Removed && !delta.text.empty()) {
            out += "- " + delta.text + '\n';
            continue;
        }

        // Change hunks: runs of deletions then insertions, keeps elided.
        std::string deletes, inserts;
        auto flush = [&] {
            if (!deletes.empty()) out += "- " + deletes + '\n';
            if (!inserts.empty()) out += "+ " + inserts + '\n';
            deletes.clear();
            inserts.clear();
        };
        for (const WordEdit& edit : delta.word_edits) {
            switch (edit.op) {
                case WordEdit::Op::Keep: flush(); break;
                case WordEdit::Op::Delete:
                    if (!deletes.empty()) deletes += ' ';
                    deletes += edit.text;
                    break;
                case WordEdit::Op::Insert:
                    if (!inserts.empty()) inserts += ' ';
                    inserts += edit.text;
                    break;
            }
        }
        flush();
    }
    return out;
}

std::string render_diff_json(const DiffReport& report) {
    nlohmann::ordered_json root;
    root["schema_version"] = 1;
    root["old_path"] = report.old_path;
    root["new_path"] = report.new_path;
    nlohmann::ordered_json deltas = nlohmann::ordered_json::array();
    for (const SectionDelta& delta : report.deltas) {
        nlohmann::ordered_json entry;
        entry["status"] = delta_status_name(delta.status);
        entry["key"] = delta.key;
        entry["old_number"] = delta.old_number ? nlohmann::ordered_json(*delta.old_number)
                                               : nlohmann::ordered_json(nullptr);
        entry["new_number"] = delta.new_number ? nlohmann::ordered_json(*delta.new_number)
                                               : nlohmann::ordered_json(nullptr);
        if (delta.status == SectionDelta::Status::Modified) {
            nlohmann::ordered_json edits = nlohmann::ordered_json::array();
            for (const WordEdit& edit : delta.word_edits) {
                const char* op = edit.op == WordEdit::Op::Keep     ? "keep"
                                 : edit.op == WordEdit::Op::Insert ? "insert"
                                                                   : "delete";
                edits.push_back(nlohmann::ordered_json{{"op", op}, {"text", edit.text}});
            }
            entry["word_edits"] = std::move(edits);
        }
        deltas.push_back(std::move(entry));
    }
    root["deltas"] = std::move(deltas);
    return root.dump(2) + "\n";
}

} // namespace lexm
