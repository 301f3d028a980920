// corpus.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#include "lexm/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include <json.hpp>

#include "lexm/render.hpp"
#include "lexm/text.hpp"
#include "lexm/walk.hpp"

namespace lexm {

namespace {

double round4(double x) { return std::round(x * 10000.0) / 10000.0; }

std::string format4(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4f", x);
    return buffer;
}

bool section_matches(const Section& section, const Selector& selector) {
    if (selector.type) {
        std::string wanted = normalize_text(*selector.type);
        return std::find(section.types.begin(), section.types.end(), wanted) !=
               section.types.end();
    }
    if (selector.label) {
        std::string wanted = normalize_text(*selector.label);
        if (section.label && *section.label == wanted) return true;
        return normalize_text(plain_text(section.title)) == wanted;
    }
    return false;
}

} // namespace

std::string normalize_item_text(const InlineSeq& content) {
    std::string s = normalize_text(plain_text(content));
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');

    auto rstrip_punct = [&] {
        while (!s.empty()) {
            char c = s.back();
            if (c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?' ||
                c == ' ') {
                s.pop_back();
            } else {
                break;
            }
        }
    };
    rstrip_punct();
    if (s.size() > 3 && s.compare(s.size() - 3, 3, " or") == 0) {
        s.resize(s.size() - 3);
    } else if (s.size() > 4 && s.compare(s.size() - 4, 4, " and") == 0) {
        s.resize(s.size() - 4);
    }
    rstrip_punct();
    return s;
}

std::vector<ExtractedClause> extract(const std::vector<AnalyzedDocument>& docs,
                                     const Selector& selector) {
    std::vector<const AnalyzedDocument*> ordered;
    ordered.reserve(docs.size());
    for (const AnalyzedDocument& doc : docs) ordered.push_back(&doc);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const AnalyzedDocument* a, const AnalyzedDocument* b) {
                         return a->doc.source_path < b->doc.source_path;
                     });

    std::vector<ExtractedClause> out;
    for (const AnalyzedDocument* doc : ordered) {
        for_each_section(doc->doc, [&](const Section& section, const SectionPath&) {
            if (!section_matches(section, selector)) return;
            out.push_back(ExtractedClause{doc->doc.source_path,
                                          render_markup_fragment(BlockNode{section})});
        });
    }
    return out;
}

CorpusStats stats(const std::vector<AnalyzedDocument>& docs) {
    CorpusStats result;
    result.doc_count = static_cast<int>(docs.size());

    // type -> documents carrying it; (type, item) -> documents listing it.
    std::map<std::string, std::set<std::string>> docs_of_type;
    std::map<std::string, std::map<std::string, std::set<std::string>>> items_of_type;

    for (const AnalyzedDocument& doc : docs) {
        const std::string& path = doc.doc.source_path;
        for_each_section(doc.doc, [&](const Section& section, const SectionPath&) {
            for (const std::string& type : section.types) {
                docs_of_type[type].insert(path);
                // Lists in the section's own content; child sections keep
                // their own types.
                for_each_list(section.children, /*descend_sections=*/false,
                              [&](const ListBlock& list, int) {
                                  for (const ListItem& item : list.items) {
                                      std::string text = normalize_item_text(item.content);
                                      if (!text.empty())
                                          items_of_type[type][text].insert(path);
                                  }
                              });
            }
        });
    }

    for (const auto& [type, doc_paths] : docs_of_type) {
        TypeStat stat;
        stat.type = type;
        stat.doc_count = static_cast<int>(doc_paths.size());
        stat.fraction = result.doc_count == 0
                            ? 0.0
                            : round4(static_cast<double>(stat.doc_count) / result.doc_count);
        auto items_it = items_of_type.find(type);
        if (items_it != items_of_type.end()) {
            for (const auto& [text, paths] : items_it->second) {
                TypeStat::ItemFrequency freq;
                freq.text = text;
                freq.doc_count = static_cast<int>(paths.size());
                freq.fraction =
                    round4(static_cast<double>(freq.doc_count) / stat.doc_count);
                stat.item_frequencies.push_back(std::move(freq));
            }
            std::stable_sort(stat.item_frequencies.begin(), stat.item_frequencies.end(),
                             [](const auto& a, const auto& b) {
                                 if (a.doc_count != b.doc_count)
                                     return a.doc_count > b.doc_count;
                                 return a.text < b.text;
                             });
        }
        result.type_stats.push_back(std::move(stat));
    }
    std::stable_sort(result.type_stats.begin(), result.type_stats.end(),
                     [](const TypeStat& a, const TypeStat& b) {
                         if (a.doc_count != b.doc_count) return a.doc_count > b.doc_count;
                         return a.type < b.type;
                     });
    return result;
}

std::string render_stats_text(const CorpusStats& stats) {
    std::string out = "documents: " + std::to_string(stats.doc_count) + "\n";
    for (const TypeStat& stat : stats.type_stats) {
        out += "\n" + stat.type + ": " + std::to_string(stat.doc_count) + " of " +
               std::to_string(stats.doc_count) + " documents (" + format4(stat.fraction) +
               ")\n";
        for (const auto& item : stat.item_frequencies) {
            out += "  " + item.text + ": " + std::to_string(item.doc_count) + " (" +
                   format4(item.fraction) + ")\n";
        }
    }
    return out;
}

std::string render_stats_json(const CorpusStats& stats) {
    nlohmann::ordered_json root;
    root["schema_version"] = 1;
    root["doc_count"] = stats.doc_count;
    nlohmann::ordered_json types = nlohmann::ordered_json::array();
    for (const TypeStat& stat : stats.type_stats) {
        nlohmann::ordered_json entry;
        entry["type"] = stat.type;
        entry["doc_count"] = stat.doc_count;
        entry["fraction"] = stat.fraction;
        nlohmann::ordered_json items = nlohmann::ordered_json::array();
        for (const auto& item : stat.item_frequencies) {
            items.push_back(nlohmann::ordered_json{{"text", item.text},
                                                   {"doc_count", item.doc_count},
                                                   {"fraction", item.fraction}});
        }
        entry["items"] = std::move(items);
        types.push_back(std::move(entry));
    }
    root["types"] = std::move(types);
    return root.dump(2) + "\n";
}

} // namespace lexm
