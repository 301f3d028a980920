// lexm.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line frontend for the lexm contract-markup toolchain. Output goes
// to standard output; diagnostics go to standard error in text form, or to
// standard output as the single machine-readable stream under --json.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexm/analyzer.hpp"
#include "lexm/corpus.hpp"
#include "lexm/diagnostics.hpp"
#include "lexm/docdiff.hpp"
#include "lexm/parser.hpp"
#include "lexm/render.hpp"
#include "lexm/template_fill.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

std::string format_diagnostics(const std::vector<lexm::Diagnostic>& diags, bool json) {
    if (json) {
        nlohmann::ordered_json array = nlohmann::ordered_json::array();
        for (const lexm::Diagnostic& d : diags) {
            nlohmann::ordered_json entry;
            entry["path"] = d.span.path;
            entry["code"] = d.code;
            entry["severity"] = lexm::severity_name(d.severity);
            entry["line"] = d.span.line;
            entry["col"] = d.span.col;
            entry["message"] = d.message;
            if (d.fix) entry["fix"] = *d.fix;
            array.push_back(std::move(entry));
        }
        return array.dump(2) + "\n";
    }
    std::string out;
    for (const lexm::Diagnostic& d : diags) {
        out += d.span.path + ":" + std::to_string(d.span.line) + ":" +
               std::to_string(d.span.col) + ": " + lexm::severity_name(d.severity) + "[" +
               d.code + "]: " + d.message + "\n";
    }
    return out;
}

void emit_text_diagnostics(const std::vector<lexm::Diagnostic>& diags) {
    if (!diags.empty()) std::cerr << format_diagnostics(diags, false);
}

std::optional<lexm::AnalyzedDocument> load_and_analyze(const std::string& path) {
    std::optional<std::string> source = read_file(path);
    if (!source) {
        std::cerr << "lexm: cannot read '" << path << "'\n";
        return std::nullopt;
    }
    lexm::ParseResult parsed = lexm::parse(*source, path);
    return lexm::analyze(parsed.document, std::move(parsed.diagnostics));
}

bool emit_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return true;
    }
    if (!write_file(out_path, content)) {
        std::cerr << "lexm: cannot write '" << out_path << "'\n";
        return false;
    }
    return true;
}

int run_check(const std::vector<std::string>& files, bool fix, bool json) {
    std::vector<lexm::Diagnostic> all;
    for (const std::string& path : files) {
        std::optional<std::string> source = read_file(path);
        if (!source) {
            std::cerr << "lexm: cannot read '" << path << "'\n";
            return kExitUsage;
        }
        lexm::ParseResult parsed = lexm::parse(*source, path);
        bool syntax_errors = lexm::has_errors(parsed.diagnostics);
        lexm::AnalyzedDocument analyzed =
            lexm::analyze(parsed.document, std::move(parsed.diagnostics));
        if (fix) {
            bool fixable =
                std::any_of(analyzed.diagnostics.begin(), analyzed.diagnostics.end(),
                            [](const lexm::Diagnostic& d) { return d.fix.has_value(); });
            // Never rewrite a file the parser had to recover; error recovery
            // may drop malformed markup, and --fix must not make that loss
            // permanent.
            if (fixable && !syntax_errors) {
                lexm::Document repaired = lexm::apply_fixes(analyzed);
                if (!write_file(path, lexm::render_markup(repaired))) {
                    std::cerr << "lexm: cannot write '" << path << "'\n";
                    return kExitUsage;
                }
            }
        }
        for (lexm::Diagnostic& d : analyzed.diagnostics) all.push_back(std::move(d));
    }
    lexm::sort_diagnostics(all);
    if (json) {
        std::cout << format_diagnostics(all, true);
    } else {
        emit_text_diagnostics(all);
    }
    return lexm::has_errors(all) ? kExitFindings : kExitOk;
}

int run_render(const std::string& file, const std::string& format, bool numbered,
               const std::string& out_path) {
    std::optional<std::string> source = read_file(file);
    if (!source) {
        std::cerr << "lexm: cannot read '" << file << "'\n";
        return kExitUsage;
    }
    lexm::ParseResult parsed = lexm::parse(*source, file);
    lexm::AnalyzedDocument analyzed =
        lexm::analyze(parsed.document, std::move(parsed.diagnostics));
    emit_text_diagnostics(analyzed.diagnostics);

    std::string output;
    if (format == "text") {
        output = lexm::render_text(analyzed, numbered);
    } else if (format == "html") {
        output = lexm::render_html(analyzed);
    } else if (format == "json") {
        output = lexm::render_json(analyzed);
    } else {
        output = lexm::render_markup(analyzed.doc);
    }
    if (!emit_output(output, out_path)) return kExitUsage;
    return lexm::has_errors(analyzed.diagnostics) ? kExitFindings : kExitOk;
}

int run_fill(const std::string& file, const std::string& data_path, bool strict,
             const std::string& out_path) {
    std::optional<std::string> source = read_file(file);
    if (!source) {
        std::cerr << "lexm: cannot read '" << file << "'\n";
        return kExitUsage;
    }
    std::optional<std::string> data = read_file(data_path);
    if (!data) {
        std::cerr << "lexm: cannot read '" << data_path << "'\n";
        return kExitUsage;
    }
    lexm::ParseResult parsed = lexm::parse(*source, file);
    lexm::BindingsResult bindings = lexm::parse_bindings(*data, data_path);
    lexm::FillResult filled =
        lexm::fill(std::move(parsed.document), bindings.bindings, strict);

    std::vector<lexm::Diagnostic> all = std::move(parsed.diagnostics);
    for (lexm::Diagnostic& d : bindings.diagnostics) all.push_back(std::move(d));
    for (lexm::Diagnostic& d : filled.diagnostics) all.push_back(std::move(d));
    lexm::sort_diagnostics(all);
    emit_text_diagnostics(all);

    if (!emit_output(lexm::render_markup(filled.document), out_path)) return kExitUsage;
    return lexm::has_errors(all) ? kExitFindings : kExitOk;
}

int run_diff(const std::string& old_path, const std::string& new_path, bool json) {
    std::optional<lexm::AnalyzedDocument> old_doc = load_and_analyze(old_path);
    if (!old_doc) return kExitUsage;
    std::optional<lexm::AnalyzedDocument> new_doc = load_and_analyze(new_path);
    if (!new_doc) return kExitUsage;

    std::vector<lexm::Diagnostic> all = old_doc->diagnostics;
    all.insert(all.end(), new_doc->diagnostics.begin(), new_doc->diagnostics.end());
    lexm::sort_diagnostics(all);
    emit_text_diagnostics(all);

    lexm::DiffReport report = lexm::diff(*old_doc, *new_doc);
    std::cout << (json ? lexm::render_diff_json(report) : lexm::render_diff_text(report));
    return report.has_changes() ? kExitFindings : kExitOk;
}

int run_extract(const std::vector<std::string>& files, const std::string& type,
                const std::string& label) {
    if (type.empty() == label.empty()) {
        std::cerr << "lexm: extract requires exactly one of --type or --label\n";
        return kExitUsage;
    }
    std::vector<lexm::AnalyzedDocument> docs;
    std::vector<lexm::Diagnostic> all;
    for (const std::string& path : files) {
        std::optional<lexm::AnalyzedDocument> loaded = load_and_analyze(path);
        if (!loaded) return kExitUsage;
        all.insert(all.end(), loaded->diagnostics.begin(), loaded->diagnostics.end());
        docs.push_back(std::move(*loaded));
    }
    lexm::sort_diagnostics(all);
    emit_text_diagnostics(all);

    lexm::Selector selector;
    if (!type.empty()) selector.type = type;
    if (!label.empty()) selector.label = label;
    std::vector<lexm::ExtractedClause> clauses = lexm::extract(docs, selector);
    std::string out;
    for (const lexm::ExtractedClause& clause : clauses) {
        if (!out.empty()) out += "\n";
        out += "% " + clause.source_path + "\n" + clause.fragment + "\n";
    }
    std::cout << out;
    return lexm::has_errors(all) ? kExitFindings : kExitOk;
}

int run_stats(const std::vector<std::string>& files, bool json) {
    std::vector<lexm::AnalyzedDocument> docs;
    std::vector<lexm::Diagnostic> all;
    for (const std::string& path : files) {
        std::optional<lexm::AnalyzedDocument> loaded = load_and_analyze(path);
        if (!loaded) return kExitUsage;
        all.insert(all.end(), loaded->diagnostics.begin(), loaded->diagnostics.end());
        docs.push_back(std::move(*loaded));
    }
    lexm::sort_diagnostics(all);
    emit_text_diagnostics(all);

    lexm::CorpusStats stats = lexm::stats(docs);
    std::cout << (json ? lexm::render_stats_json(stats) : lexm::render_stats_text(stats));
    return lexm::has_errors(all) ? kExitFindings : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolchain for the lexm legal drafting markup"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "parse and analyze, print diagnostics");
    std::vector<std::string> check_files;
    bool check_fix = false, check_json = false;
    check->add_option("files", check_files, "markup files")->required();
    check->add_flag("--fix", check_fix, "rewrite files, applying fixable findings");
    check->add_flag("--json", check_json, "diagnostics as JSON on stdout");

    auto* render = app.add_subcommand("render", "emit a published form");
    std::string render_format, render_out, render_file;
    bool render_numbered = false;
    render->add_option("--format", render_format, "output form")
        ->required()
        ->check(CLI::IsMember({"text", "html", "json", "markup"}));
    render->add_flag("--numbered", render_numbered, "number section headings (text form)");
    render->add_option("-o,--output", render_out, "write to file instead of stdout");
    render->add_option("file", render_file, "markup file")->required();

    auto* fill = app.add_subcommand("fill", "substitute template variables");
    std::string fill_data, fill_out, fill_file;
    bool fill_strict = false;
    fill->add_option("--data", fill_data, "bindings file (name = value lines)")->required();
    fill->add_flag("--strict", fill_strict, "unbound variables are errors");
    fill->add_option("-o,--output", fill_out, "write to file instead of stdout");
    fill->add_option("file", fill_file, "markup file")->required();

    auto* diff = app.add_subcommand("diff", "clause-level structural diff");
    std::string diff_old, diff_new;
    bool diff_json = false;
    diff->add_flag("--json", diff_json, "report as JSON");
    diff->add_option("old", diff_old, "old version")->required();
    diff->add_option("new", diff_new, "new version")->required();

    auto* extract = app.add_subcommand("extract", "pull clauses by type or label");
    std::vector<std::string> extract_files;
    std::string extract_type, extract_label;
    extract->add_option("--type", extract_type, "clause type to select");
    extract->add_option("--label", extract_label, "label or title to select");
    extract->add_option("files", extract_files, "markup files")->required();

    auto* stats = app.add_subcommand("stats", "corpus analytics");
    std::vector<std::string> stats_files;
    bool stats_json = false;
    stats->add_flag("--json", stats_json, "stats as JSON");
    stats->add_option("files", stats_files, "markup files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (check->parsed()) return run_check(check_files, check_fix, check_json);
    if (render->parsed())
        return run_render(render_file, render_format, render_numbered, render_out);
    if (fill->parsed()) return run_fill(fill_file, fill_data, fill_strict, fill_out);
    if (diff->parsed()) return run_diff(diff_old, diff_new, diff_json);
    if (extract->parsed()) return run_extract(extract_files, extract_type, extract_label);
    if (stats->parsed()) return run_stats(stats_files, stats_json);
    return kExitUsage;
}
