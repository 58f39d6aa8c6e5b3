#pragma once

// Command-line front end. run() is a pure function of (argv, stdin) apart
// from `render -o`, which writes a file.
//
// Exit codes: 0 ok, 1 not equivalent, 2 parse/usage error, 3 kernel
// violation, 4 unwritable output, 5 quantified input to `table`,
// 6 signature too large for `equiv`.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "begriff.hpp"

namespace begriff::cli {

enum Exit : int {
    kOk = 0,
    kNotEquivalent = 1,
    kParseError = 2,
    kKernelError = 3,
    kUnwritable = 4,
    kQuantified = 5,
    kTooLarge = 6,
};

namespace detail {

// Carries an exit code out of a command body.
struct Failure {
    int code;
};

enum class Format { MODERN, LBS, KERNEL };

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// 1-based line and column (in code points) of a byte offset.
inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == '\n') {
            ++line;
            col = 1;
        } else if ((c & 0xC0) != 0x80) {
            ++col;
        }
    }
    return {line, col};
}

inline void report_parse_error(const ParseError& e, const std::string& text, std::ostream& err) {
    auto [line, col] = line_column(text, e.span().start);
    err << "error: " << line << ":" << col << ": " << e.summary() << "\n";
    std::size_t begin = 0;
    for (std::size_t l = 1; l < line; ++l) begin = text.find('\n', begin) + 1;
    std::size_t end = text.find('\n', begin);
    err << text.substr(begin, end == std::string::npos ? std::string::npos : end - begin) << "\n";
    err << std::string(col - 1, ' ') << "^\n";
}

class Session {
public:
    Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    std::string read_input(const std::vector<std::string>& positional, const std::string& file) {
        if (!positional.empty() && !file.empty()) usage("give the formula either as an argument or with --file");
        if (!positional.empty()) return positional.front();
        if (!file.empty()) return read_file(file);
        return std::string(std::istreambuf_iterator<char>(in_), {});
    }

    std::string read_file(const std::string& path) {
        std::ifstream f(path, std::ios::binary);
        if (!f) usage("cannot read '" + path + "'");
        return std::string(std::istreambuf_iterator<char>(f), {});
    }

    [[noreturn]] void usage(const std::string& message) {
        err_ << "error: " << message << "\n";
        throw Failure{kParseError};
    }

    Judgment parse(const std::string& raw, Format format) {
        const std::string text = trim(raw);
        try {
            return format == Format::LBS ? parse_lbs(text) : parse_modern(text);
        } catch (const ParseError& e) {
            report_parse_error(e, text, err_);
            throw Failure{kParseError};
        } catch (const Error& e) {
            err_ << "error: " << e.what() << "\n";
            throw Failure{kParseError};
        }
    }

    std::string lbs(const Judgment& j) {
        try {
            return print_lbs(j);
        } catch (const KernelError& e) {
            err_ << "error: " << e.what() << "\n";
            throw Failure{kKernelError};
        }
    }

    std::ostream& out() { return out_; }
    std::ostream& err() { return err_; }

private:
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
};

inline const std::map<std::string, Format> kInputFormats{{"modern", Format::MODERN}, {"lbs", Format::LBS}};
inline const std::map<std::string, Format> kOutputFormats{
    {"modern", Format::MODERN}, {"lbs", Format::LBS}, {"kernel", Format::KERNEL}};
inline const std::map<std::string, EncodingMode> kModes{{"faithful", EncodingMode::FAITHFUL},
                                                        {"classical", EncodingMode::CLASSICAL}};
inline const std::map<std::string, BlockStyle> kBlocks{{"nested", BlockStyle::NESTED},
                                                       {"grouped", BlockStyle::GROUPED}};
inline const std::map<std::string, Backend> kBackends{
    {"unicode", Backend::UNICODE}, {"ascii", Backend::ASCII}, {"svg", Backend::SVG}};
inline const std::map<std::string, ValueStyle> kValues{{"wf", ValueStyle::WF}, {"tf", ValueStyle::TF}};

template <class T>
CLI::Option* add_choice(CLI::App* app, const std::string& name, T& target, const std::map<std::string, T>& choices,
                        const std::string& help) {
    return app->add_option(name, target, help)->transform(CLI::CheckedTransformer(choices, CLI::ignore_case));
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    using namespace detail;
    Session session(in, out, err);

    CLI::App app{"Translate, check and draw formulas in Frege's Begriffsschrift", "begriff"};
    app.set_version_flag("--version", std::string("begriff ") + kVersion);
    app.require_subcommand(1);

    std::vector<std::string> positional;
    std::string file;
    Format from = Format::MODERN;
    auto add_input = [&](CLI::App* cmd, bool with_from) {
        cmd->add_option("input", positional, "formula text (default: standard input)");
        cmd->add_option("--file", file, "read the formula from a file");
        if (with_from) add_choice(cmd, "--from", from, kInputFormats, "input notation: modern or lbs");
    };

    // parse
    auto* parse_cmd = app.add_subcommand("parse", "parse and print back in canonical form");
    add_input(parse_cmd, false);
    add_choice(parse_cmd, "--format", from, kInputFormats, "notation: modern or lbs");

    // translate
    Format to = Format::KERNEL;
    EncodingMode mode = EncodingMode::CLASSICAL;
    BlockStyle blocks = BlockStyle::NESTED;
    auto* translate_cmd = app.add_subcommand("translate", "convert between notations");
    add_input(translate_cmd, true);
    add_choice(translate_cmd, "--to", to, kOutputFormats, "output: modern, lbs or kernel");
    add_choice(translate_cmd, "--mode", mode, kModes, "encoding of guarded exists: faithful or classical");
    add_choice(translate_cmd, "--blocks", blocks, kBlocks, "multi-letter blocks: nested or grouped");

    // render
    EncodingMode render_mode = EncodingMode::FAITHFUL;
    BlockStyle render_blocks = BlockStyle::GROUPED;
    RenderOptions render_opts;
    std::string output_path;
    auto* render_cmd = app.add_subcommand("render", "draw the Begriffsschrift diagram");
    add_input(render_cmd, true);
    add_choice(render_cmd, "--backend", render_opts.backend, kBackends, "unicode, ascii or svg");
    add_choice(render_cmd, "--mode", render_mode, kModes, "encoding of guarded exists: faithful or classical");
    add_choice(render_cmd, "--blocks", render_blocks, kBlocks, "multi-letter blocks: nested or grouped");
    render_cmd->add_option("--cell-width", render_opts.cell_width_px, "SVG cell width in px")
        ->check(CLI::PositiveNumber);
    render_cmd->add_option("--row-height", render_opts.row_height_px, "SVG row height in px")
        ->check(CLI::PositiveNumber);
    render_cmd->add_option("--stroke-width", render_opts.stroke_width_px, "SVG stroke width in px")
        ->check(CLI::PositiveNumber);
    render_cmd->add_option("-o,--output", output_path, "write to a file instead of standard output");

    // table
    ValueStyle values = ValueStyle::WF;
    auto* table_cmd = app.add_subcommand("table", "print the truth table of a propositional formula");
    add_input(table_cmd, true);
    add_choice(table_cmd, "--values", values, kValues, "truth values: wf or tf");

    // equiv
    int max_domain = 3;
    auto* equiv_cmd = app.add_subcommand("equiv", "check two formulas for equivalence");
    equiv_cmd->add_option("formulas", positional, "two formulas (default: two lines of standard input)")
        ->expected(0, 2);
    equiv_cmd->add_option("--file", file, "read two formulas, one per line, from a file");
    add_choice(equiv_cmd, "--from", from, kInputFormats, "input notation: modern or lbs");
    equiv_cmd->add_option("--max-domain", max_domain, "largest domain size for quantified formulas")
        ->check(CLI::PositiveNumber);
    add_choice(equiv_cmd, "--values", values, kValues, "truth values: wf or tf");

    // negate
    Format negate_to = Format::MODERN;
    auto* negate_cmd = app.add_subcommand("negate", "negate by flipping quantifiers and comparisons");
    add_input(negate_cmd, true);
    add_choice(negate_cmd, "--to", negate_to, kOutputFormats, "output: modern, lbs or kernel");
    add_choice(negate_cmd, "--mode", mode, kModes, "encoding used by --to kernel");

    std::vector<std::string> argv_storage{"begriff"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (parse_cmd->parsed()) {
            Judgment j = session.parse(session.read_input(positional, file), from);
            out << (from == Format::LBS ? session.lbs(j) : print_modern(j)) << "\n";
            return kOk;
        }

        if (translate_cmd->parsed()) {
            Judgment j = session.parse(session.read_input(positional, file), from);
            switch (to) {
            case Format::KERNEL: out << session.lbs(desugar(j, mode, blocks)) << "\n"; break;
            case Format::MODERN: out << print_modern(resugar(desugar(j, mode, blocks), mode)) << "\n"; break;
            case Format::LBS:
                try {
                    out << print_lbs(j) << "\n";
                } catch (const KernelError&) {
                    err << "note: input is not in kernel form; desugared ("
                        << (mode == EncodingMode::FAITHFUL ? "faithful" : "classical") << ")\n";
                    out << session.lbs(desugar(j, mode, blocks)) << "\n";
                }
                break;
            }
            return kOk;
        }

        if (render_cmd->parsed()) {
            Judgment j = session.parse(session.read_input(positional, file), from);
            Diagram d;
            try {
                d = layout(desugar(j, render_mode, render_blocks));
            } catch (const KernelError& e) {
                err << "error: " << e.what() << "\n";
                return kKernelError;
            }
            std::string text = render(d, render_opts);
            if (output_path.empty()) {
                out << text;
                return kOk;
            }
            std::ofstream f(output_path, std::ios::binary);
            if (!f || !(f << text) || !f.flush()) {
                err << "error: cannot write '" << output_path << "'\n";
                return kUnwritable;
            }
            return kOk;
        }

        if (table_cmd->parsed()) {
            Judgment j = session.parse(session.read_input(positional, file), from);
            try {
                out << format_truth_table(j.body, values);
            } catch (const QuantifiedInput& e) {
                err << "error: " << e.what() << "\n";
                return kQuantified;
            }
            return kOk;
        }

        if (equiv_cmd->parsed()) {
            std::vector<std::string> texts = positional;
            if (!file.empty() && !texts.empty()) session.usage("give the formulas either as arguments or with --file");
            if (texts.empty()) {
                std::istringstream lines(file.empty() ? session.read_input({}, {}) : session.read_file(file));
                for (std::string line; std::getline(lines, line);)
                    if (!trim(line).empty()) texts.push_back(line);
            }
            if (texts.size() != 2) session.usage("equiv needs exactly two formulas");
            Formula a = session.parse(texts[0], from).body;
            Formula b = session.parse(texts[1], from).body;

            bool propositional = true;
            try {
                proposition_letters(a);
                proposition_letters(b);
            } catch (const QuantifiedInput&) {
                propositional = false;
            }
            if (propositional) {
                if (auto cex = propositional_counterexample(a, b)) {
                    std::vector<std::string> order = proposition_letters(a);
                    for (auto& v : proposition_letters(b))
                        if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
                    out << "NOT EQUIVALENT (counterexample: " << format_assignment(order, *cex, values) << ")\n";
                    return kNotEquivalent;
                }
                out << "EQUIVALENT\n";
                return kOk;
            }
            try {
                if (auto cex = bounded_counterexample(a, b, max_domain)) {
                    out << "NOT EQUIVALENT (counterexample: "
                        << format_counterexample(*cex, signature_of({a, b}), values) << ")\n";
                    return kNotEquivalent;
                }
            } catch (const SignatureTooLarge& e) {
                err << "error: " << e.what() << "\n";
                return kTooLarge;
            }
            out << "EQUIVALENT UP TO DOMAIN " << max_domain << "\n";
            return kOk;
        }

        if (negate_cmd->parsed()) {
            Judgment j = negate(session.parse(session.read_input(positional, file), from));
            switch (negate_to) {
            case Format::MODERN: out << print_modern(j) << "\n"; break;
            case Format::LBS: out << session.lbs(j) << "\n"; break;
            case Format::KERNEL: out << session.lbs(desugar(j, mode)) << "\n"; break;
            }
            return kOk;
        }
    } catch (const Failure& f) {
        return f.code;
    }
    return kParseError;
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, in, out, err);
}

}  // namespace begriff::cli
