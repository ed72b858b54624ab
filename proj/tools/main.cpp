#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cecoh/report.hpp"

namespace {

using namespace cecoh;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitJacobi = 3;
constexpr int kExitValidation = 4;
constexpr int kExitUnknown = 5;

AlgebraSpec load_spec(const std::string& source) {
    if (!source.empty() && source.front() == '@')
        return registry(source.substr(1));
    std::ifstream in(source);
    if (!in)
        throw UnknownNameError("cannot open file '" + source + "'");
    std::ostringstream text;
    text << in.rdbuf();
    std::string name = source;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos)
        name = name.substr(0, dot);
    return parse_spec(text.str(), name);
}

BettiVector parse_betti(const std::string& text) {
    BettiVector out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            throw ValidationError("empty entry in Betti list '" + text + "'");
        out.push_back(std::stol(item));
        if (out.back() < 0)
            throw ValidationError("negative Betti number in '" + text + "'");
    }
    if (out.empty())
        throw ValidationError("empty Betti list");
    return out;
}

/// Action file: blocks introduced by 'degree k', one matrix row per line,
/// entries as rationals. Degrees without a block act as the identity.
AutomorphismAction parse_action_file(const std::string& path, const BettiVector& betti) {
    std::ifstream in(path);
    if (!in)
        throw UnknownNameError("cannot open action file '" + path + "'");
    std::vector<std::vector<std::vector<Rational>>> blocks(betti.size());
    std::vector<bool> given(betti.size(), false);
    int current = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream row(line);
        std::string first;
        if (!(row >> first))
            continue;
        if (first == "degree") {
            int k;
            if (!(row >> k) || k < 0 || k >= static_cast<int>(betti.size()))
                throw ParseError(lineno, 1, "bad degree header in action file");
            current = k;
            given[static_cast<std::size_t>(k)] = true;
            continue;
        }
        if (current < 0)
            throw ParseError(lineno, 1, "matrix row before any 'degree k' header");
        std::vector<Rational> entries;
        entries.push_back(parse_rational(first));
        std::string tok;
        while (row >> tok)
            entries.push_back(parse_rational(tok));
        blocks[static_cast<std::size_t>(current)].push_back(std::move(entries));
    }
    AutomorphismAction action;
    for (std::size_t k = 0; k < betti.size(); ++k) {
        int b = static_cast<int>(betti[k]);
        if (!given[k]) {
            action.on_degree.push_back(QMatrix::identity(b));
            continue;
        }
        const auto& rows = blocks[k];
        if (static_cast<int>(rows.size()) != b)
            throw ValidationError("degree " + std::to_string(k) + " block has " +
                                  std::to_string(rows.size()) + " rows, expected " +
                                  std::to_string(b));
        QMatrix m(b, b);
        for (int i = 0; i < b; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != b)
                throw ValidationError("ragged row in degree " + std::to_string(k) + " block");
            for (int j = 0; j < b; ++j)
                m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        action.on_degree.push_back(std::move(m));
    }
    return action;
}

std::string betti_to_string(const BettiVector& b) {
    std::string s = "[";
    for (std::size_t i = 0; i < b.size(); ++i)
        s += (i ? ", " : "") + std::to_string(b[i]);
    return s + "]";
}

int run(int argc, char** argv) {
    CLI::App app{"exact Chevalley-Eilenberg cohomology engine"};
    app.require_subcommand(1);

    std::string source;
    bool machine = false;
    auto* cmd_report = app.add_subcommand("report", "full analysis of an algebra");
    cmd_report->add_option("input", source, "spec file or @registry-name")->required();
    cmd_report->add_flag("--machine", machine, "comment-free, byte-stable output");

    std::string betti_source;
    auto* cmd_betti = app.add_subcommand("betti", "Betti numbers only");
    cmd_betti->add_option("input", betti_source, "spec file or @registry-name")->required();

    std::string lef_source;
    auto* cmd_lef = app.add_subcommand("lefschetz", "Lefschetz maps of the declared structure");
    cmd_lef->add_option("input", lef_source, "spec file or @registry-name")->required();

    std::string massey_source;
    int max_degree = -1;
    auto* cmd_massey = app.add_subcommand("massey", "triple Massey obstruction scan");
    cmd_massey->add_option("input", massey_source, "spec file or @registry-name")->required();
    cmd_massey->add_option("--max-degree", max_degree, "cap on the product degree");

    std::string ambient, sub;
    int codim = 0;
    auto* cmd_blowup = app.add_subcommand("blowup", "Betti numbers of a blow-up");
    cmd_blowup->add_option("--ambient", ambient, "Betti numbers of X, comma list")->required();
    cmd_blowup->add_option("--sub", sub, "Betti numbers of Y, comma list")->required();
    cmd_blowup->add_option("--codim", codim, "even codimension of Y in X")->required();

    std::string mt_betti, action_file;
    auto* cmd_mt = app.add_subcommand("mapping-torus", "Betti numbers of a mapping torus");
    cmd_mt->add_option("betti", mt_betti, "Betti numbers, comma list")->required();
    cmd_mt->add_option("--action", action_file, "per-degree action matrices")->required();

    bool all = false;
    auto* cmd_corpus = app.add_subcommand("corpus", "built-in example corpus");
    cmd_corpus->add_flag("--all", all, "render the verdict table for the whole corpus");

    CLI11_PARSE(app, argc, argv);

    if (cmd_report->parsed()) {
        AnalysisReport rep = analyze(load_spec(source));
        std::cout << render_report(rep, machine);
        return kExitOk;
    }
    if (cmd_betti->parsed()) {
        AnalyzeOptions options;
        options.run_massey_scan = false;
        AnalysisReport rep = analyze(load_spec(betti_source), options);
        std::cout << "betti = ";
        std::cout << "[";
        for (std::size_t i = 0; i < rep.betti.size(); ++i)
            std::cout << (i ? ", " : "") << rep.betti[i];
        std::cout << "]\n";
        return kExitOk;
    }
    if (cmd_lef->parsed()) {
        AnalyzeOptions options;
        options.run_massey_scan = false;
        AnalysisReport rep = analyze(load_spec(lef_source), options);
        const LefschetzReport* lef = nullptr;
        if (rep.structure == StructureKind::symplectic)
            lef = &*rep.symplectic;
        else if (rep.structure == StructureKind::cosymplectic && rep.k_cosymplectic)
            lef = &*rep.k_cosymplectic;
        if (!lef)
            throw ValidationError("no structure declared (needs omega, plus eta when odd)");
        for (const auto& m : lef->maps)
            std::cout << "L[" << m.k << "]: rank " << m.rank << ", src " << m.src << ", tgt "
                      << m.tgt << ", iso " << (m.bijective ? "yes" : "no") << "\n";
        std::cout << "lefschetz_type = " << (lef->lefschetz_type ? "yes" : "no") << "\n";
        std::cout << "lefschetz_property = " << (lef->lefschetz_property ? "yes" : "no") << "\n";
        if (rep.one_lefschetz)
            std::cout << "one_lefschetz = " << (*rep.one_lefschetz ? "yes" : "no") << "\n";
        return kExitOk;
    }
    if (cmd_massey->parsed()) {
        AnalyzeOptions options;
        options.massey_max_degree = max_degree;
        AnalysisReport rep = analyze(load_spec(massey_source), options);
        std::cout << "massey_scan_max_degree = " << rep.massey_max_degree << "\n";
        std::cout << "massey_count = " << rep.massey_lines.size() << "\n";
        for (std::size_t i = 0; i < rep.massey_lines.size(); ++i)
            std::cout << "massey[" << i << "] = " << rep.massey_lines[i] << "\n";
        return kExitOk;
    }
    if (cmd_blowup->parsed()) {
        BettiVector out = blowup_betti(parse_betti(ambient), parse_betti(sub), codim);
        std::cout << "betti = " << betti_to_string(out) << "\n";
        return kExitOk;
    }
    if (cmd_mt->parsed()) {
        BettiVector b = parse_betti(mt_betti);
        AutomorphismAction action = parse_action_file(action_file, b);
        BettiVector out = mapping_torus_betti(b, action);
        std::cout << "betti = " << betti_to_string(out) << "\n";
        std::cout << "euler = " << euler_characteristic(out) << "\n";
        return kExitOk;
    }
    if (cmd_corpus->parsed()) {
        if (all) {
            std::cout << render_corpus_table();
        } else {
            for (const auto& name : registry_names())
                std::cout << name << "\n";
        }
        return kExitOk;
    }
    return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const FormParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const JacobiError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitJacobi;
    } catch (const DSquaredFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitJacobi;
    } catch (const UnknownNameError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
