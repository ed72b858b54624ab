#include "cecoh/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace cecoh {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

int column_of(std::string_view line, std::string_view tail) {
    return static_cast<int>(tail.data() - line.data()) + 1;
}

int parse_generator_token(std::string_view tok, int dim, int lineno, int col) {
    if (tok.size() < 2 || tok[0] != 'e')
        throw ParseError(lineno, col, "expected a generator like e3, got '" + std::string(tok) + "'");
    int idx = 0;
    for (char ch : tok.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError(lineno, col, "bad generator '" + std::string(tok) + "'");
        idx = idx * 10 + (ch - '0');
    }
    if (idx < 1 || idx > dim)
        throw ParseError(lineno, col, "generator index " + std::to_string(idx) +
                         " outside dimension " + std::to_string(dim));
    return idx;
}

Form parse_form_at(int dim, std::string_view text, int lineno, int col_base) {
    try {
        return parse_form(dim, text);
    } catch (const FormParseError& e) {
        throw ParseError(lineno, col_base + static_cast<int>(e.pos), e.what());
    }
}

}  // namespace

AlgebraSpec parse_spec(std::string_view text, std::string name) {
    AlgebraSpec spec;
    spec.name = std::move(name);
    bool saw_dim = false;
    bool saw_diff = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    std::vector<bool> d_given;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::string_view body = trim(line);
        if (body.empty())
            continue;
        int col = column_of(line, body);
        if (!saw_dim) {
            if (body.substr(0, 4) != "dim " && body != "dim")
                throw ParseError(lineno, col, "the first line must be 'dim N'");
            std::string_view rest = trim(body.substr(3));
            int d = 0;
            if (rest.empty())
                throw ParseError(lineno, col, "missing dimension");
            for (char ch : rest) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw ParseError(lineno, column_of(line, rest), "bad dimension '" +
                                     std::string(rest) + "'");
                d = d * 10 + (ch - '0');
            }
            if (d < 1 || d > 9)
                throw ParseError(lineno, column_of(line, rest),
                                 "dimension must be between 1 and 9 (the textual syntax "
                                 "uses single-digit generator indices)");
            spec.dim = d;
            d_given.assign(static_cast<std::size_t>(d) + 1, false);
            saw_dim = true;
            continue;
        }
        if (body.substr(0, 4) == "dim ")
            throw ParseError(lineno, col, "duplicate dim line");
        if (body.substr(0, 8) == "bracket ") {
            if (saw_diff)
                throw ParseError(lineno, col, "bracket lines cannot be mixed with d lines");
            spec.uses_brackets = true;
            std::string_view rest = trim(body.substr(8));
            if (rest.empty() || rest.front() != '[')
                throw ParseError(lineno, column_of(line, rest), "expected '[ei,ej]'");
            auto close = rest.find(']');
            if (close == std::string_view::npos)
                throw ParseError(lineno, column_of(line, rest), "missing ']'");
            std::string_view pair = rest.substr(1, close - 1);
            auto comma = pair.find(',');
            if (comma == std::string_view::npos)
                throw ParseError(lineno, column_of(line, rest), "expected two generators in the bracket");
            int i = parse_generator_token(trim(pair.substr(0, comma)), spec.dim, lineno,
                                          column_of(line, rest));
            int j = parse_generator_token(trim(pair.substr(comma + 1)), spec.dim, lineno,
                                          column_of(line, rest));
            if (i == j)
                throw ParseError(lineno, column_of(line, rest), "bracket [ei,ei] is always zero");
            std::string_view tail = trim(rest.substr(close + 1));
            if (tail.empty() || tail.front() != '=')
                throw ParseError(lineno, column_of(line, tail.empty() ? rest : tail),
                                 "expected '=' after the bracket");
            std::string_view value = trim(tail.substr(1));
            Form rhs = parse_form_at(spec.dim, value, lineno, column_of(line, value));
            if (!rhs.is_zero() && (!rhs.is_homogeneous() || rhs.degree() != 1))
                throw ParseError(lineno, column_of(line, value),
                                 "a bracket value must be a linear combination of generators");
            AlgebraSpec::BracketLine bl;
            bl.i = i;
            bl.j = j;
            for (const auto& [m, c] : rhs.terms())
                bl.rhs.emplace_back(m.indices()[0], c);
            for (const auto& existing : spec.brackets)
                if ((existing.i == i && existing.j == j) || (existing.i == j && existing.j == i))
                    throw ParseError(lineno, col, "duplicate bracket line for [e" +
                                     std::to_string(i) + ",e" + std::to_string(j) + "]");
            spec.brackets.push_back(std::move(bl));
            continue;
        }
        if (body.substr(0, 2) == "d ") {
            if (spec.uses_brackets)
                throw ParseError(lineno, col, "d lines cannot be mixed with bracket lines");
            saw_diff = true;
            std::string_view rest = trim(body.substr(2));
            auto eq = rest.find('=');
            if (eq == std::string_view::npos)
                throw ParseError(lineno, column_of(line, rest), "expected 'd ei = <form>'");
            int gen = parse_generator_token(trim(rest.substr(0, eq)), spec.dim, lineno,
                                            column_of(line, rest));
            std::string_view value = trim(rest.substr(eq + 1));
            Form f = parse_form_at(spec.dim, value, lineno, column_of(line, value));
            if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != 2))
                throw ParseError(lineno, column_of(line, value),
                                 "d of a generator must be a 2-form");
            if (d_given[static_cast<std::size_t>(gen)])
                throw ParseError(lineno, col, "duplicate differential for e" + std::to_string(gen));
            d_given[static_cast<std::size_t>(gen)] = true;
            spec.differentials.emplace_back(gen, std::move(f));
            continue;
        }
        if (body.substr(0, 3) == "eta" && (body.size() == 3 || body[3] == ' ' || body[3] == '=')) {
            std::string_view rest = trim(body.substr(3));
            if (rest.empty() || rest.front() != '=')
                throw ParseError(lineno, col, "expected 'eta = <form>'");
            if (spec.eta)
                throw ParseError(lineno, col, "duplicate eta line");
            std::string_view value = trim(rest.substr(1));
            spec.eta = parse_form_at(spec.dim, value, lineno, column_of(line, value));
            continue;
        }
        if (body.substr(0, 5) == "omega" &&
            (body.size() == 5 || body[5] == ' ' || body[5] == '=')) {
            std::string_view rest = trim(body.substr(5));
            if (rest.empty() || rest.front() != '=')
                throw ParseError(lineno, col, "expected 'omega = <form>'");
            if (spec.omega)
                throw ParseError(lineno, col, "duplicate omega line");
            std::string_view value = trim(rest.substr(1));
            spec.omega = parse_form_at(spec.dim, value, lineno, column_of(line, value));
            continue;
        }
        if (body.substr(0, 5) == "flag ") {
            std::string_view flag = trim(body.substr(5));
            if (flag == "nilpotent")
                spec.flag_nilpotent = true;
            else if (flag == "completely_solvable")
                spec.flag_completely_solvable = true;
            else if (flag == "unimodular")
                spec.flag_unimodular = true;
            else
                throw ParseError(lineno, column_of(line, flag), "unknown flag '" +
                                 std::string(flag) + "'");
            continue;
        }
        throw ParseError(lineno, col, "unrecognized line");
    }
    if (!saw_dim)
        throw ParseError(lineno + 1, 1, "missing 'dim N' line");
    return spec;
}

Cdga build_cdga(const AlgebraSpec& spec) {
    Cdga c = [&spec]() {
        if (spec.uses_brackets) {
            LieAlgebra g(spec.dim);
            for (const auto& bl : spec.brackets)
                for (const auto& [k, coeff] : bl.rhs)
                    g.add_bracket(bl.i, bl.j, k, coeff);
            return ce_differential(g);  // throws JacobiError on failure
        }
        std::vector<Form> dgen(static_cast<std::size_t>(spec.dim), Form(spec.dim));
        for (const auto& [gen, f] : spec.differentials)
            dgen[static_cast<std::size_t>(gen) - 1] = f;
        Cdga built(spec.dim, std::move(dgen));
        if (auto w = check_d_squared(built))
            throw DSquaredFailure(*w);
        return built;
    }();
    LieAlgebra g = lie_from_cdga(c);
    if (spec.flag_nilpotent && !g.is_nilpotent())
        throw ValidationError("flag nilpotent contradicts the bracket");
    if (spec.flag_unimodular && !g.is_unimodular())
        throw ValidationError("flag unimodular contradicts the bracket");
    return c;
}

namespace {

std::string torus_text(int n) {
    std::ostringstream out;
    out << "# abelian algebra: the " << n << "-torus model\n";
    out << "dim " << n << "\n";
    int pairs = n / 2;
    std::ostringstream omega;
    for (int p = 0; p < pairs; ++p) {
        if (p)
            omega << " + ";
        omega << "e" << (2 * p + 1) << (2 * p + 2);
    }
    if (n % 2 == 1) {
        out << "eta = e" << n << "\n";
        if (pairs > 0)
            out << "omega = " << omega.str() << "\n";
    } else {
        out << "omega = " << omega.str() << "\n";
    }
    out << "flag nilpotent\nflag unimodular\n";
    return out.str();
}

struct RegistryEntry {
    const char* name;
    const char* text;
};

// The 8-dimensional Benson-Gordon algebra bg is deliberately absent: its
// structure constants are not part of the corpus sources, so that entry
// stays a documented stub rather than a guess.
const RegistryEntry kEntries[] = {
    {"heisenberg",
     "# 3-dimensional Heisenberg algebra\n"
     "dim 3\n"
     "d e3 = e12\n"
     "flag nilpotent\n"},
    {"kt",
     "# Kodaira-Thurston model: Heisenberg x circle\n"
     "dim 4\n"
     "d e3 = e12\n"
     "omega = e14 + e23\n"
     "flag nilpotent\n"},
    {"kt_x_s1",
     "dim 5\n"
     "d e3 = e12\n"
     "eta = e5\n"
     "omega = e14 + e23\n"
     "flag nilpotent\n"},
    {"kt_x_kt",
     "dim 8\n"
     "d e3 = e12\n"
     "d e7 = e56\n"
     "omega = e14 + e23 + e58 + e67\n"
     "flag nilpotent\n"},
    {"kt_x_kt_x_s1",
     "dim 9\n"
     "d e3 = e12\n"
     "d e7 = e56\n"
     "eta = e9\n"
     "omega = e14 + e23 + e58 + e67\n"
     "flag nilpotent\n"},
    {"e4",
     "# 4-dimensional filiform nilmanifold model\n"
     "dim 4\n"
     "d e3 = e12\n"
     "d e4 = e13\n"
     "omega = e14 + e23\n"
     "flag nilpotent\n"},
    {"e4_x_s1",
     "dim 5\n"
     "d e3 = e12\n"
     "d e4 = e13\n"
     "eta = e5\n"
     "omega = e14 + e23\n"
     "flag nilpotent\n"},
    {"g6_78",
     "# completely solvable symplectic algebra g6.78\n"
     "dim 6\n"
     "d e1 = e25 - e16\n"
     "d e2 = e45\n"
     "d e3 = e24 + e36 + e46\n"
     "d e4 = e46\n"
     "d e5 = -e56\n"
     "omega = e14 + e26 + e35\n"
     "flag completely_solvable\n"
     "flag unimodular\n"},
    {"g6_78_x_s1",
     "dim 7\n"
     "d e1 = e25 - e16\n"
     "d e2 = e45\n"
     "d e3 = e24 + e36 + e46\n"
     "d e4 = e46\n"
     "d e5 = -e56\n"
     "eta = e7\n"
     "omega = e14 + e26 + e35\n"
     "flag completely_solvable\n"
     "flag unimodular\n"},
    {"nil5_cosymp",
     "# 5-dimensional nilpotent cosymplectic algebra\n"
     "dim 5\n"
     "bracket [e1,e2] = -1 e4\n"
     "bracket [e1,e5] = -1 e3\n"
     "eta = e5\n"
     "omega = e13 - e24\n"
     "flag nilpotent\n"},
    {"solv5",
     "# 5-dimensional completely solvable cosymplectic algebra\n"
     "dim 5\n"
     "d e1 = -e15\n"
     "d e2 = e25\n"
     "d e3 = -e15 - e35\n"
     "d e4 = -e25 + e45\n"
     "eta = e5\n"
     "omega = e14 + e23\n"
     "flag completely_solvable\n"
     "flag unimodular\n"},
    {"h7",
     "# 6-dimensional nilpotent algebra h7 with an almost Kaehler structure\n"
     "dim 6\n"
     "bracket [e1,e2] = -1 e4\n"
     "bracket [e1,e3] = -1 e5\n"
     "bracket [e2,e3] = -1 e6\n"
     "omega = -e16 + e25 + 2 e34\n"
     "flag nilpotent\n"},
    {"g7",
     "# solvable extension h7 +_D R by the block rotation derivation;\n"
     "# not completely solvable, so the model cohomology carries a caveat\n"
     "dim 7\n"
     "d e1 = e27\n"
     "d e2 = -e17\n"
     "d e4 = e12\n"
     "d e5 = e13 + e67\n"
     "d e6 = e23 - e57\n"
     "eta = e7\n"
     "omega = -e16 + e25 + 2 e34\n"
     "flag unimodular\n"},
};

}  // namespace

AlgebraSpec registry(std::string_view name) {
    if (name.substr(0, 6) == "torus_") {
        std::string_view num = name.substr(6);
        if (num.size() == 1 && num[0] >= '2' && num[0] <= '9') {
            int n = num[0] - '0';
            return parse_spec(torus_text(n), std::string(name));
        }
    }
    for (const auto& e : kEntries)
        if (name == e.name) {
            AlgebraSpec spec = parse_spec(e.text, std::string(name));
            if (name == "g7") {
                // Mapping torus of the h7 nilmanifold under the quarter-turn
                // substitution e1 -> -e2, e2 -> e1, e5 -> -e6, e6 -> e5.
                AlgebraSpec::MappingTorusOf mt;
                mt.base = "h7";
                mt.substitution_images = {
                    -Form::generator(6, 2), Form::generator(6, 1), Form::generator(6, 3),
                    Form::generator(6, 4),  -Form::generator(6, 6), Form::generator(6, 5)};
                spec.mapping_torus = std::move(mt);
            }
            return spec;
        }
    std::string msg = "unknown registry entry '" + std::string(name) + "'; known names:";
    for (const auto& n : registry_names())
        msg += " " + n;
    throw UnknownNameError(msg);
}

std::vector<std::string> registry_names() {
    std::vector<std::string> names;
    for (int n = 2; n <= 9; ++n)
        names.push_back("torus_" + std::to_string(n));
    for (const auto& e : kEntries)
        names.emplace_back(e.name);
    return names;
}

}  // namespace cecoh
