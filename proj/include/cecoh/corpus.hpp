#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cecoh/cdga.hpp"
#include "cecoh/form.hpp"

namespace cecoh {

/// Algebra description as read from a file or the registry. Definition lines
/// are either bracket lines or differential lines, never both in one spec.
struct AlgebraSpec {
    struct BracketLine {
        int i = 0, j = 0;
        std::vector<std::pair<int, Rational>> rhs;  // Σ coeff · e_k
    };
    /// Registry-only companion: the algebra is the mapping torus of `base`
    /// under `substitution`, so manifold Betti numbers are routed through
    /// the mapping-torus formula instead of the model cohomology.
    struct MappingTorusOf {
        std::string base;
        std::vector<Form> substitution_images;
    };

    std::string name;
    int dim = 0;
    bool uses_brackets = false;
    std::vector<BracketLine> brackets;
    std::vector<std::pair<int, Form>> differentials;
    std::optional<Form> eta;
    std::optional<Form> omega;
    bool flag_nilpotent = false;
    bool flag_completely_solvable = false;
    bool flag_unimodular = false;
    std::optional<MappingTorusOf> mapping_torus;
};

/// Line grammar (# starts a comment):
///   dim N
///   bracket [ei,ej] = <coeff> ek ± <coeff> el ...
///   d ei = <form>
///   eta = <form>
///   omega = <form>
///   flag nilpotent | completely_solvable | unimodular
/// Exactly one of the two definition styles may appear; a file mixing
/// bracket and differential lines is rejected. Throws ParseError with line
/// and column positions.
AlgebraSpec parse_spec(std::string_view text, std::string name = "");

/// Builds the CDGA: bracket specs go through the Chevalley-Eilenberg
/// construction (Jacobi checked), differential specs are validated with
/// check_d_squared. Flags claiming nilpotent or unimodular are cross-checked
/// against the recovered bracket.
Cdga build_cdga(const AlgebraSpec& spec);

/// Built-in corpus. Every entry passes the d² = 0 check; unknown names throw
/// UnknownNameError listing the registry.
AlgebraSpec registry(std::string_view name);
std::vector<std::string> registry_names();

}  // namespace cecoh
