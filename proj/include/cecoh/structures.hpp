#pragma once

#include "cecoh/cdga.hpp"
#include "cecoh/cohomology.hpp"
#include "cecoh/form.hpp"

namespace cecoh {

/// Closed nondegenerate 2-form on a 2n-dimensional algebra. Nondegeneracy is
/// decided by ω^n ≠ 0, which over an exterior algebra on 2n generators is
/// the same condition as matrix nondegeneracy.
struct SymplecticStructure {
    Form omega;
    int half_dim;  // n
};

/// Pair (η, ω) with dη = dω = 0 and η ∧ ω^n ≠ 0 on a (2n+1)-dimensional
/// algebra, together with the solved Reeb data:
///   ξ:  ι_ξ η = 1, ι_ξ ω = 0
///   θ:  ι_θ (η ∧ ω^n) = ω^n
struct CosymplecticStructure {
    Form eta;
    Form omega;
    int half_dim;  // n
    Vector xi;
    Vector theta;
};

SymplecticStructure validate_symplectic(const Cdga& c, const Form& omega);
CosymplecticStructure validate_cosymplectic(const Cdga& c, const Form& eta, const Form& omega);

/// The unique ξ with ι_ξ η = 1 and ι_ξ ω = 0; requires η ∧ ω^n ≠ 0.
Vector reeb_field(const Cdga& c, const Form& eta, const Form& omega);

/// The unique θ solving ι_θ (v ∧ w^n) = w^n; requires v ∧ w^n ≠ 0.
Vector algebraic_reeb(const Cdga& c, const Form& v, const Form& w);

}  // namespace cecoh
