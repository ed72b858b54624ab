#pragma once

#include <optional>
#include <vector>

#include "cecoh/cohomology.hpp"

namespace cecoh {

/// Triple product ⟨a1,a2,a3⟩ = [α1 ∧ τ + (-1)^{p1+1} σ ∧ α3], defined when
/// a1 ∪ a2 = 0 = a2 ∪ a3, where dσ = α1 ∧ α2 and dτ = α2 ∧ α3. The product
/// is a coset: the class is well defined only modulo
/// a1 ∪ H^{p2+p3-1} + H^{p1+p2-1} ∪ a3, so the verdict compares the value
/// against that subspace rather than against zero.
struct MasseyValue {
    CohomologyClass value;                            // degree p1+p2+p3-1
    std::vector<std::vector<Rational>> indeterminacy; // echelon basis, class coords
    int indeterminacy_dim = 0;
    bool nonvanishing = false;                        // value ∉ indeterminacy
    Form value_form;                                  // the representative used

    MasseyValue() : value_form(1) {}
};

/// Throws ValidationError when a precondition cup product is nonzero.
/// σ and τ are the deterministic minimal-support primitives.
MasseyValue triple_massey(const CohomologyRing& r, const CohomologyClass& a1,
                          const CohomologyClass& a2, const CohomologyClass& a3);

/// Same product with caller-supplied primitives (validated: dσ = α1 ∧ α2,
/// dτ = α2 ∧ α3). The verdict must not depend on the choice.
MasseyValue triple_massey_with(const CohomologyRing& r, const CohomologyClass& a1,
                               const CohomologyClass& a2, const CohomologyClass& a3,
                               const Form& sigma, const Form& tau);

struct MasseyFinding {
    int p1 = 0, p2 = 0, p3 = 0;  // degrees
    int i1 = 0, i2 = 0, i3 = 0;  // representative-basis indices
    MasseyValue product;
};

/// Scans basis-class triples with p1+p2+p3-1 ≤ max_degree (each p_i ≥ 1) in
/// lexicographic order and returns the nonvanishing products found.
/// max_degree < 0 selects the default n-1. An empty scan never certifies
/// formality; it only reports that no triple obstruction was found.
std::vector<MasseyFinding> massey_scan(const CohomologyRing& r, int max_degree = -1);

enum class Formality { formal, non_formal };

/// Torus criterion for nilpotent algebras: formal iff d ≡ 0. Returns nullopt
/// when the underlying Lie algebra is not nilpotent (the criterion does not
/// apply).
std::optional<Formality> hasegawa_verdict(const Cdga& c);

}  // namespace cecoh
