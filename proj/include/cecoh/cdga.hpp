#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "cecoh/form.hpp"
#include "cecoh/matrix.hpp"

namespace cecoh {

/// Lie algebra given by structure constants against a fixed basis e_1..e_n:
/// [e_i, e_j] = Σ_k c_{ij}^k e_k, stored fully with the antisymmetry
/// c_{ij}^k = -c_{ji}^k maintained by construction.
class LieAlgebra {
public:
    explicit LieAlgebra(int dim);

    int dim() const { return dim_; }
    /// c_{ij}^k, all indices 1-based.
    const Rational& c(int i, int j, int k) const;
    /// Sets [e_i, e_j] ← [e_i, e_j] + coeff·e_k (and the antisymmetric twin).
    void add_bracket(int i, int j, int k, const Rational& coeff);

    /// [x, y] extended bilinearly.
    Vector bracket(const Vector& x, const Vector& y) const;

    /// First basis triple i < j < k violating the Jacobi identity, if any.
    std::optional<std::tuple<int, int, int>> jacobi_witness() const;

    bool is_nilpotent() const;   // lower central series reaches zero
    bool is_unimodular() const;  // tr(ad_x) = 0 for all basis x

private:
    std::size_t index(int i, int j, int k) const;
    int dim_;
    std::vector<Rational> c_;
};

/// Witness for d² ≠ 0: d(d(e^generator)) = value.
struct DSquareWitness {
    int generator;
    Form value;
};

/// Thrown when a pipeline stage needs d² = 0 and the input fails it.
struct DSquaredFailure : Error {
    explicit DSquaredFailure(DSquareWitness w)
        : Error("d² ≠ 0 on generator e" + std::to_string(w.generator) + ": d²(e" +
                std::to_string(w.generator) + ") = " + w.value.str()),
          witness(std::move(w)) {}
    DSquareWitness witness;
};

/// Commutative differential graded algebra freely generated in degree one,
/// described by the differential on generators (2-forms). Construction
/// validates degrees only; use check_d_squared for the cochain condition.
class Cdga {
public:
    Cdga(int dim, std::vector<Form> d_of_generator);
    static Cdga abelian(int dim);

    int dim() const { return dim_; }
    const Form& d_generator(int i) const { return dgen_[static_cast<std::size_t>(i) - 1]; }

    /// The differential extended to arbitrary forms by the graded Leibniz
    /// rule; a degree +1 antiderivation.
    Form d(const Form& a) const;

    bool operator==(const Cdga&) const = default;

private:
    int dim_;
    std::vector<Form> dgen_;
};

/// nullopt when d∘d = 0 on every generator (hence everywhere); otherwise the
/// first failing generator with its nonzero 3-form.
std::optional<DSquareWitness> check_d_squared(const Cdga& c);

/// Chevalley-Eilenberg complex of a Lie algebra: de^k = -Σ_{i<j} c_{ij}^k e^{ij}.
/// Throws JacobiError (naming a violating triple) when d² ≠ 0.
Cdga ce_differential(const LieAlgebra& g);

/// Bracket recovered from the differential: c_{ij}^k = -⟨de^k, e^{ij}⟩.
LieAlgebra lie_from_cdga(const Cdga& c);

/// Appends one closed generator e^{n+1}; models crossing with a circle.
Cdga circle_product(const Cdga& c);

/// Semidirect extension by a derivation D of the underlying bracket:
/// dimension n+1, the new generator is closed, and each de^k gains the term
/// (Σ_i D_{ki} e^i) ∧ e^{n+1} dual to [e_{n+1}, e_i] = D(e_i).
/// Throws DerivationPairError when D fails D[x,y] = [Dx,y] + [x,Dy].
Cdga semidirect_extend(const Cdga& c, const QMatrix& D);

/// Generators concatenated with the second factor reindexed upward.
Cdga direct_sum(const Cdga& a, const Cdga& b);

bool is_nilpotent(const Cdga& c);

}  // namespace cecoh
