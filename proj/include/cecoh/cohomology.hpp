#pragma once

#include <optional>
#include <vector>

#include "cecoh/cdga.hpp"
#include "cecoh/form.hpp"
#include "cecoh/matrix.hpp"

namespace cecoh {

/// The form z is not closed; `witness` carries dz.
struct NotClosedError : Error {
    explicit NotClosedError(Form witness_, const std::string& what = "form is not closed")
        : Error(what), witness(std::move(witness_)) {}
    Form witness;
};

std::vector<Monomial> monomial_basis(int ambient, int k);
std::vector<Rational> form_to_coords(const Form& f, int k);
Form coords_to_form(int ambient, int k, const std::vector<Rational>& coords);

/// Finite cochain complex of rational vector spaces carrying an explicit
/// Form basis in every degree. The full complex of a CDGA uses the monomial
/// bases; subcomplexes carry echelonized kernel bases (rows in reduced
/// echelon form against the monomial coordinates).
struct CochainComplex {
    struct DegreeBasis {
        std::vector<Form> vecs;
        std::vector<std::vector<Rational>> rows;  // monomial coordinates of vecs
        std::vector<int> leads;                   // leading column of each row
        bool monomials = false;                   // rows are the identity
    };

    int ambient = 0;
    std::vector<DegreeBasis> basis;  // [k], k = 0..ambient
    std::vector<QMatrix> d;          // d[k]: dim(k+1) × dim(k)

    int dim(int k) const;
    /// Coordinates of a form lying in the degree-k span; throws when outside.
    std::vector<Rational> coords_of(int k, const Form& f) const;
    Form form_of(int k, const std::vector<Rational>& coords) const;
};

CochainComplex full_complex(const Cdga& c);

/// Subcomplex cut out in every degree by the kernel of `killer[k]`
/// (a matrix on the monomial basis). The killer must commute with d so the
/// kernels form a subcomplex; violations surface as coordinate failures.
CochainComplex kernel_subcomplex(const Cdga& c, const std::vector<QMatrix>& killer);

/// Cohomology of a cochain complex with deterministic representative bases:
/// coboundaries and cocycles are kept as reduced row echelon spans with
/// leftmost-monomial pivoting, and the chosen representatives are the
/// echelon cocycle rows whose pivots avoid the coboundary pivots. Every
/// basis is therefore reproducible across runs.
class Cohomology {
public:
    explicit Cohomology(CochainComplex complex);

    const CochainComplex& complex() const { return complex_; }
    const std::vector<int>& betti() const { return betti_; }
    int betti(int k) const;
    int top() const { return complex_.ambient; }

    /// Representatives as coordinate rows against complex().basis[k].vecs.
    const std::vector<std::vector<Rational>>& representative_coords(int k) const;
    std::vector<Form> representatives(int k) const;
    Form representative_combination(int k, const std::vector<Rational>& class_coords) const;

    /// Class coordinates of a cocycle given in complex coordinates; throws
    /// ValidationError when the vector is not a cocycle of the complex.
    std::vector<Rational> reduce_coords(int k, std::vector<Rational> v) const;
    std::vector<Rational> reduce_form(int k, const Form& z) const;

    /// Minimal-support β (complex coordinates) with dβ = v, when v is exact.
    std::optional<std::vector<Rational>> primitive_coords(int k, const std::vector<Rational>& v) const;

    long euler_characteristic() const;

private:
    struct Degree {
        RowSpace boundaries;                          // image of d from below
        std::vector<std::vector<Rational>> reps;      // representative rows
        std::vector<int> rep_pivots;
        std::optional<PrefactoredSolver> primitive_solver;  // for d from below
    };
    CochainComplex complex_;
    std::vector<Degree> degrees_;
    std::vector<int> betti_;
};

struct CohomologyClass {
    int degree = 0;
    std::vector<Rational> coords;

    bool is_zero() const;
    bool operator==(const CohomologyClass&) const = default;
};

/// Per-degree matrices of a cohomology endomorphism in the representative
/// bases.
struct InducedMap {
    std::vector<QMatrix> on_degree;  // [k]: b_k × b_k
};

/// Cohomology of the full Chevalley-Eilenberg complex of a CDGA, with the
/// ring operations. Requires d² = 0 (throws ValidationError otherwise).
class CohomologyRing {
public:
    explicit CohomologyRing(const Cdga& c);

    const Cdga& cdga() const { return cdga_; }
    const Cohomology& inner() const { return coh_; }
    const std::vector<int>& betti() const { return coh_.betti(); }
    int betti(int k) const { return coh_.betti(k); }
    long euler_characteristic() const { return coh_.euler_characteristic(); }

    std::vector<Form> representatives(int k) const { return coh_.representatives(k); }
    CohomologyClass class_of_basis(int k, int i) const;
    Form representative_of(const CohomologyClass& a) const;

    /// Throws NotClosedError carrying dz when z is not closed; reduce(dβ) = 0.
    CohomologyClass reduce(const Form& z) const;

    /// β with dβ = z when z is exact, else nullopt. Throws NotClosedError
    /// when z itself is not closed. The witness is the deterministic
    /// minimal-support solution of the row-reduced system; any valid
    /// primitive is equally acceptable, so tests compare d(primitive) with z.
    std::optional<Form> primitive(const Form& z) const;

    CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) const;

    /// Matrices of the action of a d-commuting generator substitution on
    /// cohomology. Throws NonCommutingError naming a witness generator.
    InducedMap induced_map(const AlgebraMap& endo) const;

private:
    Cdga cdga_;
    Cohomology coh_;
};

}  // namespace cecoh
