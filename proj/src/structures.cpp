#include "cecoh/structures.hpp"

namespace cecoh {

namespace {

void require_closed(const Cdga& c, const Form& f, const char* what) {
    Form df = c.d(f);
    if (!df.is_zero())
        throw NotClosedError(df, std::string(what) + " is not closed");
}

void require_degree(const Form& f, int k, const char* what) {
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != k)
        throw ValidationError(std::string(what) + " must be a nonzero " + std::to_string(k) +
                              "-form");
}

/// Solves the linear system "ι_x target_map = rhs" where target(x) is linear
/// in x; columns of the system are ι_{e_i}(pivot_form).
Vector solve_contraction(const Cdga& c, const Form& pivot_form, int result_degree,
                         const Form& rhs, const char* what) {
    int n = c.dim();
    std::vector<Rational> rhs_coords = form_to_coords(rhs, result_degree);
    QMatrix system(static_cast<int>(rhs_coords.size()), n);
    for (int i = 1; i <= n; ++i) {
        std::vector<Rational> col = form_to_coords(contract(Vector::basis(n, i), pivot_form),
                                                   result_degree);
        for (std::size_t r = 0; r < col.size(); ++r)
            system.at(static_cast<int>(r), i - 1) = col[r];
    }
    auto sol = system.solve(rhs_coords);
    if (!sol)
        throw ValidationError(std::string(what) + ": contraction system is inconsistent");
    if (!system.kernel_basis().empty())
        throw ValidationError(std::string(what) + ": contraction system is singular");
    return Vector(n, std::move(*sol));
}

}  // namespace

SymplecticStructure validate_symplectic(const Cdga& c, const Form& omega) {
    if (c.dim() % 2 != 0)
        throw ValidationError("symplectic structures need an even-dimensional algebra");
    int n = c.dim() / 2;
    require_degree(omega, 2, "omega");
    require_closed(c, omega, "omega");
    if (wedge_power(omega, n).is_zero())
        throw DegenerateError("omega^n = 0, the 2-form is degenerate");
    return SymplecticStructure{omega, n};
}

Vector reeb_field(const Cdga& c, const Form& eta, const Form& omega) {
    int n = c.dim();
    // stack ι_x η = 1 over ι_x ω = 0
    std::vector<Rational> rhs;
    QMatrix system(1 + n, n);
    for (int i = 1; i <= n; ++i) {
        Form ce = contract(Vector::basis(n, i), eta);
        system.at(0, i - 1) = ce.coeff(Monomial::unit());
        std::vector<Rational> col = form_to_coords(contract(Vector::basis(n, i), omega), 1);
        for (int r = 0; r < n; ++r)
            system.at(1 + r, i - 1) = col[static_cast<std::size_t>(r)];
    }
    rhs.assign(static_cast<std::size_t>(1 + n), Rational(0));
    rhs[0] = 1;
    auto sol = system.solve(rhs);
    if (!sol || !system.kernel_basis().empty())
        throw ValidationError("Reeb system is singular; η ∧ ω^n vanishes");
    return Vector(n, std::move(*sol));
}

Vector algebraic_reeb(const Cdga& c, const Form& v, const Form& w) {
    if (c.dim() % 2 != 1)
        throw ValidationError("the algebraic Reeb field needs an odd-dimensional algebra");
    int n = (c.dim() - 1) / 2;
    require_degree(v, 1, "v");
    require_degree(w, 2, "w");
    Form wn = wedge_power(w, n);
    Form vol = wedge(v, wn);
    if (vol.is_zero())
        throw DegenerateError("v ∧ w^n = 0, the pair is degenerate");
    return solve_contraction(c, vol, 2 * n, wn, "algebraic Reeb");
}

CosymplecticStructure validate_cosymplectic(const Cdga& c, const Form& eta, const Form& omega) {
    if (c.dim() % 2 != 1)
        throw ValidationError("cosymplectic structures need an odd-dimensional algebra");
    int n = (c.dim() - 1) / 2;
    require_degree(eta, 1, "eta");
    require_degree(omega, 2, "omega");
    require_closed(c, eta, "eta");
    require_closed(c, omega, "omega");
    if (wedge(eta, wedge_power(omega, n)).is_zero())
        throw DegenerateError("η ∧ ω^n = 0, the pair is degenerate");
    CosymplecticStructure s{eta, omega, n, reeb_field(c, eta, omega),
                            algebraic_reeb(c, eta, omega)};
    return s;
}

}  // namespace cecoh
