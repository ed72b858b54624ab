#include "cecoh/lefschetz.hpp"

#include <functional>

namespace cecoh {

DegreeMapReport make_degree_report(int k, QMatrix m) {
    DegreeMapReport rep;
    rep.k = k;
    rep.rank = m.rank();
    rep.src = m.cols();
    rep.tgt = m.rows();
    rep.injective = rep.rank == rep.src;
    rep.surjective = rep.rank == rep.tgt;
    rep.bijective = rep.injective && rep.surjective;
    rep.matrix = std::move(m);
    return rep;
}

namespace {

LefschetzReport finalize(std::vector<DegreeMapReport> maps) {
    LefschetzReport out;
    out.lefschetz_property = true;
    out.lefschetz_type = true;
    for (const auto& m : maps) {
        if (!m.bijective)
            out.lefschetz_property = false;
        if (m.k == 1)
            out.lefschetz_type = m.bijective;
    }
    out.maps = std::move(maps);
    return out;
}

}  // namespace

LefschetzReport symplectic_lefschetz(const CohomologyRing& r, const SymplecticStructure& s) {
    int n = s.half_dim;
    std::vector<DegreeMapReport> maps;
    for (int k = 0; k <= n; ++k) {
        Form power = wedge_power(s.omega, n - k);
        int src = r.betti(k), tgt = r.betti(2 * n - k);
        QMatrix m(tgt, src);
        auto reps = r.representatives(k);
        for (int j = 0; j < src; ++j) {
            std::vector<Rational> img =
                r.inner().reduce_form(2 * n - k, wedge(power, reps[static_cast<std::size_t>(j)]));
            for (int i = 0; i < tgt; ++i)
                m.at(i, j) = img[static_cast<std::size_t>(i)];
        }
        maps.push_back(make_degree_report(k, std::move(m)));
    }
    return finalize(std::move(maps));
}

Form cosymplectic_lefschetz_image(const Cdga& c, const CosymplecticStructure& s,
                                  const Form& alpha) {
    if (alpha.is_zero())
        return Form(c.dim());
    if (!alpha.is_homogeneous())
        throw ValidationError("the Lefschetz map acts on homogeneous forms");
    int n = s.half_dim;
    int k = alpha.degree();
    if (k > n)
        throw ValidationError("the Lefschetz map is defined for degrees k ≤ n");
    return wedge(wedge_power(s.omega, n - k + 1), contract(s.xi, alpha)) +
           wedge(wedge_power(s.omega, n - k), wedge(s.eta, alpha));
}

Form cosymplectic_closedness(const Cdga& c, const CosymplecticStructure& s, const Form& alpha) {
    Form da = c.d(alpha);
    if (!da.is_zero())
        throw NotClosedError(da, "the closedness diagnostic expects a closed form");
    return c.d(cosymplectic_lefschetz_image(c, s, alpha));
}

Form lie_derivative(const Cdga& c, const Vector& x, const Form& a) {
    return c.d(contract(x, a)) + contract(x, c.d(a));
}

namespace {

QMatrix operator_matrix(const Cdga& c, int k, const std::function<Form(const Form&)>& op,
                        int target_degree) {
    auto src = monomial_basis(c.dim(), k);
    std::size_t tgt = monomial_basis(c.dim(), target_degree).size();
    QMatrix m(static_cast<int>(tgt), static_cast<int>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
        Form img = op(Form::term(c.dim(), src[j], 1));
        std::vector<Rational> col = form_to_coords(img, target_degree);
        for (std::size_t i = 0; i < tgt; ++i)
            m.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
    }
    return m;
}

}  // namespace

SubcomplexCohomology xi_invariant_cohomology(const Cdga& c, const CosymplecticStructure& s) {
    int n = c.dim();
    std::vector<QMatrix> lie_killer;
    std::vector<QMatrix> basic_killer;
    for (int k = 0; k <= n; ++k) {
        lie_killer.push_back(operator_matrix(
            c, k, [&](const Form& f) { return lie_derivative(c, s.xi, f); }, k));
        // basic forms: ι_ξ α = 0 and ι_ξ dα = 0, stacked into one killer
        QMatrix drop = operator_matrix(
            c, k, [&](const Form& f) { return contract(s.xi, f); }, k - 1);
        QMatrix drop_d = operator_matrix(
            c, k, [&](const Form& f) { return contract(s.xi, c.d(f)); }, k);
        QMatrix stacked(drop.rows() + drop_d.rows(), drop.cols());
        for (int i = 0; i < drop.rows(); ++i)
            for (int j = 0; j < drop.cols(); ++j)
                stacked.at(i, j) = drop.at(i, j);
        for (int i = 0; i < drop_d.rows(); ++i)
            for (int j = 0; j < drop_d.cols(); ++j)
                stacked.at(drop.rows() + i, j) = drop_d.at(i, j);
        basic_killer.push_back(std::move(stacked));
    }
    SubcomplexCohomology out{Cohomology(kernel_subcomplex(c, lie_killer)),
                             Cohomology(kernel_subcomplex(c, basic_killer)), false, false};
    out.splitting_applies = lie_derivative(c, s.xi, s.eta).is_zero();
    if (out.splitting_applies) {
        out.splitting_holds = true;
        for (int k = 0; k <= n; ++k) {
            int lhs = out.invariant.betti(k);
            int rhs = out.basic.betti(k) + (k > 0 ? out.basic.betti(k - 1) : 0);
            if (lhs != rhs) {
                out.splitting_holds = false;
                break;
            }
        }
    }
    return out;
}

LefschetzReport k_cosymplectic_lefschetz(const Cdga& c, const CosymplecticStructure& s,
                                         const SubcomplexCohomology& sub) {
    if (!lie_derivative(c, s.xi, s.eta).is_zero())
        throw ValidationError("η is not ξ-invariant; the invariant Lefschetz map needs L_ξη = 0");
    if (!lie_derivative(c, s.xi, s.omega).is_zero())
        throw ValidationError("ω is not ξ-invariant; the invariant Lefschetz map needs L_ξω = 0");
    int n = s.half_dim;
    std::vector<DegreeMapReport> maps;
    for (int k = 0; k <= n; ++k) {
        int tgt_deg = 2 * n + 1 - k;
        int src = sub.invariant.betti(k), tgt = sub.invariant.betti(tgt_deg);
        QMatrix m(tgt, src);
        auto reps = sub.invariant.representatives(k);
        for (int j = 0; j < src; ++j) {
            Form img = cosymplectic_lefschetz_image(c, s, reps[static_cast<std::size_t>(j)]);
            std::vector<Rational> cls = sub.invariant.reduce_form(tgt_deg, img);
            for (int i = 0; i < tgt; ++i)
                m.at(i, j) = cls[static_cast<std::size_t>(i)];
        }
        maps.push_back(make_degree_report(k, std::move(m)));
    }
    return finalize(std::move(maps));
}

AlgebraicLefschetz algebraic_1_lefschetz(const CohomologyRing& r, const Form& v, const Form& w) {
    const Cdga& c = r.cdga();
    if (c.dim() % 2 != 1)
        throw ValidationError("the 1-Lefschetz test needs an odd-dimensional algebra");
    if (!c.d(v).is_zero())
        throw NotClosedError(c.d(v), "v is not closed");
    if (!c.d(w).is_zero())
        throw NotClosedError(c.d(w), "w is not closed");
    int n = (c.dim() - 1) / 2;
    Vector theta = algebraic_reeb(c, v, w);  // also rejects degenerate pairs
    Form wn1 = wedge_power(w, n - 1);
    Form wn = wedge_power(w, n);
    int src = r.betti(1), tgt = r.betti(2 * n);
    QMatrix m(tgt, src);
    auto reps = r.representatives(1);
    for (int j = 0; j < src; ++j) {
        const Form& z = reps[static_cast<std::size_t>(j)];
        Form img = wedge(wn1, wedge(v, z)) + wedge(wn, contract(theta, z));
        std::vector<Rational> cls = r.inner().reduce_form(2 * n, img);
        for (int i = 0; i < tgt; ++i)
            m.at(i, j) = cls[static_cast<std::size_t>(i)];
    }
    AlgebraicLefschetz out{false, make_degree_report(1, std::move(m)), theta};
    out.bijective = out.map.bijective;
    return out;
}

}  // namespace cecoh
