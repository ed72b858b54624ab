#include "cecoh/cohomology.hpp"

#include <algorithm>
#include <bit>

namespace cecoh {

std::vector<Monomial> monomial_basis(int ambient, int k) {
    std::vector<Monomial> out;
    if (k < 0 || k > ambient)
        return out;
    std::uint64_t limit = std::uint64_t{1} << ambient;
    for (std::uint64_t bits = 0; bits < limit; ++bits)
        if (std::popcount(bits) == k)
            out.push_back(Monomial::from_mask(bits));
    std::sort(out.begin(), out.end(), [](Monomial a, Monomial b) { return MonomialOrder{}(a, b); });
    return out;
}

std::vector<Rational> form_to_coords(const Form& f, int k) {
    auto basis = monomial_basis(f.ambient(), k);
    std::vector<Rational> out(basis.size(), Rational(0));
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != k)
            throw ValidationError("form has a term outside degree " + std::to_string(k));
        auto it = std::lower_bound(basis.begin(), basis.end(), m,
                                   [](Monomial a, Monomial b) { return MonomialOrder{}(a, b); });
        out[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return out;
}

Form coords_to_form(int ambient, int k, const std::vector<Rational>& coords) {
    auto basis = monomial_basis(ambient, k);
    if (coords.size() != basis.size())
        throw DimensionMismatch("coordinate count does not match the monomial basis");
    Form out(ambient);
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.add_term(basis[i], coords[i]);
    return out;
}

int CochainComplex::dim(int k) const {
    if (k < 0 || k > ambient)
        return 0;
    return static_cast<int>(basis[static_cast<std::size_t>(k)].vecs.size());
}

std::vector<Rational> CochainComplex::coords_of(int k, const Form& f) const {
    if (k < 0 || k > ambient) {
        if (f.is_zero())
            return {};
        throw ValidationError("form outside the complex degree range");
    }
    const DegreeBasis& db = basis[static_cast<std::size_t>(k)];
    std::vector<Rational> residual = form_to_coords(f, k);
    if (db.monomials)
        return residual;
    std::vector<Rational> coords(db.vecs.size(), Rational(0));
    for (std::size_t r = 0; r < db.rows.size(); ++r) {
        std::size_t lead = static_cast<std::size_t>(db.leads[r]);
        Rational f0 = residual[lead] / db.rows[r][lead];
        if (sgn(f0) != 0) {
            for (std::size_t j = lead; j < residual.size(); ++j)
                if (sgn(db.rows[r][j]) != 0)
                    residual[j] -= f0 * db.rows[r][j];
            coords[r] = f0;
        }
    }
    if (!is_zero_vec(residual))
        throw ValidationError("form does not lie in the subcomplex");
    return coords;
}

Form CochainComplex::form_of(int k, const std::vector<Rational>& coords) const {
    const DegreeBasis& db = basis[static_cast<std::size_t>(k)];
    if (coords.size() != db.vecs.size())
        throw DimensionMismatch("coordinate count mismatch");
    Form out(ambient);
    for (std::size_t i = 0; i < db.vecs.size(); ++i) {
        Form t = db.vecs[i];
        t *= coords[i];
        out += t;
    }
    return out;
}

namespace {

void fill_d_matrices(const Cdga& c, CochainComplex& cx) {
    cx.d.clear();
    cx.d.reserve(static_cast<std::size_t>(cx.ambient) + 1);
    for (int k = 0; k <= cx.ambient; ++k) {
        int src = cx.dim(k), tgt = cx.dim(k + 1);
        QMatrix m(tgt, src);
        const auto& bk = cx.basis[static_cast<std::size_t>(k)].vecs;
        for (int j = 0; j < src; ++j) {
            std::vector<Rational> img = cx.coords_of(k + 1, c.d(bk[static_cast<std::size_t>(j)]));
            for (int i = 0; i < tgt; ++i)
                m.at(i, j) = img[static_cast<std::size_t>(i)];
        }
        cx.d.push_back(std::move(m));
    }
}

}  // namespace

CochainComplex full_complex(const Cdga& c) {
    int n = c.dim();
    CochainComplex out;
    out.ambient = n;
    out.basis.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        auto& db = out.basis[static_cast<std::size_t>(k)];
        db.monomials = true;
        auto monos = monomial_basis(n, k);
        for (std::size_t i = 0; i < monos.size(); ++i) {
            db.vecs.push_back(Form::term(n, monos[i], 1));
            db.leads.push_back(static_cast<int>(i));
        }
    }
    fill_d_matrices(c, out);
    return out;
}

CochainComplex kernel_subcomplex(const Cdga& c, const std::vector<QMatrix>& killer) {
    int n = c.dim();
    if (killer.size() != static_cast<std::size_t>(n) + 1)
        throw DimensionMismatch("one killer matrix per degree required");
    CochainComplex out;
    out.ambient = n;
    out.basis.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        auto& db = out.basis[static_cast<std::size_t>(k)];
        for (auto& row : killer[static_cast<std::size_t>(k)].kernel_basis()) {
            db.vecs.push_back(coords_to_form(n, k, row));
            int lead = 0;
            while (sgn(row[static_cast<std::size_t>(lead)]) == 0)
                ++lead;
            db.leads.push_back(lead);
            db.rows.push_back(std::move(row));
        }
    }
    fill_d_matrices(c, out);
    return out;
}

Cohomology::Cohomology(CochainComplex complex) : complex_(std::move(complex)) {
    int n = complex_.ambient;
    degrees_.reserve(static_cast<std::size_t>(n) + 1);
    betti_.resize(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        Degree deg{RowSpace(complex_.dim(k)), {}, {}, std::nullopt};
        if (k > 0) {
            const QMatrix& dprev = complex_.d[static_cast<std::size_t>(k) - 1];
            for (int j = 0; j < dprev.cols(); ++j)
                deg.boundaries.insert(dprev.col(j));
            deg.primitive_solver.emplace(dprev);
        }
        RowSpace cocycles(complex_.dim(k));
        for (const auto& v : complex_.d[static_cast<std::size_t>(k)].kernel_basis())
            cocycles.insert(v);
        // Representatives: echelon cocycle rows whose pivots avoid the
        // boundary pivots. Such rows vanish on all boundary pivot columns,
        // so they are complementary to the coboundary space by construction.
        const auto& bp = deg.boundaries.pivots();
        for (std::size_t r = 0; r < cocycles.pivots().size(); ++r) {
            int p = cocycles.pivots()[r];
            if (!std::binary_search(bp.begin(), bp.end(), p)) {
                deg.reps.push_back(cocycles.rows()[r]);
                deg.rep_pivots.push_back(p);
            }
        }
        betti_[static_cast<std::size_t>(k)] = static_cast<int>(deg.reps.size());
        degrees_.push_back(std::move(deg));
    }
}

int Cohomology::betti(int k) const {
    if (k < 0 || k > top())
        return 0;
    return betti_[static_cast<std::size_t>(k)];
}

const std::vector<std::vector<Rational>>& Cohomology::representative_coords(int k) const {
    static const std::vector<std::vector<Rational>> empty;
    if (k < 0 || k > top())
        return empty;
    return degrees_[static_cast<std::size_t>(k)].reps;
}

std::vector<Form> Cohomology::representatives(int k) const {
    std::vector<Form> out;
    if (k < 0 || k > top())
        return out;
    for (const auto& row : degrees_[static_cast<std::size_t>(k)].reps)
        out.push_back(complex_.form_of(k, row));
    return out;
}

Form Cohomology::representative_combination(int k, const std::vector<Rational>& class_coords) const {
    const Degree& deg = degrees_[static_cast<std::size_t>(k)];
    if (class_coords.size() != deg.reps.size())
        throw DimensionMismatch("class coordinate count mismatch");
    std::vector<Rational> acc(static_cast<std::size_t>(complex_.dim(k)), Rational(0));
    for (std::size_t i = 0; i < class_coords.size(); ++i)
        for (std::size_t j = 0; j < acc.size(); ++j)
            acc[j] += class_coords[i] * deg.reps[i][j];
    return complex_.form_of(k, acc);
}

std::vector<Rational> Cohomology::reduce_coords(int k, std::vector<Rational> v) const {
    if (k < 0 || k > top()) {
        if (is_zero_vec(v))
            return {};
        throw ValidationError("cocycle outside the complex degree range");
    }
    const Degree& deg = degrees_[static_cast<std::size_t>(k)];
    std::vector<Rational> out(deg.reps.size(), Rational(0));
    // Forward elimination against the union of boundary and representative
    // rows: all pivots are distinct and each row vanishes before its pivot.
    struct Entry {
        int pivot;
        const std::vector<Rational>* row;
        int rep_index;  // -1 for boundary rows
    };
    std::vector<Entry> entries;
    for (std::size_t r = 0; r < deg.boundaries.pivots().size(); ++r)
        entries.push_back({deg.boundaries.pivots()[r], &deg.boundaries.rows()[r], -1});
    for (std::size_t i = 0; i < deg.reps.size(); ++i)
        entries.push_back({deg.rep_pivots[i], &deg.reps[i], static_cast<int>(i)});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.pivot < b.pivot; });
    for (const Entry& e : entries) {
        Rational c = v[static_cast<std::size_t>(e.pivot)];
        if (sgn(c) == 0)
            continue;
        const auto& row = *e.row;
        for (std::size_t j = static_cast<std::size_t>(e.pivot); j < v.size(); ++j)
            if (sgn(row[j]) != 0)
                v[j] -= c * row[j];
        if (e.rep_index >= 0)
            out[static_cast<std::size_t>(e.rep_index)] = c;
    }
    if (!is_zero_vec(v))
        throw ValidationError("vector is not a cocycle of the complex");
    return out;
}

std::vector<Rational> Cohomology::reduce_form(int k, const Form& z) const {
    return reduce_coords(k, complex_.coords_of(k, z));
}

std::optional<std::vector<Rational>> Cohomology::primitive_coords(
    int k, const std::vector<Rational>& v) const {
    if (k <= 0 || k > top())
        return is_zero_vec(v) ? std::make_optional(std::vector<Rational>{}) : std::nullopt;
    return degrees_[static_cast<std::size_t>(k)].primitive_solver->solve(v);
}

long Cohomology::euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= top(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(betti(k));
    return chi;
}

bool CohomologyClass::is_zero() const { return is_zero_vec(coords); }

namespace {

const Cdga& validated(const Cdga& c) {
    if (auto w = check_d_squared(c))
        throw DSquaredFailure(*w);
    return c;
}

}  // namespace

CohomologyRing::CohomologyRing(const Cdga& c) : cdga_(validated(c)), coh_(full_complex(cdga_)) {}

CohomologyClass CohomologyRing::class_of_basis(int k, int i) const {
    CohomologyClass a;
    a.degree = k;
    a.coords.assign(static_cast<std::size_t>(betti(k)), Rational(0));
    a.coords.at(static_cast<std::size_t>(i)) = 1;
    return a;
}

Form CohomologyRing::representative_of(const CohomologyClass& a) const {
    if (a.degree < 0 || a.degree > cdga_.dim())
        return Form(cdga_.dim());
    return coh_.representative_combination(a.degree, a.coords);
}

CohomologyClass CohomologyRing::reduce(const Form& z) const {
    Form dz = cdga_.d(z);
    if (!dz.is_zero())
        throw NotClosedError(dz);
    CohomologyClass out;
    if (z.is_zero()) {
        out.degree = 0;
        out.coords.assign(static_cast<std::size_t>(betti(0)), Rational(0));
        return out;
    }
    if (!z.is_homogeneous())
        throw ValidationError("reduce expects a homogeneous form");
    out.degree = z.degree();
    out.coords = coh_.reduce_form(out.degree, z);
    return out;
}

std::optional<Form> CohomologyRing::primitive(const Form& z) const {
    Form dz = cdga_.d(z);
    if (!dz.is_zero())
        throw NotClosedError(dz);
    if (z.is_zero())
        return Form(cdga_.dim());
    if (!z.is_homogeneous())
        throw ValidationError("primitive expects a homogeneous form");
    int k = z.degree();
    auto coords = coh_.primitive_coords(k, form_to_coords(z, k));
    if (!coords)
        return std::nullopt;
    return coords_to_form(cdga_.dim(), k - 1, *coords);
}

CohomologyClass CohomologyRing::cup(const CohomologyClass& a, const CohomologyClass& b) const {
    int k = a.degree + b.degree;
    if (k > cdga_.dim()) {
        CohomologyClass out;
        out.degree = k;
        return out;
    }
    Form w = wedge(representative_of(a), representative_of(b));
    CohomologyClass out;
    out.degree = k;
    out.coords = coh_.reduce_form(k, w);
    return out;
}

InducedMap CohomologyRing::induced_map(const AlgebraMap& endo) const {
    if (endo.ambient() != cdga_.dim())
        throw DimensionMismatch("substitution over wrong ambient dimension");
    for (int i = 1; i <= cdga_.dim(); ++i) {
        Form lhs = endo(cdga_.d_generator(i));
        Form rhs = cdga_.d(endo.image(i));
        if (!(lhs == rhs))
            throw NonCommutingError(i);
    }
    InducedMap out;
    for (int k = 0; k <= cdga_.dim(); ++k) {
        int b = betti(k);
        QMatrix m(b, b);
        auto reps = coh_.representatives(k);
        for (int j = 0; j < b; ++j) {
            std::vector<Rational> img = coh_.reduce_form(k, endo(reps[static_cast<std::size_t>(j)]));
            for (int i = 0; i < b; ++i)
                m.at(i, j) = img[static_cast<std::size_t>(i)];
        }
        out.on_degree.push_back(std::move(m));
    }
    return out;
}

}  // namespace cecoh
