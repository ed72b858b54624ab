#include "cecoh/massey.hpp"

#include <map>
#include <utility>

#include "cecoh/matrix.hpp"

namespace cecoh {

namespace {

Form checked_primitive(const CohomologyRing& r, const Form& product, const char* which) {
    auto p = r.primitive(product);
    if (!p)
        throw ValidationError(std::string("cup product precondition violated: ") + which +
                              " is not exact");
    return *p;
}

/// with_indeterminacy=false skips the subspace when the value class already
/// vanishes (0 always lies in the indeterminacy, so the verdict is settled).
MasseyValue assemble(const CohomologyRing& r, const CohomologyClass& a1,
                     const CohomologyClass& a3, int p1, int p2, int p3, const Form& alpha1,
                     const Form& alpha3, const Form& sigma, const Form& tau,
                     bool with_indeterminacy) {
    int target = p1 + p2 + p3 - 1;
    MasseyValue out;
    out.value_form = wedge(alpha1, tau);
    Form second = wedge(sigma, alpha3);
    if (p1 % 2 == 0)
        out.value_form -= second;  // (-1)^{p1+1} = -1 for even p1
    else
        out.value_form += second;
    out.value.degree = target;
    if (out.value_form.is_zero())
        out.value.coords.assign(static_cast<std::size_t>(r.betti(target)), Rational(0));
    else
        out.value.coords = r.inner().reduce_form(target, out.value_form);
    if (out.value.is_zero() && !with_indeterminacy) {
        out.nonvanishing = false;
        return out;
    }
    RowSpace span(r.betti(target));
    for (int i = 0; i < r.betti(p2 + p3 - 1); ++i)
        span.insert(r.cup(a1, r.class_of_basis(p2 + p3 - 1, i)).coords);
    for (int i = 0; i < r.betti(p1 + p2 - 1); ++i)
        span.insert(r.cup(r.class_of_basis(p1 + p2 - 1, i), a3).coords);
    out.indeterminacy = span.rows();
    out.indeterminacy_dim = span.dim();
    out.nonvanishing = !span.contains(out.value.coords);
    return out;
}

}  // namespace

MasseyValue triple_massey(const CohomologyRing& r, const CohomologyClass& a1,
                          const CohomologyClass& a2, const CohomologyClass& a3) {
    if (!r.cup(a1, a2).is_zero() || !r.cup(a2, a3).is_zero())
        throw ValidationError("Massey product needs a1∪a2 = 0 and a2∪a3 = 0");
    Form alpha1 = r.representative_of(a1);
    Form alpha2 = r.representative_of(a2);
    Form alpha3 = r.representative_of(a3);
    Form sigma = checked_primitive(r, wedge(alpha1, alpha2), "α1∧α2");
    Form tau = checked_primitive(r, wedge(alpha2, alpha3), "α2∧α3");
    return assemble(r, a1, a3, a1.degree, a2.degree, a3.degree, alpha1, alpha3, sigma, tau,
                    true);
}

MasseyValue triple_massey_with(const CohomologyRing& r, const CohomologyClass& a1,
                               const CohomologyClass& a2, const CohomologyClass& a3,
                               const Form& sigma, const Form& tau) {
    Form alpha1 = r.representative_of(a1);
    Form alpha2 = r.representative_of(a2);
    Form alpha3 = r.representative_of(a3);
    if (!(r.cdga().d(sigma) == wedge(alpha1, alpha2)))
        throw ValidationError("σ is not a primitive of α1∧α2");
    if (!(r.cdga().d(tau) == wedge(alpha2, alpha3)))
        throw ValidationError("τ is not a primitive of α2∧α3");
    return assemble(r, a1, a3, a1.degree, a2.degree, a3.degree, alpha1, alpha3, sigma, tau,
                    true);
}

namespace {

/// Scan workspace: cup coordinates and primitives per degree pair, computed
/// once and shared across the triple enumeration.
struct CupTable {
    std::vector<std::vector<std::vector<Rational>>> cup;  // [i][j] class coords
    std::map<std::pair<int, int>, Form> primitives;       // zero pairs only
    bool has_zero_pair = false;
};

}  // namespace

std::vector<MasseyFinding> massey_scan(const CohomologyRing& r, int max_degree) {
    int n = r.cdga().dim();
    if (max_degree < 0)
        max_degree = n - 1;
    std::map<std::pair<int, int>, CupTable> tables;
    auto table_for = [&](int p, int q) -> const CupTable& {
        auto key = std::make_pair(p, q);
        auto it = tables.find(key);
        if (it != tables.end())
            return it->second;
        CupTable table;
        int target = p + q;
        table.cup.resize(static_cast<std::size_t>(r.betti(p)));
        for (int i = 0; i < r.betti(p); ++i) {
            Form fa = r.representative_of(r.class_of_basis(p, i));
            auto& row = table.cup[static_cast<std::size_t>(i)];
            row.resize(static_cast<std::size_t>(r.betti(q)));
            for (int j = 0; j < r.betti(q); ++j) {
                Form w = wedge(fa, r.representative_of(r.class_of_basis(q, j)));
                std::vector<Rational> cls;
                if (target <= n && r.betti(target) > 0)
                    cls = r.inner().reduce_form(target, w);
                row[static_cast<std::size_t>(j)] = cls;
                if (is_zero_vec(cls)) {
                    table.has_zero_pair = true;
                    auto prim = r.primitive(w);
                    table.primitives.emplace(std::make_pair(i, j), std::move(*prim));
                }
            }
        }
        return tables.emplace(key, std::move(table)).first->second;
    };

    std::vector<MasseyFinding> findings;
    for (int p1 = 1; p1 <= max_degree; ++p1) {
        if (r.betti(p1) == 0)
            continue;
        for (int p2 = 1; p1 + p2 <= max_degree; ++p2) {
            if (r.betti(p2) == 0)
                continue;
            const CupTable& left = table_for(p1, p2);
            if (!left.has_zero_pair)
                continue;
            for (int p3 = 1; p1 + p2 + p3 - 1 <= max_degree; ++p3) {
                int target = p1 + p2 + p3 - 1;
                if (r.betti(p3) == 0 || r.betti(target) == 0)
                    continue;
                const CupTable& right = table_for(p2, p3);
                if (!right.has_zero_pair)
                    continue;
                // the indeterminacy span depends on (i1, i3) only, so it is
                // shared across every middle index of this degree block
                std::map<std::pair<int, int>, RowSpace> span_cache;
                auto span_for = [&](int i1, int i3) -> const RowSpace& {
                    auto key = std::make_pair(i1, i3);
                    auto it = span_cache.find(key);
                    if (it != span_cache.end())
                        return it->second;
                    const CupTable& span_left = table_for(p1, p2 + p3 - 1);
                    const CupTable& span_right = table_for(p1 + p2 - 1, p3);
                    RowSpace span(r.betti(target));
                    for (const auto& cls : span_left.cup[static_cast<std::size_t>(i1)])
                        span.insert(cls);
                    for (const auto& row : span_right.cup)
                        span.insert(row[static_cast<std::size_t>(i3)]);
                    return span_cache.emplace(key, std::move(span)).first->second;
                };
                for (int i1 = 0; i1 < r.betti(p1); ++i1)
                    for (int i2 = 0; i2 < r.betti(p2); ++i2) {
                        auto lit = left.primitives.find(std::make_pair(i1, i2));
                        if (lit == left.primitives.end())
                            continue;
                        CohomologyClass a1 = r.class_of_basis(p1, i1);
                        Form alpha1 = r.representative_of(a1);
                        for (int i3 = 0; i3 < r.betti(p3); ++i3) {
                            auto rit = right.primitives.find(std::make_pair(i2, i3));
                            if (rit == right.primitives.end())
                                continue;
                            Form alpha3 = r.representative_of(r.class_of_basis(p3, i3));
                            MasseyValue v;
                            v.value_form = wedge(alpha1, rit->second);
                            Form second = wedge(lit->second, alpha3);
                            if (p1 % 2 == 0)
                                v.value_form -= second;
                            else
                                v.value_form += second;
                            v.value.degree = target;
                            if (v.value_form.is_zero())
                                continue;  // the class vanishes outright
                            v.value.coords = r.inner().reduce_form(target, v.value_form);
                            if (v.value.is_zero())
                                continue;
                            const RowSpace& span = span_for(i1, i3);
                            if (span.contains(v.value.coords))
                                continue;
                            v.indeterminacy = span.rows();
                            v.indeterminacy_dim = span.dim();
                            v.nonvanishing = true;
                            findings.push_back({p1, p2, p3, i1, i2, i3, std::move(v)});
                        }
                    }
            }
        }
    }
    return findings;
}

std::optional<Formality> hasegawa_verdict(const Cdga& c) {
    if (!is_nilpotent(c))
        return std::nullopt;
    for (int i = 1; i <= c.dim(); ++i)
        if (!c.d_generator(i).is_zero())
            return Formality::non_formal;
    return Formality::formal;
}

}  // namespace cecoh
