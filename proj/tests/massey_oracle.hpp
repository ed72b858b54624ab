#pragma once

// Exhaustive Massey oracle shared by the unit and acceptance suites.

#include <optional>

#include "cecoh/cdga.hpp"
#include "cecoh/massey.hpp"
#include "oracles.hpp"

namespace massey_oracle {

using namespace cecoh;

/// Exhaustive brute-force verdict for <a1,a2,a3> with all three classes of
/// degree one: enumerates every primitive pair (sigma, tau) over a small
/// integer grid of closed-form perturbations and every indeterminacy shift,
/// entirely in test-local int64 fraction arithmetic on the full degree-2
/// cochain space.
struct BruteForceDegreeOne {
    // monomial order on 2-forms: pairs (i,j), i<j, lexicographic
    int n;
    std::vector<std::pair<int, int>> pairs;
    oracles::FracMat exact2;    // span of d(1-forms) in pair coordinates
    oracles::FracMat closed1;   // closed 1-forms in generator coordinates

    explicit BruteForceDegreeOne(const Cdga& c) : n(c.dim()) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                pairs.emplace_back(i, j);
        for (int g = 1; g <= n; ++g) {
            const Form& dg = c.d_generator(g);
            if (dg.is_zero()) {
                oracles::FracVec v(static_cast<std::size_t>(n));
                v[static_cast<std::size_t>(g) - 1] = 1;
                closed1.push_back(v);
            } else {
                exact2.push_back(two_form_coords(dg));
            }
        }
    }

    oracles::FracVec two_form_coords(const Form& f) const {
        oracles::FracVec out(pairs.size());
        for (const auto& [m, c] : f.terms()) {
            auto idx = m.indices();
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if (pairs[p].first == idx[0] && pairs[p].second == idx[1])
                    out[p] = oracles::Frac(c.get_num().get_si(), c.get_den().get_si());
        }
        return out;
    }

    /// value = e^{a1} wedge tau + e^{a1... } computed by the caller as a Form;
    /// verdict: nonzero modulo exact2 + indeterminacy for EVERY valid
    /// (sigma, tau) choice. Returns the number of choices tried.
    int check_always_nonvanishing(const Cdga& c, int a1, int a2, int a3, bool& all_nonzero) const {
        Form alpha1 = Form::generator(n, a1);
        Form alpha2 = Form::generator(n, a2);
        Form alpha3 = Form::generator(n, a3);
        // base primitives: must have d(sigma0) = alpha1^alpha2 etc.; for the
        // corpus cases below these products are 0 or a single d-generator
        auto find_base = [&](const Form& target) -> std::optional<Form> {
            if (target.is_zero())
                return Form(n);
            for (int g = 1; g <= n; ++g)
                if (c.d_generator(g) == target)
                    return Form::generator(n, g);
            for (int g = 1; g <= n; ++g)
                if (c.d_generator(g) == -target)
                    return -Form::generator(n, g);
            return std::nullopt;
        };
        auto sigma0 = find_base(wedge(alpha1, alpha2));
        auto tau0 = find_base(wedge(alpha2, alpha3));
        if (!sigma0 || !tau0)
            throw ValidationError("oracle: no single-generator primitive available");

        // indeterminacy directions: a1 ^ (closed 1-forms) and (closed) ^ a3
        oracles::FracMat kill = exact2;
        for (const auto& z : closed1) {
            Form zf(n);
            for (int i = 1; i <= n; ++i)
                if (!z[static_cast<std::size_t>(i) - 1].is_zero())
                    zf += Rational(static_cast<long>(z[static_cast<std::size_t>(i) - 1].num)) *
                          Form::generator(n, i);
            Form left = wedge(alpha1, zf);
            Form right = wedge(zf, alpha3);
            if (!left.is_zero())
                kill.push_back(two_form_coords(left));
            if (!right.is_zero())
                kill.push_back(two_form_coords(right));
        }

        int tried = 0;
        all_nonzero = true;
        std::vector<int> grid = {-1, 0, 1};
        // perturb sigma and tau by every grid combination of closed 1-forms
        std::vector<std::size_t> dims(closed1.size(), 0);
        auto enumerate = [&](auto&& self, std::size_t at, Form sigma, Form tau) -> void {
            if (at == closed1.size()) {
                ++tried;
                Form value = wedge(alpha1, tau) + wedge(sigma, alpha3);  // p1 = 1
                oracles::FracVec v = two_form_coords(value);
                if (oracles::frac_in_span(kill, v))
                    all_nonzero = false;
                return;
            }
            for (int gs : grid)
                for (int gt : grid) {
                    Form zf(n);
                    for (int i = 1; i <= n; ++i)
                        if (!closed1[at][static_cast<std::size_t>(i) - 1].is_zero())
                            zf += Rational(static_cast<long>(
                                       closed1[at][static_cast<std::size_t>(i) - 1].num)) *
                                  Form::generator(n, i);
                    self(self, at + 1, sigma + Rational(gs) * zf, tau + Rational(gt) * zf);
                }
        };
        enumerate(enumerate, 0, *sigma0, *tau0);
        return tried;
    }
};


}  // namespace massey_oracle
