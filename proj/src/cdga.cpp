#include "cecoh/cdga.hpp"

namespace cecoh {

LieAlgebra::LieAlgebra(int dim)
    : dim_(dim),
      c_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) *
             static_cast<std::size_t>(dim),
         Rational(0)) {
    if (dim < 1 || dim > Monomial::max_generators)
        throw ValidationError("Lie algebra dimension out of range");
}

std::size_t LieAlgebra::index(int i, int j, int k) const {
    if (i < 1 || i > dim_ || j < 1 || j > dim_ || k < 1 || k > dim_)
        throw ValidationError("structure constant index out of range");
    return (static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(dim_) +
            static_cast<std::size_t>(j - 1)) *
               static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(k - 1);
}

const Rational& LieAlgebra::c(int i, int j, int k) const { return c_[index(i, j, k)]; }

void LieAlgebra::add_bracket(int i, int j, int k, const Rational& coeff) {
    if (i == j) {
        if (sgn(coeff) != 0)
            throw ValidationError("bracket [e_i, e_i] must vanish");
        return;
    }
    c_[index(i, j, k)] += coeff;
    c_[index(j, i, k)] -= coeff;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.ambient() != dim_ || y.ambient() != dim_)
        throw DimensionMismatch("bracket across dimensions");
    Vector out(dim_);
    for (int i = 1; i <= dim_; ++i) {
        if (sgn(x.coord(i)) == 0)
            continue;
        for (int j = 1; j <= dim_; ++j) {
            if (sgn(y.coord(j)) == 0)
                continue;
            Rational f = x.coord(i) * y.coord(j);
            for (int k = 1; k <= dim_; ++k)
                out.coord(k) += f * c(i, j, k);
        }
    }
    return out;
}

std::optional<std::tuple<int, int, int>> LieAlgebra::jacobi_witness() const {
    for (int i = 1; i <= dim_; ++i)
        for (int j = i + 1; j <= dim_; ++j)
            for (int k = j + 1; k <= dim_; ++k) {
                Vector ei = Vector::basis(dim_, i);
                Vector ej = Vector::basis(dim_, j);
                Vector ek = Vector::basis(dim_, k);
                Vector sum = bracket(bracket(ei, ej), ek);
                Vector s2 = bracket(bracket(ej, ek), ei);
                Vector s3 = bracket(bracket(ek, ei), ej);
                bool zero = true;
                for (int t = 1; t <= dim_; ++t)
                    if (sgn(sum.coord(t) + s2.coord(t) + s3.coord(t)) != 0) {
                        zero = false;
                        break;
                    }
                if (!zero)
                    return std::make_tuple(i, j, k);
            }
    return std::nullopt;
}

bool LieAlgebra::is_nilpotent() const {
    // lower central series g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...
    RowSpace current(dim_);
    for (int i = 1; i <= dim_; ++i) {
        std::vector<Rational> v(static_cast<std::size_t>(dim_), Rational(0));
        v[static_cast<std::size_t>(i - 1)] = 1;
        current.insert(std::move(v));
    }
    while (current.dim() > 0) {
        RowSpace next(dim_);
        for (int i = 1; i <= dim_; ++i)
            for (const auto& row : current.rows()) {
                Vector y(dim_, row);
                Vector b = bracket(Vector::basis(dim_, i), y);
                next.insert(b.coords());
            }
        if (next.dim() == current.dim())
            return false;  // series stabilized above zero
        current = std::move(next);
    }
    return true;
}

bool LieAlgebra::is_unimodular() const {
    for (int i = 1; i <= dim_; ++i) {
        Rational trace(0);
        for (int j = 1; j <= dim_; ++j)
            trace += c(i, j, j);
        if (sgn(trace) != 0)
            return false;
    }
    return true;
}

Cdga::Cdga(int dim, std::vector<Form> d_of_generator)
    : dim_(dim), dgen_(std::move(d_of_generator)) {
    if (dim < 1 || dim > Monomial::max_generators)
        throw ValidationError("generator count out of range");
    if (dgen_.size() != static_cast<std::size_t>(dim))
        throw ValidationError("differential needs a value for every generator");
    for (std::size_t i = 0; i < dgen_.size(); ++i) {
        const Form& f = dgen_[i];
        if (f.ambient() != dim)
            throw DimensionMismatch("differential value over wrong ambient dimension");
        if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != 2))
            throw ValidationError("d(e" + std::to_string(i + 1) + ") must be a 2-form");
    }
}

Cdga Cdga::abelian(int dim) {
    return Cdga(dim, std::vector<Form>(static_cast<std::size_t>(dim), Form(dim)));
}

Form Cdga::d(const Form& a) const {
    if (a.ambient() != dim_)
        throw DimensionMismatch("differential applied across ambient dimensions");
    Form out(dim_);
    for (const auto& [m, c] : a.terms()) {
        auto idx = m.indices();
        for (std::size_t j = 0; j < idx.size(); ++j) {
            const Form& dv = d_generator(idx[j]);
            if (dv.is_zero())
                continue;
            std::uint64_t before = 0, after = 0;
            for (std::size_t t = 0; t < idx.size(); ++t) {
                if (t == j)
                    continue;
                (t < j ? before : after) |= Monomial::generator(idx[t]).mask();
            }
            int sign = (j % 2 != 0) ? -1 : 1;
            Form piece = wedge(Form::term(dim_, Monomial::from_mask(before), c * sign), dv);
            piece = wedge(piece, Form::term(dim_, Monomial::from_mask(after), 1));
            out += piece;
        }
    }
    return out;
}

std::optional<DSquareWitness> check_d_squared(const Cdga& c) {
    for (int i = 1; i <= c.dim(); ++i) {
        Form dd = c.d(c.d_generator(i));
        if (!dd.is_zero())
            return DSquareWitness{i, dd};
    }
    return std::nullopt;
}

Cdga ce_differential(const LieAlgebra& g) {
    int n = g.dim();
    std::vector<Form> dgen;
    dgen.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        Form dk(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                dk.add_term(Monomial::from_indices({i, j}), -g.c(i, j, k));
        dgen.push_back(std::move(dk));
    }
    Cdga c(n, std::move(dgen));
    if (check_d_squared(c)) {
        auto triple = g.jacobi_witness();
        if (!triple)
            throw ValidationError("d² ≠ 0 without a Jacobi witness");  // unreachable
        auto [i, j, k] = *triple;
        throw JacobiError(i, j, k);
    }
    return c;
}

LieAlgebra lie_from_cdga(const Cdga& c) {
    LieAlgebra g(c.dim());
    for (int k = 1; k <= c.dim(); ++k)
        for (const auto& [m, coeff] : c.d_generator(k).terms()) {
            auto idx = m.indices();
            g.add_bracket(idx[0], idx[1], k, -coeff);
        }
    return g;
}

namespace {

Form reindex(const Form& f, int new_ambient, int shift) {
    Form out(new_ambient);
    for (const auto& [m, c] : f.terms())
        out.add_term(Monomial::from_mask(m.mask() << shift), c);
    return out;
}

}  // namespace

Cdga circle_product(const Cdga& c) {
    int n = c.dim();
    std::vector<Form> dgen;
    dgen.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i)
        dgen.push_back(reindex(c.d_generator(i), n + 1, 0));
    dgen.push_back(Form(n + 1));
    return Cdga(n + 1, std::move(dgen));
}

Cdga semidirect_extend(const Cdga& c, const QMatrix& D) {
    int n = c.dim();
    if (D.rows() != n || D.cols() != n)
        throw DimensionMismatch("derivation matrix size must match the algebra dimension");
    LieAlgebra g = lie_from_cdga(c);
    // D must be a derivation of the bracket: D[e_i,e_j] = [De_i,e_j] + [e_i,De_j]
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Vector lhs = g.bracket(Vector::basis(n, i), Vector::basis(n, j));
            Vector Dlhs(n, D.apply(lhs.coords()));
            Vector Di(n, D.col(i - 1));
            Vector Dj(n, D.col(j - 1));
            Vector rhs = g.bracket(Di, Vector::basis(n, j));
            Vector rhs2 = g.bracket(Vector::basis(n, i), Dj);
            bool ok = true;
            for (int k = 1; k <= n; ++k)
                if (sgn(Dlhs.coord(k) - rhs.coord(k) - rhs2.coord(k)) != 0) {
                    ok = false;
                    break;
                }
            if (!ok)
                throw DerivationPairError(i, j);
        }
    std::vector<Form> dgen;
    dgen.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        Form dk = reindex(c.d_generator(k), n + 1, 0);
        for (int i = 1; i <= n; ++i) {
            const Rational& dki = D.at(k - 1, i - 1);
            if (sgn(dki) != 0)
                dk += dki * wedge(Form::generator(n + 1, i), Form::generator(n + 1, n + 1));
        }
        dgen.push_back(std::move(dk));
    }
    dgen.push_back(Form(n + 1));
    Cdga out(n + 1, std::move(dgen));
    if (auto w = check_d_squared(out))
        throw ValidationError("semidirect extension failed d² = 0 on e" +
                              std::to_string(w->generator));
    return out;
}

Cdga direct_sum(const Cdga& a, const Cdga& b) {
    int n = a.dim() + b.dim();
    std::vector<Form> dgen;
    dgen.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= a.dim(); ++i)
        dgen.push_back(reindex(a.d_generator(i), n, 0));
    for (int i = 1; i <= b.dim(); ++i)
        dgen.push_back(reindex(b.d_generator(i), n, a.dim()));
    return Cdga(n, std::move(dgen));
}

bool is_nilpotent(const Cdga& c) { return lie_from_cdga(c).is_nilpotent(); }

}  // namespace cecoh
