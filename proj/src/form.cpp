#include "cecoh/form.hpp"

#include <bit>
#include <cctype>
#include <sstream>

namespace cecoh {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    if (text.empty())
        throw FormParseError(0, "empty rational");
    try {
        Rational r(std::string(text), 10);
        if (sgn(r.get_den()) == 0)
            throw FormParseError(0, "zero denominator in '" + std::string(text) + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw FormParseError(0, "bad rational '" + std::string(text) + "'");
    }
}

Monomial Monomial::generator(int i) {
    if (i < 1 || i > max_generators)
        throw ValidationError("generator index out of range: " + std::to_string(i));
    return Monomial(std::uint64_t{1} << (i - 1));
}

Monomial Monomial::from_indices(const std::vector<int>& indices) {
    std::uint64_t bits = 0;
    for (int i : indices) {
        std::uint64_t b = generator(i).mask();
        if (bits & b)
            throw ValidationError("repeated index in monomial: " + std::to_string(i));
        bits |= b;
    }
    return Monomial(bits);
}

int Monomial::degree() const { return std::popcount(bits_); }

bool Monomial::contains(int i) const {
    return i >= 1 && i <= max_generators && (bits_ >> (i - 1)) & 1;
}

std::vector<int> Monomial::indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::optional<MonomialWedge> wedge_monomials(Monomial a, Monomial b) {
    if (a.mask() & b.mask())
        return std::nullopt;
    // Parity of the merge: each index of b jumps over the indices of a that
    // exceed it.
    int inversions = 0;
    for (std::uint64_t bb = b.mask(); bb; bb &= bb - 1) {
        int i = std::countr_zero(bb);
        std::uint64_t above = (i + 1 >= 64) ? 0 : (a.mask() >> (i + 1)) << (i + 1);
        inversions += std::popcount(above);
    }
    return MonomialWedge{Monomial::from_mask(a.mask() | b.mask()),
                         (inversions % 2 == 0) ? 1 : -1};
}

bool MonomialOrder::operator()(Monomial a, Monomial b) const {
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    std::uint64_t x = a.mask(), y = b.mask();
    while (x && y) {
        int ix = std::countr_zero(x), iy = std::countr_zero(y);
        if (ix != iy)
            return ix < iy;
        x &= x - 1;
        y &= y - 1;
    }
    return false;
}

std::string to_string(Monomial m) {
    if (m.is_unit())
        return "1";
    std::string s = "e";
    for (int i : m.indices())
        s += std::to_string(i);
    return s;
}

Form::Form(int ambient) : ambient_(ambient) {
    if (ambient < 0 || ambient > Monomial::max_generators)
        throw ValidationError("ambient dimension out of range: " + std::to_string(ambient));
}

Form Form::scalar(int ambient, const Rational& c) {
    Form f(ambient);
    f.add_term(Monomial::unit(), c);
    return f;
}

Form Form::generator(int ambient, int i) {
    if (i < 1 || i > ambient)
        throw ValidationError("generator e" + std::to_string(i) + " outside ambient dimension " +
                              std::to_string(ambient));
    return term(ambient, Monomial::generator(i), 1);
}

Form Form::term(int ambient, Monomial m, const Rational& c) {
    Form f(ambient);
    f.add_term(m, c);
    return f;
}

bool Form::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;  // map is graded-ordered
}

int Form::degree() const {
    if (terms_.empty())
        return 0;
    if (!is_homogeneous())
        throw ValidationError("degree of a mixed form is undefined");
    return terms_.begin()->first.degree();
}

int Form::top_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Form Form::homogeneous_part(int k) const {
    Form out(ambient_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == k)
            out.add_term(m, c);
    return out;
}

Rational Form::coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Form& Form::add_term(Monomial m, const Rational& c) {
    if (sgn(c) == 0)
        return *this;
    if (m.mask() >> ambient_)
        throw ValidationError("monomial " + cecoh::to_string(m) + " outside ambient dimension " +
                              std::to_string(ambient_));
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
    return *this;
}

Form Form::operator-() const {
    Form out(ambient_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

Form& Form::operator+=(const Form& o) {
    if (o.ambient_ != ambient_)
        throw DimensionMismatch("form addition across ambient dimensions");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (o.ambient_ != ambient_)
        throw DimensionMismatch("form subtraction across ambient dimensions");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Form& Form::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

bool Form::operator==(const Form& o) const {
    return ambient_ == o.ambient_ && terms_ == o.terms_;
}

std::string Form::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0)
                out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        if (m.is_unit())
            out << a.get_str();
        else if (a == 1)
            out << cecoh::to_string(m);
        else
            out << a.get_str() << " " << cecoh::to_string(m);
    }
    return out.str();
}

Form wedge(const Form& a, const Form& b) {
    if (a.ambient() != b.ambient())
        throw DimensionMismatch("wedge across ambient dimensions");
    Form out(a.ambient());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            if (auto w = wedge_monomials(ma, mb))
                out.add_term(w->mono, ca * cb * w->sign);
    return out;
}

Form wedge_power(const Form& a, int k) {
    Form out = Form::one(a.ambient());
    for (int i = 0; i < k; ++i)
        out = wedge(out, a);
    return out;
}

namespace {

struct FormLexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }
};

}  // namespace

Form parse_form(int ambient, std::string_view text) {
    Form out(ambient);
    FormLexer lx{text};
    if (lx.done())
        throw FormParseError(lx.pos, "empty form");
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.peek() == '+' || lx.peek() == '-') {
            sign = lx.peek() == '-' ? -1 : 1;
            ++lx.pos;
        } else if (!first) {
            throw FormParseError(lx.pos, "expected '+' or '-' between terms");
        }
        if (lx.done())
            throw FormParseError(lx.pos, "dangling sign");
        // optional rational coefficient
        Rational coeff = 1;
        bool saw_coeff = false;
        std::size_t start = lx.pos;
        while (lx.pos < lx.text.size() &&
               (std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])) || lx.text[lx.pos] == '/'))
            ++lx.pos;
        if (lx.pos > start) {
            try {
                coeff = parse_rational(lx.text.substr(start, lx.pos - start));
            } catch (const FormParseError&) {
                throw FormParseError(start, "bad rational '" +
                                     std::string(lx.text.substr(start, lx.pos - start)) + "'");
            }
            saw_coeff = true;
        }
        // optional monomial
        bool saw_mono = false;
        Monomial mono = Monomial::unit();
        int mono_sign = 1;
        lx.skip_ws();
        if (lx.pos < lx.text.size() && lx.text[lx.pos] == 'e') {
            std::size_t epos = lx.pos;
            ++lx.pos;
            if (lx.pos >= lx.text.size() || !std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
                throw FormParseError(epos, "expected generator indices after 'e'");
            while (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos]))) {
                int idx = lx.text[lx.pos] - '0';
                if (idx < 1 || idx > ambient)
                    throw FormParseError(lx.pos, "generator index " + std::to_string(idx) +
                                         " outside ambient dimension " + std::to_string(ambient));
                auto w = wedge_monomials(mono, Monomial::generator(idx));
                if (!w) {
                    mono_sign = 0;  // repeated factor, whole term vanishes
                    ++lx.pos;
                    continue;
                }
                mono = w->mono;
                mono_sign *= w->sign;
                ++lx.pos;
            }
            saw_mono = true;
        }
        if (!saw_coeff && !saw_mono)
            throw FormParseError(lx.pos, "expected a term");
        out.add_term(mono, coeff * sign * mono_sign);
        first = false;
    }
    return out;
}

Vector::Vector(int ambient) : ambient_(ambient), coords_(static_cast<std::size_t>(ambient), Rational(0)) {
    if (ambient < 1 || ambient > Monomial::max_generators)
        throw ValidationError("vector ambient dimension out of range");
}

Vector::Vector(int ambient, std::vector<Rational> coords) : Vector(ambient) {
    if (coords.size() != static_cast<std::size_t>(ambient))
        throw DimensionMismatch("vector coordinate count does not match ambient dimension");
    coords_ = std::move(coords);
}

Vector Vector::basis(int ambient, int i) {
    Vector v(ambient);
    v.coord(i) = 1;
    return v;
}

const Rational& Vector::coord(int i) const {
    if (i < 1 || i > ambient_)
        throw ValidationError("vector coordinate index out of range");
    return coords_[static_cast<std::size_t>(i) - 1];
}

Rational& Vector::coord(int i) {
    if (i < 1 || i > ambient_)
        throw ValidationError("vector coordinate index out of range");
    return coords_[static_cast<std::size_t>(i) - 1];
}

std::string Vector::str() const {
    std::string s = "[";
    for (int i = 1; i <= ambient_; ++i) {
        if (i > 1)
            s += ", ";
        s += coord(i).get_str();
    }
    return s + "]";
}

Form contract(const Vector& x, const Form& a) {
    if (x.ambient() != a.ambient())
        throw DimensionMismatch("contraction across ambient dimensions");
    Form out(a.ambient());
    for (const auto& [m, c] : a.terms()) {
        int position = 0;  // 0-based slot of the factor being contracted
        for (int i : m.indices()) {
            const Rational& xi = x.coord(i);
            if (sgn(xi) != 0) {
                Monomial rest = Monomial::from_mask(m.mask() & ~Monomial::generator(i).mask());
                int sign = (position % 2 == 0) ? 1 : -1;
                out.add_term(rest, c * xi * sign);
            }
            ++position;
        }
    }
    return out;
}

Derivation::Derivation(int ambient, int degree, std::vector<Form> values)
    : ambient_(ambient), degree_(degree), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(ambient))
        throw ValidationError("derivation needs a value for every generator");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const Form& v = values_[i];
        if (v.ambient() != ambient)
            throw DimensionMismatch("derivation value over wrong ambient dimension");
        if (!v.is_zero() && (!v.is_homogeneous() || v.degree() != 1 + degree))
            throw ValidationError("derivation of degree " + std::to_string(degree) +
                                  " must send generators to degree " + std::to_string(1 + degree) +
                                  ", violated on e" + std::to_string(i + 1));
    }
}

Form Derivation::operator()(const Form& a) const {
    if (a.ambient() != ambient_)
        throw DimensionMismatch("derivation applied across ambient dimensions");
    Form out(ambient_);
    bool odd = degree_ % 2 != 0;
    for (const auto& [m, c] : a.terms()) {
        auto idx = m.indices();
        for (std::size_t j = 0; j < idx.size(); ++j) {
            const Form& dv = value(idx[j]);
            if (dv.is_zero())
                continue;
            std::uint64_t before = 0, after = 0;
            for (std::size_t t = 0; t < idx.size(); ++t) {
                if (t == j)
                    continue;
                (t < j ? before : after) |= Monomial::generator(idx[t]).mask();
            }
            int sign = (odd && j % 2 != 0) ? -1 : 1;
            Form piece = wedge(Form::term(ambient_, Monomial::from_mask(before), c * sign), dv);
            piece = wedge(piece, Form::term(ambient_, Monomial::from_mask(after), 1));
            out += piece;
        }
    }
    return out;
}

AlgebraMap::AlgebraMap(int ambient, std::vector<Form> images)
    : ambient_(ambient), images_(std::move(images)) {
    if (images_.size() != static_cast<std::size_t>(ambient))
        throw ValidationError("substitution needs an image for every generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const Form& v = images_[i];
        if (v.ambient() != ambient)
            throw DimensionMismatch("substitution image over wrong ambient dimension");
        if (!v.is_zero() && (!v.is_homogeneous() || v.degree() != 1))
            throw ValidationError("substitution images must be 1-forms, violated on e" +
                                  std::to_string(i + 1));
    }
}

AlgebraMap AlgebraMap::identity(int ambient) {
    std::vector<Form> images;
    images.reserve(static_cast<std::size_t>(ambient));
    for (int i = 1; i <= ambient; ++i)
        images.push_back(Form::generator(ambient, i));
    return AlgebraMap(ambient, std::move(images));
}

Form AlgebraMap::operator()(const Form& a) const {
    if (a.ambient() != ambient_)
        throw DimensionMismatch("substitution applied across ambient dimensions");
    Form out(ambient_);
    for (const auto& [m, c] : a.terms()) {
        Form piece = Form::scalar(ambient_, c);
        for (int i : m.indices())
            piece = wedge(piece, image(i));
        out += piece;
    }
    return out;
}

}  // namespace cecoh
