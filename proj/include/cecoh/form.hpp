#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cecoh/errors.hpp"
#include "cecoh/rational.hpp"

namespace cecoh {

/// Exterior monomial e^{i1} ∧ ... ∧ e^{ik} with strictly increasing 1-based
/// indices, stored as an index bitmask (bit i-1 set ⇔ e^i is a factor).
/// The empty monomial is the unit of degree 0.
///
/// The bitmask covers ambient dimensions up to the machine word; beyond 64
/// generators the mask would have to be chunked into words, which nothing in
/// the shipped corpus (n ≤ 9) needs.
class Monomial {
public:
    static constexpr int max_generators = 64;

    Monomial() : bits_(0) {}

    static Monomial unit() { return Monomial(); }
    static Monomial generator(int i);
    static Monomial from_mask(std::uint64_t bits) { return Monomial(bits); }
    static Monomial from_indices(const std::vector<int>& indices);

    std::uint64_t mask() const { return bits_; }
    int degree() const;
    bool is_unit() const { return bits_ == 0; }
    bool contains(int i) const;
    /// 1-based indices in increasing order.
    std::vector<int> indices() const;

    bool operator==(const Monomial&) const = default;

private:
    explicit Monomial(std::uint64_t b) : bits_(b) {}
    std::uint64_t bits_;
};

struct MonomialWedge {
    Monomial mono;
    int sign;  // +1 or -1
};

/// Merge of two monomials with the parity of the sorting permutation;
/// nullopt when an index repeats.
std::optional<MonomialWedge> wedge_monomials(Monomial a, Monomial b);

/// Graded order, then lexicographic on the increasing index sequences:
/// e^{12} < e^{13} < e^{14} < e^{23} < ...
struct MonomialOrder {
    bool operator()(Monomial a, Monomial b) const;
};

std::string to_string(Monomial m);

/// Rational linear combination of exterior monomials over a fixed ambient
/// generator count. Zero coefficients are never stored, so two forms are
/// equal iff their term maps are equal. Sums of mixed degree are allowed;
/// operations distribute over the homogeneous parts.
class Form {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    explicit Form(int ambient);

    static Form zero(int ambient) { return Form(ambient); }
    static Form scalar(int ambient, const Rational& c);
    static Form one(int ambient) { return scalar(ambient, 1); }
    static Form generator(int ambient, int i);
    static Form term(int ambient, Monomial m, const Rational& c);

    int ambient() const { return ambient_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /// Degree of a homogeneous form; the zero form reports 0.
    int degree() const;
    int top_degree() const;
    Form homogeneous_part(int k) const;
    Rational coeff(Monomial m) const;
    const Terms& terms() const { return terms_; }

    Form& add_term(Monomial m, const Rational& c);  // accumulates, drops zeros

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const Rational& c);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Rational& c, Form a) { return a *= c; }

    bool operator==(const Form& o) const;

    std::string str() const;

private:
    int ambient_;
    Terms terms_;
};

/// Graded-commutative exterior product. Throws DimensionMismatch.
Form wedge(const Form& a, const Form& b);
Form wedge_power(const Form& a, int k);

/// Parses the textual form syntax: terms "±p/q e{i}{j}..." joined by +/-,
/// e.g. "e14 + e23", "2 e1245", "-1/2 e3", "0". Indices are single digits
/// 1..9 (the corpus never exceeds nine generators); out-of-range indices
/// throw. Unsorted or repeated indices are accepted and canonicalized.
Form parse_form(int ambient, std::string_view text);

/// Element of the underlying vector space in generator coordinates;
/// Reeb fields live here.
class Vector {
public:
    explicit Vector(int ambient);
    Vector(int ambient, std::vector<Rational> coords);
    static Vector basis(int ambient, int i);

    int ambient() const { return ambient_; }
    /// 1-based coordinate against e_i.
    const Rational& coord(int i) const;
    Rational& coord(int i);
    const std::vector<Rational>& coords() const { return coords_; }

    bool operator==(const Vector&) const = default;
    std::string str() const;  // "[0, 0, 1]"

private:
    int ambient_;
    std::vector<Rational> coords_;
};

/// Interior product: the degree -1 antiderivation with ι_x(e^i) = x_i.
Form contract(const Vector& x, const Form& a);

/// Graded derivation of the exterior algebra, determined by its values on
/// generators and extended by the signed Leibniz rule
///   D(u ∧ v) = D(u) ∧ v + (-1)^{r·|u|} u ∧ D(v)
/// for a derivation of degree r. Covers the differential (r = +1),
/// contractions (r = -1) and the degree -1 derivations used by the
/// 1-Lefschetz analysis.
class Derivation {
public:
    /// `values[i-1]` is D(e^i); each must be zero or homogeneous of degree
    /// 1 + r. Throws ValidationError on a degree-inconsistent assignment.
    Derivation(int ambient, int degree, std::vector<Form> values);

    int ambient() const { return ambient_; }
    int degree() const { return degree_; }
    const Form& value(int i) const { return values_[static_cast<std::size_t>(i) - 1]; }

    Form operator()(const Form& a) const;

private:
    int ambient_;
    int degree_;
    std::vector<Form> values_;
};

/// Degree-preserving algebra endomorphism given by a generator substitution
/// e^i ↦ image_i (1-forms), extended multiplicatively and linearly.
class AlgebraMap {
public:
    AlgebraMap(int ambient, std::vector<Form> images);
    static AlgebraMap identity(int ambient);

    int ambient() const { return ambient_; }
    const Form& image(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }

    Form operator()(const Form& a) const;

private:
    int ambient_;
    std::vector<Form> images_;
};

}  // namespace cecoh
