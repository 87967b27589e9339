#pragma once

#include "apolar/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace apolar {

// Exponent tuple of a monomial in r variables.
using Exponents = std::vector<int>;

int degree(const Exponents& e);

// Strict total order: higher degree first, then lexicographic with X1 > X2 > …
// Canonical bases and printed terms follow this order (descending).
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// All degree-d exponent tuples in r variables, in canonical (descending
// graded-lex) order. Length is C(d+r−1, r−1).
std::vector<Exponents> monomial_basis(int r, int d);

BigInt binomial(long n, long k);
long dim_r(int r, int d);  // dim R_d = C(d+r−1, r−1); 0 for d < 0

// Homogeneous polynomial in r variables of one fixed degree, sparse map from
// exponent tuple to nonzero coefficient. Used both for forms in the dual ring
// 𝒟 (capital X_i) and for operators in R (lowercase x_i).
class Form {
public:
    using TermMap = std::map<Exponents, Scalar, GradedLexGreater>;

    Form(int vars, int deg, FieldSpec field);

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    const FieldSpec& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c·X^e; drops the term if the total cancels. Throws
    // DimensionMismatchError if e has the wrong shape or degree.
    void add_term(const Exponents& e, const Scalar& c);

    Scalar coefficient(const Exponents& e) const;

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form scaled(const Scalar& c) const;

    bool operator==(const Form& o) const;
    bool operator!=(const Form& o) const { return !(*this == o); }

    // Coefficients against a monomial basis of 𝒟_degree, in basis order.
    std::vector<Scalar> coefficient_vector(const std::vector<Exponents>& basis) const;
    static Form from_coefficient_vector(const std::vector<Exponents>& basis,
                                        const std::vector<Scalar>& coeffs, int vars, int deg,
                                        FieldSpec field);

private:
    int vars_;
    int degree_;
    FieldSpec field_;
    TermMap terms_;
};

// Operators in R share the representation of forms in 𝒟.
using Operator = Form;

// Exact product in R; degrees add.
Operator multiply(const Operator& a, const Operator& b);

// Grammar: terms joined by '+'/'-'; term ::= [coeff] {'*'? var ['^' exp]}+ ;
// coeff ::= integer | integer '/' integer ; var ::= 'X'i, or alias X,Y,Z,W for
// r ≤ 4 (case-insensitive). Whitespace ignored. The zero polynomial is
// rejected: pencil generators must be nonzero forms of a defined degree.
Form parse_form(const std::string& text, int r, FieldSpec field);

// Canonical printing: terms in graded-lex order, coefficients in lowest terms.
// parse_form(to_string(F)) == F. `lowercase` prints R-operators (x, y, …).
std::string to_string(const Form& f, bool lowercase = false);

}  // namespace apolar
