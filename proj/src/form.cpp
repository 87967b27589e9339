#include "apolar/form.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace apolar {

int degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic, X1 weighs most
}

std::vector<Exponents> monomial_basis(int r, int d) {
    std::vector<Exponents> out;
    Exponents e(r, 0);
    // Descending lex enumeration via recursion on the first variable.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == r - 1) {
            e[pos] = remaining;
            out.push_back(e);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[pos] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    if (r > 0 && d >= 0) rec(rec, 0, d);
    return out;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

long dim_r(int r, int d) {
    if (d < 0) return 0;
    return static_cast<long>(binomial(d + r - 1, r - 1));
}

Form::Form(int vars, int deg, FieldSpec field) : vars_(vars), degree_(deg), field_(field) {}

void Form::add_term(const Exponents& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != vars_ || apolar::degree(e) != degree_) {
        throw DimensionMismatchError("add_term: exponent tuple does not match ring context");
    }
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Form::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Form Form::operator+(const Form& o) const {
    Form out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Form Form::operator-(const Form& o) const {
    Form out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

Form Form::scaled(const Scalar& c) const {
    Form out(vars_, degree_, field_);
    if (c.is_zero()) return out;
    for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
    return out;
}

bool Form::operator==(const Form& o) const {
    return vars_ == o.vars_ && degree_ == o.degree_ && terms_ == o.terms_;
}

std::vector<Scalar> Form::coefficient_vector(const std::vector<Exponents>& basis) const {
    std::vector<Scalar> out;
    out.reserve(basis.size());
    for (const Exponents& e : basis) out.push_back(coefficient(e));
    return out;
}

Form Form::from_coefficient_vector(const std::vector<Exponents>& basis,
                                   const std::vector<Scalar>& coeffs, int vars, int deg,
                                   FieldSpec field) {
    if (basis.size() != coeffs.size())
        throw DimensionMismatchError("from_coefficient_vector: length mismatch");
    Form f(vars, deg, field);
    for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coeffs[i]);
    return f;
}

Operator multiply(const Operator& a, const Operator& b) {
    Operator out(a.vars(), a.degree() + b.degree(), a.field());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e(ea);
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    int r;
    FieldSpec field;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    // Unicode minus U+2212 (0xE2 0x88 0x92) is accepted alongside '-'.
    bool eat_minus() {
        skip_ws();
        if (eat('-')) return true;
        if (pos + 2 < text.size() && static_cast<unsigned char>(text[pos]) == 0xE2 &&
            static_cast<unsigned char>(text[pos + 1]) == 0x88 &&
            static_cast<unsigned char>(text[pos + 2]) == 0x92) {
            pos += 3;
            return true;
        }
        return false;
    }

    BigInt integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", start);
        return BigInt(text.substr(start, pos - start));
    }

    bool peek_digit() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    // Returns a 0-based variable index, or -1 if no variable starts here.
    int try_variable() {
        skip_ws();
        if (pos >= text.size()) return -1;
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
        std::size_t start = pos;
        int idx = -1;
        if (c == 'X') {
            ++pos;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::size_t nstart = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                idx = std::stoi(text.substr(nstart, pos - nstart)) - 1;
            } else {
                idx = 0;
            }
        } else if (c == 'Y' || c == 'Z' || c == 'W') {
            if (r > 4) return -1;  // aliases only for small r
            ++pos;
            idx = c == 'Y' ? 1 : c == 'Z' ? 2 : 3;
        } else {
            return -1;
        }
        if (idx < 0 || idx >= r) {
            throw ParseError("variable index out of range for r=" + std::to_string(r), start);
        }
        return idx;
    }

    // One signed term; appends (coefficient, exponents).
    void term(std::vector<std::pair<Scalar, Exponents>>& out, bool negative) {
        Scalar coeff = Scalar::one(field);
        bool saw_anything = false;
        if (peek_digit()) {
            BigInt num = integer();
            BigInt den = 1;
            if (eat('/')) den = integer();
            if (den == 0) throw ParseError("zero denominator", pos);
            coeff = Scalar(field, BigRational(num, den));
            saw_anything = true;
        }
        Exponents e(r, 0);
        for (;;) {
            std::size_t save = pos;
            bool star = eat('*');
            int idx = try_variable();
            if (idx < 0) {
                if (star) throw ParseError("expected variable after '*'", pos);
                pos = save;
                break;
            }
            int exp = 1;
            if (eat('^')) {
                BigInt b = integer();
                exp = static_cast<int>(b);
            }
            e[idx] += exp;
            saw_anything = true;
        }
        if (!saw_anything) throw ParseError("expected term", pos);
        if (negative) coeff = -coeff;
        out.emplace_back(coeff, e);
    }
};

}  // namespace

Form parse_form(const std::string& text, int r, FieldSpec field) {
    if (r < 1) throw ConfigError("parse_form: need r >= 1");
    Parser p{text, 0, r, field};
    std::vector<std::pair<Scalar, Exponents>> parsed;
    bool neg = p.eat_minus();
    p.term(parsed, neg);
    for (;;) {
        p.skip_ws();
        if (p.pos >= text.size()) break;
        if (p.eat('+')) {
            p.term(parsed, false);
        } else if (p.eat_minus()) {
            p.term(parsed, true);
        } else {
            throw ParseError("unexpected character '" + std::string(1, text[p.pos]) + "'", p.pos);
        }
    }

    std::set<int> degrees;
    for (const auto& [c, e] : parsed) degrees.insert(degree(e));
    if (degrees.size() > 1) {
        std::ostringstream msg;
        msg << "form is not homogeneous: term degrees {";
        bool first = true;
        for (int d : degrees) {
            if (!first) msg << ", ";
            msg << d;
            first = false;
        }
        msg << "}";
        throw ParseError(msg.str(), 0);
    }

    Form f(r, *degrees.begin(), field);
    for (const auto& [c, e] : parsed) f.add_term(e, c);
    if (f.is_zero()) {
        throw ParseError("zero is not a valid homogeneous form of defined degree", 0);
    }
    return f;
}

namespace {

std::string variable_name(int idx, int r, bool lowercase) {
    static const char* upper[] = {"X", "Y", "Z", "W"};
    static const char* lower[] = {"x", "y", "z", "w"};
    if (r <= 4) return lowercase ? lower[idx] : upper[idx];
    return (lowercase ? "x" : "X") + std::to_string(idx + 1);
}

std::string coeff_string(const BigRational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

std::string to_string(const Form& f, bool lowercase) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        BigRational q = c.value();
        bool negative = q < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        BigRational mag = negative ? BigRational(-q) : q;
        bool constant = degree(e) == 0;
        bool wrote_coeff = false;
        if (mag != 1 || constant) {
            os << coeff_string(mag);
            wrote_coeff = true;
        }
        bool first_factor = !wrote_coeff;
        for (int k = 0; k < f.vars(); ++k) {
            if (e[k] == 0) continue;
            if (!first_factor) os << "*";
            os << variable_name(k, f.vars(), lowercase);
            if (e[k] > 1) os << "^" << e[k];
            first_factor = false;
        }
        first = false;
    }
    return os.str();
}

}  // namespace apolar
