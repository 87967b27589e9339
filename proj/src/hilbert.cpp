#include "apolar/hilbert.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <sstream>

namespace apolar {

bool HilbertSeq::termwise_le(const HilbertSeq& o) const {
    if (values.size() != o.values.size())
        throw DimensionMismatchError("termwise_le: unequal socle degrees");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] > o.values[i]) return false;
    return true;
}

std::string HilbertSeq::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ' ';
        os << values[i];
    }
    return os.str();
}

HilbertSeq termwise_max(const HilbertSeq& a, const HilbertSeq& b) {
    if (a.values.size() != b.values.size())
        throw DimensionMismatchError("termwise_max: unequal socle degrees");
    HilbertSeq out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = std::max(out.values[i], b.values[i]);
    return out;
}

HilbertSeq hilbert_of_form(const Form& f, ActionKind action) {
    if (f.is_zero()) throw DependentFormsError("hilbert_of_form: zero form");
    const int j = f.degree();
    std::vector<long> h(j + 1, 0);
    for (int u = 0; u <= j; ++u) h[j - u] = static_cast<long>(rank(catalecticant(f, u, action).matrix));
    return HilbertSeq(std::move(h), f.vars());
}

HilbertSeq hilbert_of_space(const FormSpace& w, ActionKind action) {
    const int j = w.degree();
    std::vector<long> h(j + 1, 0);
    for (int u = 0; u <= j; ++u)
        h[j - u] = static_cast<long>(derivative_space(w, u, action).size());
    return HilbertSeq(std::move(h), w.vars());
}

std::vector<long> overlap_dimension(const Form& f, const Form& g, ActionKind action) {
    FormSpace w({f, g});  // verifies independence
    const int j = f.degree();
    HilbertSeq hf = hilbert_of_form(f, action);
    HilbertSeq hg = hilbert_of_form(g, action);
    HilbertSeq ha = hilbert_of_space(w, action);
    std::vector<long> d(j + 1, 0);
    FormSpace wf({f}), wg({g});
    for (int u = 0; u <= j; ++u) {
        int i = j - u;
        long arithmetic = hf[i] + hg[i] - ha[i];
        std::vector<Vec> sf = derivative_space(wf, u, action);
        std::vector<Vec> sg = derivative_space(wg, u, action);
        std::size_t dim = monomial_basis(f.vars(), i).size();
        long direct = static_cast<long>(subspace_dims(sf, sg, dim, f.field()).dint);
        if (arithmetic != direct) {
            throw SelfCheckError("overlap_dimension: intersection and arithmetic routes disagree "
                                 "at degree " + std::to_string(i));
        }
        d[i] = direct;
    }
    return d;
}

std::vector<long> t_dimension(const Form& f, const Form& g, ActionKind action) {
    FormSpace w({f, g});
    const int j = f.degree();
    FormSpace wf({f}), wg({g});
    std::vector<long> t(j + 1, 0);
    for (int u = 0; u <= j; ++u) {
        int i = j - u;
        std::vector<Exponents> target = monomial_basis(f.vars(), i);
        std::vector<Vec> s1, s2;
        for (const Operator& h : annihilator_component_forms(wf, u, action))
            s1.push_back(apply(h, g, action).coefficient_vector(target));
        for (const Operator& h : annihilator_component_forms(wg, u, action))
            s2.push_back(apply(h, f, action).coefficient_vector(target));
        t[i] = static_cast<long>(subspace_dims(s1, s2, target.size(), f.field()).dint);
    }
    return t;
}

HilbertSeq hplus_sum(const HilbertSeq& h1, const HilbertSeq& h2) {
    if (h1.values.size() != h2.values.size() || h1.r != h2.r)
        throw DimensionMismatchError("hplus_sum: shape mismatch");
    HilbertSeq out = h1;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = std::min(static_cast<long>(dim_r(h1.r, static_cast<int>(i))),
                                 h1.values[i] + h2.values[i]);
    return out;
}

long macaulay_growth_bound(long value, int d) {
    if (d < 1) throw DimensionMismatchError("macaulay_growth_bound: need d >= 1");
    if (value == 0) return 0;
    // Greedy d-th Macaulay representation: value = C(a_d,d) + C(a_{d-1},d-1) + …
    BigInt bound = 0;
    BigInt rem = value;
    int i = d;
    while (rem > 0 && i >= 1) {
        long a = i;
        while (binomial(a + 1, i) <= rem) ++a;
        rem -= binomial(a, i);
        bound += binomial(a + 1, i + 1);
        --i;
    }
    return static_cast<long>(bound);
}

OSequenceVerdict is_o_sequence(const HilbertSeq& h) {
    if (h.values.empty()) return {};
    if (h.values[0] != 1) return {false, 0};
    for (std::size_t d = 1; d + 1 <= h.values.size(); ++d) {
        if (h.values[d] < 0) return {false, static_cast<int>(d)};
        if (d + 1 == h.values.size()) break;
        long cap = macaulay_growth_bound(h.values[d], static_cast<int>(d));
        if (h.values[d + 1] > cap) return {false, static_cast<int>(d + 1)};
    }
    return {};
}

bool symmetry_check(const HilbertSeq& h) {
    const std::size_t n = h.values.size();
    for (std::size_t i = 0; i < n; ++i)
        if (h.values[i] != h.values[n - 1 - i]) return false;
    return true;
}

HilbertSeq compressed_bound(int r, int j, int t) {
    if (t < 1) throw DimensionMismatchError("compressed_bound: need t >= 1");
    std::vector<long> h(j + 1, 0);
    for (int i = 0; i <= j; ++i)
        h[i] = std::min(dim_r(r, i), static_cast<long>(t) * dim_r(r, j - i));
    return HilbertSeq(std::move(h), r);
}

std::vector<long> socle_type(const FormSpace& w, ActionKind action) {
    const int j = w.degree();
    const int r = w.vars();
    std::vector<long> out(j + 1, 0);
    std::vector<Form> above;  // basis of M_{i+1}
    for (int i = j; i >= 0; --i) {
        std::vector<Form> mi = derivative_space_forms(w, j - i, action);
        std::vector<Exponents> target = monomial_basis(r, i);
        std::vector<Vec> pushed;
        for (const Form& f : above) {
            for (int k = 0; k < r; ++k) {
                Exponents e(r, 0);
                e[k] = 1;
                Operator xk(r, 1, w.field());
                xk.add_term(e, Scalar::one(w.field()));
                pushed.push_back(apply(xk, f, action).coefficient_vector(target));
            }
        }
        std::size_t generated = span_basis(pushed, target.size(), w.field()).size();
        out[i] = static_cast<long>(mi.size() - generated);
        above = std::move(mi);
    }
    return out;
}

bool check_level_condition(const FormSpace& w, ActionKind action) {
    const int j = w.degree();
    const int r = w.vars();
    const FieldSpec field = w.field();
    for (int i = 1; i <= j; ++i) {
        std::vector<Exponents> ri = monomial_basis(r, i);
        std::vector<Exponents> rji = monomial_basis(r, j - i);
        // f = Σ c_m·m lies in I_j : R_{j−i} iff (g·m)∘F = 0 for every monomial
        // g of R_{j−i} and every generator F; one linear constraint per (g,F).
        ExactMatrix constraints(rji.size() * w.dim(), ri.size(), field);
        std::size_t row = 0;
        for (const Exponents& ge : rji) {
            Operator g(r, j - i, field);
            g.add_term(ge, Scalar::one(field));
            for (const Form& f : w.generators()) {
                for (std::size_t c = 0; c < ri.size(); ++c) {
                    Operator m(r, i, field);
                    m.add_term(ri[c], Scalar::one(field));
                    Form val = apply(multiply(g, m), f, action);
                    constraints.at(row, c) =
                        val.is_zero() ? Scalar::zero(field) : val.terms().begin()->second;
                }
                ++row;
            }
        }
        std::vector<Vec> colon = kernel_basis(constraints);
        std::vector<Vec> ann = annihilator_component(w, i, action);
        SubspaceDims dims = subspace_dims(colon, ann, ri.size(), field);
        if (dims.d1 != dims.d2 || dims.dint != dims.d1) return false;
    }
    return true;
}

}  // namespace apolar
