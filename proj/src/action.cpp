#include "apolar/action.hpp"

#include "apolar/errors.hpp"

namespace apolar {

namespace {

void check_action(ActionKind action, const FieldSpec& field, int max_degree) {
    if (action == ActionKind::Differentiation) {
        std::int64_t ch = field.characteristic();
        if (ch != 0 && ch <= max_degree) {
            throw ConfigError("differentiation action invalid over " + field.to_string() +
                              " at degree " + std::to_string(max_degree) +
                              "; use the contraction action");
        }
    }
}

// x^a ∘ X^b for b ≥ a componentwise: falling-factorial multiplier for
// differentiation, 1 for contraction.
BigInt action_multiplier(const Exponents& a, const Exponents& b, ActionKind action) {
    if (action == ActionKind::Contraction) return 1;
    BigInt m = 1;
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (int t = 0; t < a[k]; ++t) m *= b[k] - t;
    }
    return m;
}

}  // namespace

Form apply(const Operator& h, const Form& f, ActionKind action) {
    if (h.vars() != f.vars()) throw DimensionMismatchError("apply: ring mismatch");
    if (h.degree() > f.degree()) throw DimensionMismatchError("apply: deg h exceeds deg F");
    check_action(action, f.field(), f.degree());
    Form out(f.vars(), f.degree() - h.degree(), f.field());
    for (const auto& [a, ch] : h.terms()) {
        for (const auto& [b, cf] : f.terms()) {
            bool divides = true;
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (b[k] < a[k]) {
                    divides = false;
                    break;
                }
            }
            if (!divides) continue;
            Exponents e(b);
            for (std::size_t k = 0; k < e.size(); ++k) e[k] -= a[k];
            Scalar c = ch * cf * Scalar(f.field(), BigRational(action_multiplier(a, b, action)));
            out.add_term(e, c);
        }
    }
    return out;
}

Catalecticant catalecticant(const Form& f, int u, ActionKind action) {
    const int j = f.degree();
    if (u < 0 || u > j) throw DimensionMismatchError("catalecticant: order out of range");
    check_action(action, f.field(), j);
    std::vector<Exponents> rows = monomial_basis(f.vars(), j - u);
    std::vector<Exponents> cols = monomial_basis(f.vars(), u);
    ExactMatrix m(rows.size(), cols.size(), f.field());
    for (std::size_t cj = 0; cj < cols.size(); ++cj) {
        Operator h(f.vars(), u, f.field());
        h.add_term(cols[cj], Scalar::one(f.field()));
        Form img = apply(h, f, action);
        std::vector<Scalar> col = img.coefficient_vector(rows);
        for (std::size_t ri = 0; ri < rows.size(); ++ri) m.at(ri, cj) = col[ri];
    }
    return Catalecticant{u, action, std::move(rows), std::move(cols), std::move(m)};
}

FormSpace::FormSpace(std::vector<Form> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw DependentFormsError("FormSpace: no generators");
    const Form& g0 = generators_.front();
    std::vector<Exponents> basis = monomial_basis(g0.vars(), g0.degree());
    std::vector<Vec> vecs;
    for (const Form& g : generators_) {
        if (g.vars() != g0.vars() || g.degree() != g0.degree() || g.field() != g0.field()) {
            throw DimensionMismatchError("FormSpace: generators in different ring contexts");
        }
        vecs.push_back(g.coefficient_vector(basis));
    }
    std::vector<Vec> rows = vecs;
    if (span_basis(rows, basis.size(), g0.field()).size() != generators_.size()) {
        throw DependentFormsError("FormSpace: generators are linearly dependent");
    }
}

std::vector<Vec> derivative_space(const FormSpace& w, int u, ActionKind action) {
    const int j = w.degree();
    std::vector<Exponents> target = monomial_basis(w.vars(), j - u);
    std::vector<Vec> images;
    for (const Form& g : w.generators()) {
        Catalecticant cat = catalecticant(g, u, action);
        for (std::size_t c = 0; c < cat.col_basis.size(); ++c) {
            Vec v(target.size(), Scalar::zero(w.field()));
            for (std::size_t r = 0; r < target.size(); ++r) v[r] = cat.matrix.at(r, c);
            images.push_back(std::move(v));
        }
    }
    return span_basis(images, target.size(), w.field());
}

std::vector<Form> derivative_space_forms(const FormSpace& w, int u, ActionKind action) {
    std::vector<Exponents> target = monomial_basis(w.vars(), w.degree() - u);
    std::vector<Form> out;
    for (const Vec& v : derivative_space(w, u, action)) {
        out.push_back(
            Form::from_coefficient_vector(target, v, w.vars(), w.degree() - u, w.field()));
    }
    return out;
}

std::vector<Vec> annihilator_component(const FormSpace& w, int u, ActionKind action) {
    const int j = w.degree();
    std::vector<Exponents> cols = monomial_basis(w.vars(), u);
    if (u > j) {
        // 𝒟 has nothing below degree 0, so all of R_u annihilates.
        std::vector<Vec> full;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            Vec v(cols.size(), Scalar::zero(w.field()));
            v[i] = Scalar::one(w.field());
            full.push_back(std::move(v));
        }
        return full;
    }
    // Stack the catalecticants of all generators: h annihilates W iff h∘g = 0
    // for every generator g.
    std::size_t target_dim = monomial_basis(w.vars(), j - u).size();
    ExactMatrix stacked(target_dim * w.dim(), cols.size(), w.field());
    for (std::size_t gi = 0; gi < w.dim(); ++gi) {
        Catalecticant cat = catalecticant(w.generators()[gi], u, action);
        for (std::size_t r = 0; r < target_dim; ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                stacked.at(gi * target_dim + r, c) = cat.matrix.at(r, c);
    }
    return kernel_basis(stacked);
}

std::vector<Operator> annihilator_component_forms(const FormSpace& w, int u, ActionKind action) {
    std::vector<Exponents> basis = monomial_basis(w.vars(), u);
    std::vector<Operator> out;
    for (const Vec& v : annihilator_component(w, u, action)) {
        out.push_back(Form::from_coefficient_vector(basis, v, w.vars(), u, w.field()));
    }
    return out;
}

}  // namespace apolar
