#pragma once

#include "apolar/form.hpp"
#include "apolar/matrix.hpp"

#include <vector>

namespace apolar {

// How R acts on 𝒟. Differentiation carries falling-factorial coefficients and
// needs characteristic 0 or p larger than every degree in play; contraction is
// pure exponent subtraction and is valid in every characteristic (divided
// power duality).
enum class ActionKind { Differentiation, Contraction };

// h∘F. Degree of the result is deg F − deg h; zero form if every term dies.
Form apply(const Operator& h, const Form& f, ActionKind action);

// Matrix of R_u → 𝒟_{j−u}, h ↦ h∘F: rows indexed by monomial_basis(r, j−u),
// columns by monomial_basis(r, u). rank = (H_F)_{j−u}.
struct Catalecticant {
    int u;
    ActionKind action;
    std::vector<Exponents> row_basis;  // 𝒟_{j−u}
    std::vector<Exponents> col_basis;  // R_u
    ExactMatrix matrix;
};

Catalecticant catalecticant(const Form& f, int u, ActionKind action);

// A space W ⊂ 𝒟_j spanned by linearly independent degree-j forms.
class FormSpace {
public:
    explicit FormSpace(std::vector<Form> generators);  // throws DependentFormsError

    const std::vector<Form>& generators() const { return generators_; }
    std::size_t dim() const { return generators_.size(); }
    int vars() const { return generators_.front().vars(); }
    int degree() const { return generators_.front().degree(); }
    const FieldSpec& field() const { return generators_.front().field(); }

private:
    std::vector<Form> generators_;
};

// Basis of R_u∘W inside 𝒟_{j−u}, as coefficient vectors against
// monomial_basis(r, j−u). Size is H(R/Ann W)_{j−u}.
std::vector<Vec> derivative_space(const FormSpace& w, int u, ActionKind action);

// Same space, but as Forms.
std::vector<Form> derivative_space_forms(const FormSpace& w, int u, ActionKind action);

// Basis of (Ann W)_u = {h ∈ R_u : h∘F = 0 for all F ∈ W}, as coefficient
// vectors against monomial_basis(r, u). For u > deg W this is all of R_u and
// the full standard basis is returned without building a matrix.
std::vector<Vec> annihilator_component(const FormSpace& w, int u, ActionKind action);

std::vector<Operator> annihilator_component_forms(const FormSpace& w, int u, ActionKind action);

}  // namespace apolar
