#pragma once

#include <map>

#include "superaudit/derivation.hpp"
#include "superaudit/morphism.hpp"

namespace superaudit {

// One-form sum(dx * f_x) with differentials on the left and coefficients on
// the right. The keys of the coefficient map are the form's coordinates; the
// differential in pullbacks ranges over exactly these, so any other generator
// of the context (a family parameter such as a scale or a shift) is treated
// as a constant.
class OneForm {
public:
    OneForm(ContextPtr ctx, std::map<std::string, SuperPoly> coeffs_by_name);

    const ContextPtr& context() const { return ctx_; }
    const std::map<int, SuperPoly>& coefficients() const { return coeffs_; }

    OneForm operator+(const OneForm& o) const;
    OneForm operator*(const SuperPoly& f) const;  // scales every coefficient on the right

    bool operator==(const OneForm& o) const;
    bool operator!=(const OneForm& o) const { return !(*this == o); }

    // "dx1*f1 + dx2*f2 + ..." with unit coefficients elided.
    std::string render() const;

private:
    ContextPtr ctx_;
    std::map<int, SuperPoly> coeffs_;
};

// pull(F, sum dx*f_x) = sum d(F(x))*F(f_x), with d expanded over the form's
// coordinates re-resolved by name in F's target context.
OneForm pullback_one_form(const Morphism& f, const OneForm& omega);

std::ostream& operator<<(std::ostream& os, const OneForm& w);

}  // namespace superaudit
