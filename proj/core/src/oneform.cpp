#include "superaudit/oneform.hpp"

#include <ostream>
#include <stdexcept>

namespace superaudit {

OneForm::OneForm(ContextPtr ctx, std::map<std::string, SuperPoly> coeffs_by_name)
    : ctx_(std::move(ctx)) {
    for (auto& [name, f] : coeffs_by_name) {
        int idx = ctx_->require(name);
        require_same_context(f.context(), ctx_, "OneForm coefficient");
        coeffs_.emplace(idx, f);
    }
}

OneForm OneForm::operator+(const OneForm& o) const {
    require_same_context(ctx_, o.ctx_, "OneForm::add");
    std::map<std::string, SuperPoly> out;
    for (const auto& [i, f] : coeffs_) out.emplace(ctx_->at(i).name, f);
    for (const auto& [i, f] : o.coeffs_) {
        auto [it, inserted] = out.emplace(ctx_->at(i).name, f);
        if (!inserted) it->second += f;
    }
    return OneForm(ctx_, std::move(out));
}

OneForm OneForm::operator*(const SuperPoly& g) const {
    std::map<std::string, SuperPoly> out;
    for (const auto& [i, f] : coeffs_) out.emplace(ctx_->at(i).name, f * g);
    return OneForm(ctx_, std::move(out));
}

bool OneForm::operator==(const OneForm& o) const {
    if (!(ctx_ == o.ctx_ || *ctx_ == *o.ctx_)) return false;
    // Compare with zero coefficients dropped on both sides.
    auto nonzero = [](const std::map<int, SuperPoly>& m) {
        std::map<int, SuperPoly> out;
        for (const auto& [i, f] : m)
            if (!f.is_zero()) out.emplace(i, f);
        return out;
    };
    return nonzero(coeffs_) == nonzero(o.coeffs_);
}

std::string OneForm::render() const {
    std::string out;
    for (const auto& [i, f] : coeffs_) {
        if (f.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "d" + ctx_->at(i).name;
        if (!f.is_one()) out += "*" + f.render_factor();
    }
    return out.empty() ? "0" : out;
}

OneForm pullback_one_form(const Morphism& f, const OneForm& omega) {
    require_same_context(omega.context(), f.source(), "pullback_one_form");
    const ContextPtr& tgt = f.target();

    // Coordinates of the result: the same names, resolved in the target.
    std::vector<int> coords;
    for (const auto& [i, coeff] : omega.coefficients())
        coords.push_back(tgt->require(omega.context()->at(i).name));

    std::map<std::string, SuperPoly> out;
    for (int y : coords) out.emplace(tgt->at(y).name, SuperPoly::zero(tgt));
    for (const auto& [x, coeff] : omega.coefficients()) {
        SuperPoly fx = f.image(x);
        SuperPoly fcoeff = f.apply(coeff);
        for (int y : coords) {
            SuperPoly d = derive(Derivation::partial(tgt, y), fx);
            out[tgt->at(y).name] += d * fcoeff;
        }
    }
    return OneForm(tgt, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const OneForm& w) {
    return os << w.render();
}

}  // namespace superaudit
