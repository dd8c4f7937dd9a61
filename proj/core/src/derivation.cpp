#include "superaudit/derivation.hpp"

#include <ostream>
#include <stdexcept>

namespace superaudit {

Derivation::Derivation(Parity parity, ContextPtr ctx,
                       std::map<std::string, SuperPoly> images_by_name)
    : parity_(parity), ctx_(std::move(ctx)) {
    images_.reserve(ctx_->size());
    for (int i = 0; i < static_cast<int>(ctx_->size()); ++i) {
        const Generator& g = ctx_->at(i);
        auto it = images_by_name.find(g.name);
        if (it == images_by_name.end()) {
            images_.push_back(SuperPoly::zero(ctx_));
            continue;
        }
        require_same_context(it->second.context(), ctx_, "Derivation image");
        if (!it->second.matches_parity(g.parity + parity_))
            throw std::invalid_argument("Derivation: image of '" + g.name +
                                        "' violates the parity rule");
        images_.push_back(it->second);
        images_by_name.erase(it);
    }
    if (!images_by_name.empty())
        throw std::invalid_argument("Derivation: image map names a generator outside the context");
}

Derivation Derivation::zero(Parity parity, const ContextPtr& ctx) {
    return Derivation(parity, ctx, {});
}

Derivation Derivation::partial(const ContextPtr& ctx, const std::string& name) {
    return partial(ctx, ctx->require(name));
}

Derivation Derivation::partial(const ContextPtr& ctx, int index) {
    std::map<std::string, SuperPoly> images;
    images.emplace(ctx->at(index).name, SuperPoly::one(ctx));
    return Derivation(ctx->parity(index), ctx, std::move(images));
}

bool Derivation::is_zero() const {
    for (const SuperPoly& f : images_)
        if (!f.is_zero()) return false;
    return true;
}

SuperPoly Derivation::operator()(const SuperPoly& f) const { return derive(*this, f); }

Derivation Derivation::operator+(const Derivation& o) const {
    require_same_context(ctx_, o.ctx_, "Derivation::add");
    if (parity_ != o.parity_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("Derivation::add: parity mismatch");
    std::map<std::string, SuperPoly> images;
    for (int i = 0; i < static_cast<int>(ctx_->size()); ++i)
        images.emplace(ctx_->at(i).name,
                       images_[static_cast<std::size_t>(i)] + o.images_[static_cast<std::size_t>(i)]);
    return Derivation(is_zero() ? o.parity_ : parity_, ctx_, std::move(images));
}

Derivation Derivation::operator-() const {
    std::map<std::string, SuperPoly> images;
    for (int i = 0; i < static_cast<int>(ctx_->size()); ++i)
        images.emplace(ctx_->at(i).name, -images_[static_cast<std::size_t>(i)]);
    return Derivation(parity_, ctx_, std::move(images));
}

Derivation Derivation::operator*(const GaussianRational& c) const {
    std::map<std::string, SuperPoly> images;
    for (int i = 0; i < static_cast<int>(ctx_->size()); ++i)
        images.emplace(ctx_->at(i).name, images_[static_cast<std::size_t>(i)] * c);
    return Derivation(parity_, ctx_, std::move(images));
}

Derivation operator*(const SuperPoly& f, const Derivation& x) {
    require_same_context(f.context(), x.context(), "SuperPoly*Derivation");
    auto fp = f.parity();
    if (!fp) throw std::invalid_argument("SuperPoly*Derivation: coefficient must be homogeneous");
    std::map<std::string, SuperPoly> images;
    for (int i = 0; i < static_cast<int>(x.ctx_->size()); ++i)
        images.emplace(x.ctx_->at(i).name, f * x.images_[static_cast<std::size_t>(i)]);
    return Derivation(f.is_zero() ? x.parity_ : *fp + x.parity_, x.ctx_, std::move(images));
}

bool Derivation::operator==(const Derivation& o) const {
    if (!(ctx_ == o.ctx_ || *ctx_ == *o.ctx_)) return false;
    if (images_ != o.images_) return false;
    return is_zero() || parity_ == o.parity_;
}

std::string Derivation::render() const {
    std::string out;
    for (int i = 0; i < static_cast<int>(ctx_->size()); ++i) {
        const SuperPoly& f = images_[static_cast<std::size_t>(i)];
        if (f.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (f.is_one())
            out += "d/d" + ctx_->at(i).name;
        else
            out += f.render_factor() + "*d/d" + ctx_->at(i).name;
    }
    return out.empty() ? "0" : out;
}

SuperPoly derive(const Derivation& x, const SuperPoly& f) {
    require_same_context(x.context(), f.context(), "derive");
    const ContextPtr& ctx = x.context();
    const bool x_odd = x.parity() == Parity::odd;
    SuperPoly out = SuperPoly::zero(ctx);

    for (const auto& [m, c] : f.terms()) {
        // Even factors first (they contribute no Koszul signs), then the odd
        // factors in canonical order.
        for (std::size_t s = 0; s < m.even_exps.size(); ++s) {
            std::int32_t e = m.even_exps[s];
            if (e == 0) continue;
            int gi = ctx->even_indices()[s];
            const SuperPoly& xg = x.image(gi);
            if (xg.is_zero()) continue;
            Monomial rest = m;
            rest.even_exps[s] = e - 1;
            rest.odd.clear();
            Monomial odds;
            odds.even_exps.assign(m.even_exps.size(), 0);
            odds.odd = m.odd;
            SuperPoly term = SuperPoly::from_term(ctx, rest, c * GaussianRational(e));
            out += term * xg * SuperPoly::from_term(ctx, odds, GaussianRational(1));
        }
        for (std::size_t j = 0; j < m.odd.size(); ++j) {
            int gi = m.odd[static_cast<std::size_t>(j)];
            const SuperPoly& xg = x.image(gi);
            if (xg.is_zero()) continue;
            // X passes the even factors (parity 0) and the first j odd ones.
            GaussianRational coeff = (x_odd && j % 2 == 1) ? -c : c;
            Monomial left;
            left.even_exps = m.even_exps;
            left.odd.assign(m.odd.begin(), m.odd.begin() + static_cast<long>(j));
            Monomial right;
            right.even_exps.assign(m.even_exps.size(), 0);
            right.odd.assign(m.odd.begin() + static_cast<long>(j) + 1, m.odd.end());
            SuperPoly term = SuperPoly::from_term(ctx, left, coeff);
            out += term * xg * SuperPoly::from_term(ctx, right, GaussianRational(1));
        }
    }
    return out;
}

Derivation bracket(const Derivation& x, const Derivation& y) {
    require_same_context(x.context(), y.context(), "bracket");
    const ContextPtr& ctx = x.context();
    const bool both_odd = x.parity() == Parity::odd && y.parity() == Parity::odd;
    std::map<std::string, SuperPoly> images;
    for (int i = 0; i < static_cast<int>(ctx->size()); ++i) {
        SuperPoly xy = derive(x, y.image(i));
        SuperPoly yx = derive(y, x.image(i));
        images.emplace(ctx->at(i).name, both_odd ? xy + yx : xy - yx);
    }
    return Derivation(x.parity() + y.parity(), ctx, std::move(images));
}

Derivation conjugate_derivation(const Morphism& f, const Morphism& f_inv, const Derivation& x) {
    if (!certified_inverse(f, f_inv))
        throw std::invalid_argument("conjugate_derivation: supplied maps are not two-sided inverses");
    require_same_context(x.context(), f.target(), "conjugate_derivation");
    std::map<std::string, SuperPoly> images;
    const ContextPtr& src = f.source();
    for (int i = 0; i < static_cast<int>(src->size()); ++i)
        images.emplace(src->at(i).name, f_inv.apply(derive(x, f.image(i))));
    return Derivation(x.parity(), src, std::move(images));
}

std::ostream& operator<<(std::ostream& os, const Derivation& x) {
    return os << x.render();
}

}  // namespace superaudit
