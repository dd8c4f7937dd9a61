#include "superaudit/morphism.hpp"

#include <stdexcept>

namespace superaudit {

Morphism::Morphism(ContextPtr source, ContextPtr target,
                   std::map<std::string, SuperPoly> images_by_name)
    : source_(std::move(source)), target_(std::move(target)) {
    images_.reserve(source_->size());
    for (int i = 0; i < static_cast<int>(source_->size()); ++i) {
        const Generator& g = source_->at(i);
        auto it = images_by_name.find(g.name);
        if (it == images_by_name.end())
            throw std::invalid_argument("Morphism: missing image for generator '" + g.name + "'");
        require_same_context(it->second.context(), target_, "Morphism image");
        if (!it->second.matches_parity(g.parity))
            throw std::invalid_argument("Morphism: image of '" + g.name +
                                        "' does not match its parity");
        images_.push_back(it->second);
    }
    if (images_by_name.size() != source_->size())
        throw std::invalid_argument("Morphism: image map names a generator outside the source context");
    inverse_cache_.assign(source_->size(), SuperPoly());
}

Morphism Morphism::identity(const ContextPtr& ctx) {
    std::map<std::string, SuperPoly> images;
    for (int i = 0; i < static_cast<int>(ctx->size()); ++i)
        images.emplace(ctx->at(i).name, SuperPoly::gen(ctx, i));
    return Morphism(ctx, ctx, std::move(images));
}

const SuperPoly& Morphism::image(int source_index) const {
    return images_[static_cast<std::size_t>(source_index)];
}

const SuperPoly& Morphism::image(const std::string& name) const {
    return image(source_->require(name));
}

SuperPoly Morphism::apply(const SuperPoly& f) const {
    require_same_context(f.context(), source_, "Morphism::apply");
    SuperPoly out = SuperPoly::zero(target_);
    for (const auto& [m, c] : f.terms()) {
        SuperPoly term = SuperPoly::constant(target_, c);
        for (std::size_t s = 0; s < m.even_exps.size(); ++s) {
            std::int32_t e = m.even_exps[s];
            if (e == 0) continue;
            int gi = source_->even_indices()[s];
            if (e > 0) {
                term = term * images_[static_cast<std::size_t>(gi)].pow(e);
            } else {
                SuperPoly& inv = inverse_cache_[static_cast<std::size_t>(gi)];
                if (inv.is_zero()) inv = images_[static_cast<std::size_t>(gi)].invert_even();
                term = term * inv.pow(-e);
            }
        }
        // Odd images multiply in the monomial's canonical order; the ring
        // product supplies all reordering signs.
        for (int gi : m.odd) term = term * images_[static_cast<std::size_t>(gi)];
        out += term;
    }
    return out;
}

Morphism Morphism::then(const Morphism& after) const {
    require_same_context(target_, after.source(), "Morphism::then");
    std::map<std::string, SuperPoly> images;
    for (int i = 0; i < static_cast<int>(source_->size()); ++i)
        images.emplace(source_->at(i).name, after.apply(images_[static_cast<std::size_t>(i)]));
    return Morphism(source_, after.target(), std::move(images));
}

bool Morphism::is_identity() const {
    if (!(source_ == target_ || *source_ == *target_)) return false;
    for (int i = 0; i < static_cast<int>(source_->size()); ++i)
        if (images_[static_cast<std::size_t>(i)] != SuperPoly::gen(target_, i)) return false;
    return true;
}

std::string Morphism::render() const {
    std::string out;
    for (int i = 0; i < static_cast<int>(source_->size()); ++i) {
        if (!out.empty()) out += "; ";
        out += source_->at(i).name + " -> " + images_[static_cast<std::size_t>(i)].render();
    }
    return out;
}

bool certified_inverse(const Morphism& f, const Morphism& f_inv) {
    if (!(*f.target() == *f_inv.source()) || !(*f_inv.target() == *f.source())) return false;
    return f.then(f_inv).is_identity() && f_inv.then(f).is_identity();
}

}  // namespace superaudit
