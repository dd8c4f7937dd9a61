#pragma once

#include <map>
#include <string>

#include "superaudit/morphism.hpp"
#include "superaudit/superpoly.hpp"

namespace superaudit {

// Parity-tagged vector field given by its action on generators, extended to
// the whole algebra by the graded Leibniz rule
//   X(fg) = X(f) g + (-1)^{|X||f|} f X(g).
class Derivation {
public:
    Derivation(Parity parity, ContextPtr ctx, std::map<std::string, SuperPoly> images_by_name);

    static Derivation zero(Parity parity, const ContextPtr& ctx);
    // The partial derivative d/dx: image 1 on x, 0 elsewhere, parity |x|.
    static Derivation partial(const ContextPtr& ctx, const std::string& name);
    static Derivation partial(const ContextPtr& ctx, int index);

    Parity parity() const { return parity_; }
    const ContextPtr& context() const { return ctx_; }
    const SuperPoly& image(int index) const { return images_[static_cast<std::size_t>(index)]; }
    const SuperPoly& image(const std::string& name) const { return image(ctx_->require(name)); }

    bool is_zero() const;

    SuperPoly operator()(const SuperPoly& f) const;

    Derivation operator+(const Derivation& o) const;
    Derivation operator-() const;
    Derivation operator*(const GaussianRational& c) const;
    // Left multiplication by an even or odd coefficient f: (f X)(g) = f * X(g).
    friend Derivation operator*(const SuperPoly& f, const Derivation& x);

    bool operator==(const Derivation& o) const;
    bool operator!=(const Derivation& o) const { return !(*this == o); }

    // "f1*d/dx1 + ... + fk*d/dxk" in canonical generator order.
    std::string render() const;

private:
    Parity parity_;
    ContextPtr ctx_;
    std::vector<SuperPoly> images_;
};

SuperPoly derive(const Derivation& x, const SuperPoly& f);

// Super Lie bracket [X,Y] = XY - (-1)^{|X||Y|} YX, returned as the derivation
// determined by its generator images.
Derivation bracket(const Derivation& x, const Derivation& y);

// Pushforward of X along the automorphism whose pullback is F:
// g -> F_inv(X(F(g))). F and F_inv must certify as two-sided inverses.
Derivation conjugate_derivation(const Morphism& f, const Morphism& f_inv, const Derivation& x);

std::ostream& operator<<(std::ostream& os, const Derivation& x);

}  // namespace superaudit
