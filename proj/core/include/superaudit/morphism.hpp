#pragma once

#include <map>
#include <string>

#include "superaudit/superpoly.hpp"

namespace superaudit {

// Superalgebra morphism given by parity-respecting generator images; models
// pullbacks. Application substitutes images and renormalizes, so the
// homomorphism property holds by construction.
class Morphism {
public:
    Morphism(ContextPtr source, ContextPtr target,
             std::map<std::string, SuperPoly> images_by_name);

    static Morphism identity(const ContextPtr& ctx);

    const ContextPtr& source() const { return source_; }
    const ContextPtr& target() const { return target_; }
    const SuperPoly& image(int source_index) const;
    const SuperPoly& image(const std::string& name) const;

    SuperPoly apply(const SuperPoly& f) const;

    // Composition as substitution: (after <= this) maps source() into
    // after.target(); requires target() == after.source().
    Morphism then(const Morphism& after) const;

    bool is_identity() const;

    std::string render() const;

private:
    ContextPtr source_;
    ContextPtr target_;
    std::vector<SuperPoly> images_;               // by source generator index
    mutable std::vector<SuperPoly> inverse_cache_;  // lazily populated per generator
};

// Checks F and F_inv are two-sided inverses on generators.
bool certified_inverse(const Morphism& f, const Morphism& f_inv);

}  // namespace superaudit
