#include "superaudit/context.hpp"

#include <cctype>
#include <stdexcept>

namespace superaudit {

namespace {

bool identifier_like(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    std::size_t i = 1;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    while (i < s.size() && s[i] == '\'') ++i;  // trailing primes mark doubled copies
    return i == s.size();
}

}  // namespace

Context::Context(std::vector<Generator> gens) : gens_(std::move(gens)) {
    even_slot_.assign(gens_.size(), -1);
    partner_.assign(gens_.size(), -1);
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
        const Generator& g = gens_[static_cast<std::size_t>(i)];
        if (!identifier_like(g.name))
            throw std::invalid_argument("Context: generator name '" + g.name + "' is not an identifier");
        if (g.name == "i")
            throw std::invalid_argument("Context: generator name 'i' is reserved for the imaginary unit");
        if (!index_.emplace(g.name, i).second)
            throw std::invalid_argument("Context: duplicate generator name '" + g.name + "'");
        if (g.parity == Parity::odd && g.invertible)
            throw std::invalid_argument("Context: odd generator '" + g.name + "' cannot be invertible");
        if (g.parity == Parity::even) {
            even_slot_[static_cast<std::size_t>(i)] = static_cast<int>(even_.size());
            even_.push_back(i);
        } else {
            odd_.push_back(i);
        }
    }
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
        const Generator& g = gens_[static_cast<std::size_t>(i)];
        if (!g.conjugate_partner) continue;
        auto it = index_.find(*g.conjugate_partner);
        if (it == index_.end())
            throw std::invalid_argument("Context: partner '" + *g.conjugate_partner + "' of '" +
                                        g.name + "' is not declared");
        const Generator& p = gens_[static_cast<std::size_t>(it->second)];
        if (p.conjugate_partner != g.name)
            throw std::invalid_argument("Context: conjugate partners must be symmetric ('" + g.name +
                                        "' vs '" + p.name + "')");
        if (p.parity != g.parity)
            throw std::invalid_argument("Context: conjugate partners must share parity ('" + g.name +
                                        "' vs '" + p.name + "')");
        partner_[static_cast<std::size_t>(i)] = it->second;
    }
}

ContextPtr Context::make(std::vector<Generator> gens) {
    return ContextPtr(new Context(std::move(gens)));
}

int Context::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int Context::require(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) throw std::invalid_argument("Context: no generator named '" + name + "'");
    return i;
}

int Context::partner(int i) const {
    int p = partner_[static_cast<std::size_t>(i)];
    if (p < 0)
        throw std::invalid_argument("Context: generator '" + at(i).name + "' has no conjugate partner");
    return p;
}

bool Context::operator==(const Context& o) const {
    if (gens_.size() != o.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Generator& a = gens_[i];
        const Generator& b = o.gens_[i];
        if (a.name != b.name || a.parity != b.parity || a.invertible != b.invertible ||
            a.conjugate_partner != b.conjugate_partner)
            return false;
    }
    return true;
}

void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* where) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    throw std::invalid_argument(std::string(where) + ": context mismatch");
}

namespace {

ContextPtr extended_copy(const ContextPtr& ctx, int copies) {
    std::vector<Generator> gens;
    for (int c = 0; c < copies; ++c) {
        std::string suffix(static_cast<std::size_t>(c), '\'');
        for (const Generator& g : ctx->generators())
            gens.push_back({g.name + suffix, g.parity, g.invertible, std::nullopt});
    }
    return Context::make(std::move(gens));
}

}  // namespace

ContextPtr doubled_context(const ContextPtr& ctx) { return extended_copy(ctx, 2); }
ContextPtr tripled_context(const ContextPtr& ctx) { return extended_copy(ctx, 3); }

}  // namespace superaudit
