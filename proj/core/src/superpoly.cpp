#include "superaudit/superpoly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace superaudit {

bool Monomial::is_constant() const {
    if (!odd.empty()) return false;
    return std::all_of(even_exps.begin(), even_exps.end(), [](std::int32_t e) { return e == 0; });
}

std::optional<std::pair<Monomial, int>> merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.even_exps.resize(a.even_exps.size());
    for (std::size_t i = 0; i < a.even_exps.size(); ++i)
        out.even_exps[i] = a.even_exps[i] + b.even_exps[i];

    // Sorting the concatenation a.odd ++ b.odd counts one transposition per
    // pair (x in a, y in b) with x > y; a repeated index kills the product.
    out.odd.reserve(a.odd.size() + b.odd.size());
    std::size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.odd.size() && j < b.odd.size()) {
        if (a.odd[i] == b.odd[j]) return std::nullopt;
        if (a.odd[i] < b.odd[j]) {
            out.odd.push_back(a.odd[i++]);
        } else {
            inversions += static_cast<long>(a.odd.size() - i);
            out.odd.push_back(b.odd[j++]);
        }
    }
    while (i < a.odd.size()) out.odd.push_back(a.odd[i++]);
    while (j < b.odd.size()) out.odd.push_back(b.odd[j++]);
    return std::make_pair(std::move(out), inversions % 2 == 0 ? 1 : -1);
}

SuperPoly SuperPoly::constant(ContextPtr ctx, GaussianRational c) {
    SuperPoly p(std::move(ctx));
    Monomial m;
    m.even_exps.assign(p.ctx_->even_indices().size(), 0);
    p.add_term(m, c);
    return p;
}

SuperPoly SuperPoly::gen(ContextPtr ctx, const std::string& name, int exp) {
    int idx = ctx->require(name);
    return gen(std::move(ctx), idx, exp);
}

SuperPoly SuperPoly::gen(ContextPtr ctx, int index, int exp) {
    SuperPoly p(ctx);
    const Generator& g = ctx->at(index);
    Monomial m;
    m.even_exps.assign(ctx->even_indices().size(), 0);
    if (g.parity == Parity::even) {
        if (exp < 0 && !g.invertible)
            throw std::domain_error("SuperPoly: negative exponent on non-invertible generator '" +
                                    g.name + "'");
        m.even_exps[static_cast<std::size_t>(ctx->even_slot(index))] = exp;
        if (exp == 0) return one(ctx);
    } else {
        if (exp < 0)
            throw std::domain_error("SuperPoly: negative exponent on odd generator '" + g.name + "'");
        if (exp == 0) return one(ctx);
        if (exp > 1) return zero(ctx);  // odd square vanishes
        m.odd.push_back(index);
    }
    p.add_term(m, GaussianRational(1));
    return p;
}

SuperPoly SuperPoly::from_term(ContextPtr ctx, Monomial m, GaussianRational c) {
    SuperPoly p(std::move(ctx));
    p.validate_monomial(m);
    p.add_term(m, c);
    return p;
}

void SuperPoly::validate_monomial(const Monomial& m) const {
    if (m.even_exps.size() != ctx_->even_indices().size())
        throw std::invalid_argument("SuperPoly: monomial shaped for a different context");
    for (std::size_t s = 0; s < m.even_exps.size(); ++s) {
        int gi = ctx_->even_indices()[s];
        if (m.even_exps[s] < 0 && !ctx_->invertible(gi))
            throw std::domain_error("SuperPoly: negative exponent on non-invertible generator '" +
                                    ctx_->at(gi).name + "'");
    }
    for (std::size_t k = 0; k < m.odd.size(); ++k) {
        int gi = m.odd[k];
        if (gi < 0 || gi >= static_cast<int>(ctx_->size()) || ctx_->parity(gi) != Parity::odd)
            throw std::invalid_argument("SuperPoly: odd factor index out of range");
        if (k > 0 && m.odd[k - 1] >= gi)
            throw std::invalid_argument("SuperPoly: odd factors must be strictly ascending");
    }
}

bool SuperPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
           terms_.begin()->second.is_one();
}

bool SuperPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

GaussianRational SuperPoly::constant_term() const {
    if (terms_.empty()) return GaussianRational(0);
    const auto& front = *terms_.begin();
    if (front.first.is_constant()) return front.second;
    return GaussianRational(0);
}

std::optional<Parity> SuperPoly::parity() const {
    if (terms_.empty()) return Parity::even;
    Parity p = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != p) return std::nullopt;
    return p;
}

bool SuperPoly::matches_parity(Parity p) const {
    for (const auto& [m, c] : terms_)
        if (m.parity() != p) return false;
    return true;
}

SuperPoly SuperPoly::body() const {
    SuperPoly out(ctx_);
    for (const auto& [m, c] : terms_)
        if (m.odd.empty()) out.terms_.emplace(m, c);
    return out;
}

SuperPoly SuperPoly::soul() const {
    SuperPoly out(ctx_);
    for (const auto& [m, c] : terms_)
        if (!m.odd.empty()) out.terms_.emplace(m, c);
    return out;
}

SuperPoly SuperPoly::operator-() const {
    SuperPoly out(ctx_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

SuperPoly SuperPoly::operator+(const SuperPoly& o) const {
    SuperPoly out = *this;
    out += o;
    return out;
}

SuperPoly SuperPoly::operator-(const SuperPoly& o) const {
    SuperPoly out = *this;
    out -= o;
    return out;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
    require_same_context(ctx_, o.ctx_, "SuperPoly::add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
    require_same_context(ctx_, o.ctx_, "SuperPoly::sub");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SuperPoly SuperPoly::operator*(const SuperPoly& o) const {
    require_same_context(ctx_, o.ctx_, "SuperPoly::mul");
    SuperPoly out(ctx_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            auto merged = merge_monomials(ma, mb);
            if (!merged) continue;
            GaussianRational c = ca * cb;
            if (merged->second < 0) c = -c;
            out.add_term(merged->first, c);
        }
    }
    return out;
}

SuperPoly SuperPoly::operator*(const GaussianRational& c) const {
    SuperPoly out(ctx_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

SuperPoly SuperPoly::pow(int n) const {
    if (n < 0) return invert_even().pow(-n);
    SuperPoly acc = one(ctx_);
    for (int k = 0; k < n; ++k) acc = acc * *this;
    return acc;
}

SuperPoly SuperPoly::invert_even() const {
    if (!matches_parity(Parity::even))
        throw std::domain_error("invert_even: element is not even");
    SuperPoly u = body();
    if (u.terms_.size() != 1)
        throw std::domain_error("invert_even: body is not a single term");
    const auto& [m0, c0] = *u.terms_.begin();
    Monomial minv;
    minv.even_exps.resize(m0.even_exps.size());
    for (std::size_t s = 0; s < m0.even_exps.size(); ++s) {
        int gi = ctx_->even_indices()[s];
        if (m0.even_exps[s] != 0 && !ctx_->invertible(gi))
            throw std::domain_error("invert_even: body contains non-invertible generator '" +
                                    ctx_->at(gi).name + "'");
        minv.even_exps[s] = -m0.even_exps[s];
    }
    SuperPoly u_inv = from_term(ctx_, minv, c0.inverse());

    // a = u + n with n nilpotent: a^-1 = u^-1 sum_k (-u^-1 n)^k.
    SuperPoly t = -(u_inv * soul());
    SuperPoly acc = one(ctx_);
    SuperPoly power = one(ctx_);
    while (true) {
        power = power * t;
        if (power.is_zero()) break;
        acc += power;
    }
    return u_inv * acc;
}

SuperPoly SuperPoly::conjugate(ConjugationMode mode) const {
    SuperPoly out(ctx_);
    for (const auto& [m, c] : terms_) {
        Monomial cm;
        cm.even_exps.assign(m.even_exps.size(), 0);
        for (std::size_t s = 0; s < m.even_exps.size(); ++s) {
            if (m.even_exps[s] == 0) continue;
            int gi = ctx_->even_indices()[s];
            int pi = ctx_->partner(gi);  // throws when unpaired
            cm.even_exps[static_cast<std::size_t>(ctx_->even_slot(pi))] += m.even_exps[s];
        }
        std::vector<std::int32_t> partners;
        partners.reserve(m.odd.size());
        for (int gi : m.odd) partners.push_back(ctx_->partner(gi));
        // Sign of the permutation sorting bar(x1)...bar(xk) into canonical order.
        long inversions = 0;
        for (std::size_t a = 0; a < partners.size(); ++a)
            for (std::size_t b = a + 1; b < partners.size(); ++b)
                if (partners[a] > partners[b]) ++inversions;
        cm.odd = partners;
        std::sort(cm.odd.begin(), cm.odd.end());
        GaussianRational coeff = c.conj();
        if (inversions % 2 != 0) coeff = -coeff;
        if (mode == ConjugationMode::graded) {
            // bar(x1...xk) = (-1)^{k(k-1)/2} bar(x1)...bar(xk) for odd factors
            std::size_t k = partners.size();
            if ((k * (k - 1) / 2) % 2 != 0) coeff = -coeff;
        }
        out.add_term(cm, coeff);
    }
    return out;
}

bool SuperPoly::operator==(const SuperPoly& o) const {
    if (!(ctx_ == o.ctx_ || (ctx_ && o.ctx_ && *ctx_ == *o.ctx_))) return false;
    return terms_ == o.terms_;
}

void SuperPoly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

std::string render_monomial(const Context& ctx, const Monomial& m) {
    std::string out;
    std::size_t oi = 0;
    for (int gi = 0; gi < static_cast<int>(ctx.size()); ++gi) {
        const Generator& g = ctx.at(gi);
        if (g.parity == Parity::even) {
            std::int32_t e = m.even_exps[static_cast<std::size_t>(ctx.even_slot(gi))];
            if (e == 0) continue;
            if (!out.empty()) out += "*";
            out += g.name;
            if (e != 1) out += "^" + std::to_string(e);
        } else {
            if (oi < m.odd.size() && m.odd[oi] == gi) {
                ++oi;
                if (!out.empty()) out += "*";
                out += g.name;
            }
        }
    }
    return out;
}

std::string render_term(const Context& ctx, const Monomial& m, const GaussianRational& c) {
    std::string mono = render_monomial(ctx, m);
    if (mono.empty()) return c.str();
    if (c.is_real()) {
        if (c.re.is_one()) return mono;
        if (c.re == Rational(-1)) return "-1*" + mono;
        return c.re.str() + "*" + mono;
    }
    if (c.re.is_zero()) {
        if (c.im.is_one()) return "i*" + mono;
        if (c.im == Rational(-1)) return "-i*" + mono;
        return c.im.str() + "*i*" + mono;
    }
    return "(" + c.str() + ")*" + mono;
}

}  // namespace

std::string SuperPoly::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += render_term(*ctx_, m, c);
    }
    return out;
}

std::string SuperPoly::render_factor() const {
    if (terms_.size() == 1) {
        const auto& [m, c] = *terms_.begin();
        return render_term(*ctx_, m, c);
    }
    return "(" + render() + ")";
}

std::ostream& operator<<(std::ostream& os, const SuperPoly& p) {
    return os << p.render();
}

}  // namespace superaudit
