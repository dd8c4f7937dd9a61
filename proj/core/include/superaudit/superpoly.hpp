#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superaudit/context.hpp"
#include "superaudit/gaussian.hpp"

namespace superaudit {

// Monomial in a fixed context: integer exponents on even generators (negative
// only when the generator is invertible) and an ordered subset of the odd
// generators. Comparison is even-exponent-lexicographic first, then the odd
// index list lexicographic; this is the canonical term order everywhere.
struct Monomial {
    std::vector<std::int32_t> even_exps;  // indexed by even slot of the context
    std::vector<std::int32_t> odd;        // generator indices, strictly ascending

    Parity parity() const { return odd.size() % 2 == 0 ? Parity::even : Parity::odd; }
    bool is_constant() const;

    auto operator<=>(const Monomial&) const = default;
};

// The merged monomial and the Koszul sign (+1/-1) of sorting the concatenated
// odd factors, or nullopt when an odd factor repeats.
std::optional<std::pair<Monomial, int>> merge_monomials(const Monomial& a, const Monomial& b);

// Exact Laurent superpolynomial over the Gaussian rationals, kept in canonical
// form: no zero coefficients, odd factors canonically ordered. Equality of
// values is equality of the term maps.
class SuperPoly {
public:
    SuperPoly() = default;
    explicit SuperPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static SuperPoly zero(ContextPtr ctx) { return SuperPoly(std::move(ctx)); }
    static SuperPoly constant(ContextPtr ctx, GaussianRational c);
    static SuperPoly one(ContextPtr ctx) { return constant(std::move(ctx), GaussianRational(1)); }
    // x^exp for a single generator; validates exponent legality.
    static SuperPoly gen(ContextPtr ctx, const std::string& name, int exp = 1);
    static SuperPoly gen(ContextPtr ctx, int index, int exp = 1);
    static SuperPoly from_term(ContextPtr ctx, Monomial m, GaussianRational c);

    const ContextPtr& context() const { return ctx_; }
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // The coefficient of the empty monomial.
    GaussianRational constant_term() const;

    // Defined iff all monomials share one parity; the zero polynomial has
    // every parity (returns the requested-agnostic nullopt-free convention:
    // zero reports even and matches_parity() accepts both).
    std::optional<Parity> parity() const;
    bool matches_parity(Parity p) const;

    // Terms with no odd factors.
    SuperPoly body() const;
    // this - body(): every term carries odd factors, hence nilpotent.
    SuperPoly soul() const;

    SuperPoly operator-() const;
    SuperPoly operator+(const SuperPoly& o) const;
    SuperPoly operator-(const SuperPoly& o) const;
    SuperPoly operator*(const SuperPoly& o) const;  // supercommutative product
    SuperPoly operator*(const GaussianRational& c) const;
    SuperPoly& operator+=(const SuperPoly& o);
    SuperPoly& operator-=(const SuperPoly& o);

    // Nonnegative powers by repeated multiplication; negative powers through
    // invert_even of the base.
    SuperPoly pow(int n) const;

    // Inverse of an even element whose body is a single unit term; the
    // nilpotent part is expanded as a terminating geometric series.
    SuperPoly invert_even() const;

    // Coefficient-antilinear bar map: generators replaced by their conjugate
    // partners, with the sign convention of the chosen mode.
    SuperPoly conjugate(ConjugationMode mode) const;

    bool operator==(const SuperPoly& o) const;
    bool operator!=(const SuperPoly& o) const { return !(*this == o); }

    // Canonical interchange rendering, e.g. "-1*zeta*eta + 2*v^-1".
    std::string render() const;
    // Rendering usable as one factor of a product: single terms render bare,
    // sums are parenthesized.
    std::string render_factor() const;

    void add_term(const Monomial& m, const GaussianRational& c);

private:
    void validate_monomial(const Monomial& m) const;

    ContextPtr ctx_;
    std::map<Monomial, GaussianRational> terms_;
};

inline SuperPoly operator*(const GaussianRational& c, const SuperPoly& p) { return p * c; }

std::ostream& operator<<(std::ostream& os, const SuperPoly& p);

}  // namespace superaudit
