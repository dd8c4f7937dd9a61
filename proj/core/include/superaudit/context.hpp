#pragma once

#include <memory>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superaudit {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

// Convention for the bar map on products of homogeneous elements:
//   multiplicative: bar(xy) = bar(x) bar(y)
//   graded:         bar(xy) = (-1)^{|x||y|} bar(x) bar(y)
enum class ConjugationMode : unsigned char { multiplicative, graded };

inline const char* to_string(ConjugationMode m) {
    return m == ConjugationMode::multiplicative ? "multiplicative" : "graded";
}

struct Generator {
    std::string name;
    Parity parity = Parity::even;
    bool invertible = false;
    std::optional<std::string> conjugate_partner;
};

inline Generator even_gen(std::string name, bool invertible = false,
                          std::optional<std::string> partner = std::nullopt) {
    return {std::move(name), Parity::even, invertible, std::move(partner)};
}

inline Generator odd_gen(std::string name, std::optional<std::string> partner = std::nullopt) {
    return {std::move(name), Parity::odd, false, std::move(partner)};
}

class Context;
using ContextPtr = std::shared_ptr<const Context>;

// An ordered list of generators. Declaration order fixes the canonical odd
// order, and with it every Koszul sign in the engine.
class Context {
public:
    static ContextPtr make(std::vector<Generator> gens);

    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    const Generator& at(int i) const { return gens_[static_cast<std::size_t>(i)]; }
    int index_of(const std::string& name) const;           // -1 when absent
    int require(const std::string& name) const;            // throws when absent
    bool has(const std::string& name) const { return index_of(name) >= 0; }

    Parity parity(int i) const { return at(i).parity; }
    bool invertible(int i) const { return at(i).invertible; }
    int partner(int i) const;                               // throws when unpaired

    const std::vector<int>& even_indices() const { return even_; }
    const std::vector<int>& odd_indices() const { return odd_; }
    // Position of generator i inside even_indices(); -1 for odd generators.
    int even_slot(int i) const { return even_slot_[static_cast<std::size_t>(i)]; }

    bool operator==(const Context& o) const;
    bool operator!=(const Context& o) const { return !(*this == o); }

private:
    explicit Context(std::vector<Generator> gens);

    std::vector<Generator> gens_;
    std::map<std::string, int> index_;
    std::vector<int> even_;
    std::vector<int> odd_;
    std::vector<int> even_slot_;
    std::vector<int> partner_;
};

// Two polynomials/derivations may interoperate iff their contexts agree
// structurally; throws std::invalid_argument otherwise.
void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* where);

// Context with every generator doubled: x1..xn, x1'..xn' (primed copies
// appended, same parity/invertibility, no conjugation partners).
ContextPtr doubled_context(const ContextPtr& ctx);
// Likewise tripled: x, x', x''.
ContextPtr tripled_context(const ContextPtr& ctx);

}  // namespace superaudit
