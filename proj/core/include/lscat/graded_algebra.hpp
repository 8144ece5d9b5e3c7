#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "lscat/fp.hpp"

namespace lscat {

// Height sentinel for polynomial generators (allowed only in E2-page
// presentations, never in a finite cohomology presentation).
inline constexpr int kInfiniteHeight = std::numeric_limits<int>::max();

struct GeneratorSpec {
    std::string name;
    int degree = 0;
    int height = 2;  // least power that vanishes; exterior generators have 2
    int weight = 1;  // filtration weight of the generator
};

// Exponent vector in generator-list order. The generator order is the
// canonical monomial order; Koszul signs from reordering products are
// absorbed into coefficients by AlgebraPresentation::mul_monomials.
struct Monomial {
    std::vector<int> exps;

    bool operator<(const Monomial& o) const { return exps < o.exps; }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool is_unit() const {
        for (int e : exps)
            if (e) return false;
        return true;
    }
};

// Sparse linear combination of monomials; zero coefficients are never stored.
struct Element {
    std::map<Monomial, int> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Element& o) const { return terms == o.terms; }
};

// A finite graded-commutative algebra presented by generators whose only
// relations are pure powers (truncations) and graded commutativity.
class AlgebraPresentation {
public:
    AlgebraPresentation() = default;
    AlgebraPresentation(int prime, std::vector<GeneratorSpec> generators);

    int prime() const { return prime_; }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    std::size_t n_generators() const { return gens_.size(); }
    int generator_index(const std::string& name) const;      // -1 if absent
    const GeneratorSpec& generator(std::size_t i) const { return gens_[i]; }
    bool all_heights_finite() const;

    bool operator==(const AlgebraPresentation& o) const;

    Monomial unit() const { return Monomial{std::vector<int>(gens_.size(), 0)}; }
    Monomial generator_monomial(std::size_t i) const;

    // A monomial is a basis element iff every exponent is below its height.
    bool monomial_alive(const Monomial& m) const;
    int degree(const Monomial& m) const;
    int weight(const Monomial& m) const;
    bool odd(const Monomial& m) const { return degree(m) % 2 != 0; }

    Element element(const Monomial& m, int coeff = 1) const;
    Element zero() const { return Element{}; }
    Element add(const Element& a, const Element& b) const;
    Element scale(const Element& a, int c) const;

    // Graded-commutative product with Koszul signs at odd p; truncation
    // relations kill any term with an exponent reaching its height.
    Element mul(const Element& a, const Element& b) const;
    // coeff * canonical monomial, or zero if truncated away.
    Element mul_monomials(const Monomial& a, const Monomial& b) const;

    Element power(const Element& a, int n) const;

    std::vector<Monomial> basis_of_degree(int d) const;
    std::map<int, int> poincare_dims(int max_degree) const;
    int top_degree() const;  // Σ (height-1)·degree; throws on infinite height

    // Degree of every term, or -1 for the zero element; throws if mixed.
    int homogeneous_degree(const Element& e) const;

    std::string to_string(const Monomial& m) const;
    std::string to_string(const Element& e) const;

private:
    void check_size(const Monomial& m) const;
    int prime_ = 2;
    std::vector<GeneratorSpec> gens_;
    std::map<std::string, int> index_;
};

}  // namespace lscat
