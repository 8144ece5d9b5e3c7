#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "lscat/fp.hpp"

namespace lscat {

enum class CofactorKind { Exterior, TruncatedPolynomial, DividedPower };

struct CofactorSpec {
    std::string name;
    int degree = 0;
    CofactorKind kind = CofactorKind::Exterior;
    int height = 0;  // TruncatedPolynomial only
};

// Tensor basis element: one exponent per cofactor. Exterior slots take
// 0/1, truncated slots stay below the height, divided-power slots index
// gamma_n (bounded only by the degree cutoff in play).
struct CoBasis {
    std::vector<int> exps;

    bool operator<(const CoBasis& o) const { return exps < o.exps; }
    bool operator==(const CoBasis& o) const { return exps == o.exps; }
    bool is_unit() const {
        for (int e : exps)
            if (e) return false;
        return true;
    }
};

// Tensor product of exterior / truncated-polynomial / divided-power
// cofactors with binomial (resp. divided-power) coproducts.
class CoalgebraPresentation {
public:
    CoalgebraPresentation() = default;
    CoalgebraPresentation(int prime, std::vector<CofactorSpec> cofactors);

    int prime() const { return prime_; }
    const std::vector<CofactorSpec>& cofactors() const { return cofactors_; }
    int cofactor_index(const std::string& name) const;

    int degree(const CoBasis& b) const;
    CoBasis unit() const { return CoBasis{std::vector<int>(cofactors_.size(), 0)}; }

    // All positive-degree basis elements of degree <= max_degree, sorted
    // by (degree, exponent vector).
    std::vector<CoBasis> basis_up_to(int max_degree) const;
    std::map<int, int> dims_up_to(int max_degree) const;  // includes degree 0

    // Delta(b) - b x 1 - 1 x b as (left, right, coefficient) triples with
    // Koszul signs at odd p.
    std::vector<std::tuple<CoBasis, CoBasis, int>> reduced_coproduct(const CoBasis& b) const;

    // Product used only for validating the divided-power laws
    // (gamma_i gamma_j = C(i+j, i) gamma_{i+j} etc.); returns the
    // coefficient and writes the product basis element.
    int validation_product(const CoBasis& a, const CoBasis& b, CoBasis& out) const;

    std::string to_string(const CoBasis& b) const;

private:
    void check_size(const CoBasis& b) const;
    int prime_ = 2;
    std::vector<CofactorSpec> cofactors_;
    std::map<std::string, int> index_;
};

}  // namespace lscat
