#include "lscat/coalgebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lscat {

CoalgebraPresentation::CoalgebraPresentation(int prime, std::vector<CofactorSpec> cofactors)
    : prime_(prime), cofactors_(std::move(cofactors)) {
    if (prime_ < 2) throw std::invalid_argument("CoalgebraPresentation: bad prime");
    for (std::size_t i = 0; i < cofactors_.size(); ++i) {
        const auto& c = cofactors_[i];
        if (c.degree <= 0) throw std::invalid_argument("CoalgebraPresentation: degree must be positive: " + c.name);
        if (c.kind == CofactorKind::TruncatedPolynomial && c.height < 2)
            throw std::invalid_argument("CoalgebraPresentation: truncated cofactor needs height >= 2: " + c.name);
        if (index_.count(c.name)) throw std::invalid_argument("CoalgebraPresentation: duplicate cofactor " + c.name);
        index_[c.name] = static_cast<int>(i);
    }
}

int CoalgebraPresentation::cofactor_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

void CoalgebraPresentation::check_size(const CoBasis& b) const {
    if (b.exps.size() != cofactors_.size())
        throw std::invalid_argument("CoBasis does not belong to this coalgebra");
}

int CoalgebraPresentation::degree(const CoBasis& b) const {
    check_size(b);
    int d = 0;
    for (std::size_t i = 0; i < cofactors_.size(); ++i) d += b.exps[i] * cofactors_[i].degree;
    return d;
}

std::vector<CoBasis> CoalgebraPresentation::basis_up_to(int max_degree) const {
    std::vector<CoBasis> out;
    CoBasis cur = unit();
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (i == cofactors_.size()) {
            if (!cur.is_unit()) out.push_back(cur);
            return;
        }
        const auto& c = cofactors_[i];
        int emax = rem / c.degree;
        if (c.kind == CofactorKind::Exterior) emax = std::min(emax, 1);
        if (c.kind == CofactorKind::TruncatedPolynomial) emax = std::min(emax, c.height - 1);
        for (int e = 0; e <= emax; ++e) {
            cur.exps[i] = e;
            rec(i + 1, rem - e * c.degree);
        }
        cur.exps[i] = 0;
    };
    rec(0, max_degree);
    std::sort(out.begin(), out.end(), [&](const CoBasis& a, const CoBasis& b) {
        int da = degree(a), db = degree(b);
        return da != db ? da < db : a.exps < b.exps;
    });
    return out;
}

std::map<int, int> CoalgebraPresentation::dims_up_to(int max_degree) const {
    std::map<int, int> dims;
    dims[0] = 1;
    for (const auto& b : basis_up_to(max_degree)) dims[degree(b)]++;
    return dims;
}

std::vector<std::tuple<CoBasis, CoBasis, int>> CoalgebraPresentation::reduced_coproduct(const CoBasis& b) const {
    check_size(b);
    // Splits per cofactor: exterior and divided-power splits carry
    // coefficient 1, truncated-polynomial splits the binomial coefficient.
    // Koszul signs need the full split, so they are applied in a second
    // pass over the assembled (left, right) pairs.
    std::vector<std::tuple<CoBasis, CoBasis, int>> out;
    CoBasis left = unit(), right = unit();
    std::vector<std::tuple<CoBasis, CoBasis, int>> raw;
    std::function<void(std::size_t, int)> rec2 = [&](std::size_t i, int coeff) {
        if (coeff == 0) return;
        if (i == cofactors_.size()) {
            if (left.is_unit() || right.is_unit()) return;
            raw.emplace_back(left, right, coeff);
            return;
        }
        const auto& c = cofactors_[i];
        int n = b.exps[i];
        for (int l = 0; l <= n; ++l) {
            int piece = 1;
            if (c.kind == CofactorKind::TruncatedPolynomial) piece = binomial_mod(n, l, prime_);
            if (piece == 0) continue;
            left.exps[i] = l;
            right.exps[i] = n - l;
            rec2(i + 1, coeff * piece);
        }
        left.exps[i] = 0;
        right.exps[i] = 0;
    };
    rec2(0, 1);
    for (auto& [l, r, coeff] : raw) {
        long long crossings = 0;
        if (prime_ != 2) {
            // right_k passes left_m for every pair k < m of cofactors.
            for (std::size_t k = 0; k < cofactors_.size(); ++k) {
                int rd = r.exps[k] * cofactors_[k].degree;
                if (rd % 2 == 0) continue;
                for (std::size_t m = k + 1; m < cofactors_.size(); ++m) {
                    int ld = l.exps[m] * cofactors_[m].degree;
                    if (ld % 2 != 0) crossings++;
                }
            }
        }
        int sgn = (crossings % 2 != 0) ? -1 : 1;
        out.emplace_back(l, r, mod_p(static_cast<long long>(coeff) * sgn, prime_));
    }
    return out;
}

int CoalgebraPresentation::validation_product(const CoBasis& a, const CoBasis& b, CoBasis& out) const {
    check_size(a);
    check_size(b);
    out = unit();
    long long coeff = 1;
    for (std::size_t i = 0; i < cofactors_.size(); ++i) {
        const auto& c = cofactors_[i];
        int n = a.exps[i] + b.exps[i];
        switch (c.kind) {
            case CofactorKind::Exterior:
                if (n > 1) return 0;
                break;
            case CofactorKind::TruncatedPolynomial:
                if (n >= c.height) return 0;
                break;
            case CofactorKind::DividedPower:
                coeff = coeff * binomial_mod(n, a.exps[i], prime_) % prime_;
                break;
        }
        out.exps[i] = n;
        if (coeff == 0) return 0;
    }
    if (prime_ != 2) {
        long long crossings = 0;
        for (std::size_t i = 0; i < cofactors_.size(); ++i) {
            if (b.exps[i] == 0 || (cofactors_[i].degree % 2) == 0) continue;
            for (std::size_t j = i + 1; j < cofactors_.size(); ++j)
                if ((cofactors_[j].degree % 2) != 0) crossings += static_cast<long long>(b.exps[i]) * a.exps[j];
        }
        if (crossings % 2 != 0) coeff = -coeff;
    }
    return mod_p(coeff, prime_);
}

std::string CoalgebraPresentation::to_string(const CoBasis& b) const {
    check_size(b);
    if (b.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < cofactors_.size(); ++i) {
        if (!b.exps[i]) continue;
        if (!first) os << "*";
        const auto& c = cofactors_[i];
        if (c.kind == CofactorKind::DividedPower && b.exps[i] > 1)
            os << "g" << b.exps[i] << "(" << c.name << ")";
        else {
            os << c.name;
            if (b.exps[i] > 1) os << "^" << b.exps[i];
        }
        first = false;
    }
    return os.str();
}

}  // namespace lscat
