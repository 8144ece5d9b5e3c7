#include "lscat/graded_algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lscat {

AlgebraPresentation::AlgebraPresentation(int prime, std::vector<GeneratorSpec> generators)
    : prime_(prime), gens_(std::move(generators)) {
    if (prime_ < 2) throw std::invalid_argument("AlgebraPresentation: bad prime");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (g.degree <= 0) throw std::invalid_argument("AlgebraPresentation: degree must be positive: " + g.name);
        if (g.height < 2) throw std::invalid_argument("AlgebraPresentation: height must be >= 2: " + g.name);
        if (g.weight <= 0) throw std::invalid_argument("AlgebraPresentation: weight must be positive: " + g.name);
        if (prime_ != 2 && g.degree % 2 != 0 && g.height != 2)
            throw std::invalid_argument(
                "AlgebraPresentation: odd-degree generator must square to zero at odd p: " + g.name);
        if (index_.count(g.name)) throw std::invalid_argument("AlgebraPresentation: duplicate generator " + g.name);
        index_[g.name] = static_cast<int>(i);
    }
}

int AlgebraPresentation::generator_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

bool AlgebraPresentation::all_heights_finite() const {
    for (const auto& g : gens_)
        if (g.height == kInfiniteHeight) return false;
    return true;
}

bool AlgebraPresentation::operator==(const AlgebraPresentation& o) const {
    if (prime_ != o.prime_ || gens_.size() != o.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& a = gens_[i];
        const auto& b = o.gens_[i];
        if (a.name != b.name || a.degree != b.degree || a.height != b.height || a.weight != b.weight) return false;
    }
    return true;
}

Monomial AlgebraPresentation::generator_monomial(std::size_t i) const {
    Monomial m = unit();
    m.exps[i] = 1;
    return m;
}

void AlgebraPresentation::check_size(const Monomial& m) const {
    if (m.exps.size() != gens_.size())
        throw std::invalid_argument("Monomial does not belong to this presentation");
}

bool AlgebraPresentation::monomial_alive(const Monomial& m) const {
    check_size(m);
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].height != kInfiniteHeight && m.exps[i] >= gens_[i].height) return false;
    return true;
}

int AlgebraPresentation::degree(const Monomial& m) const {
    check_size(m);
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) d += m.exps[i] * gens_[i].degree;
    return d;
}

int AlgebraPresentation::weight(const Monomial& m) const {
    check_size(m);
    int w = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) w += m.exps[i] * gens_[i].weight;
    return w;
}

Element AlgebraPresentation::element(const Monomial& m, int coeff) const {
    check_size(m);
    Element e;
    int c = mod_p(coeff, prime_);
    if (c != 0 && monomial_alive(m)) e.terms[m] = c;
    return e;
}

Element AlgebraPresentation::add(const Element& a, const Element& b) const {
    Element out = a;
    for (const auto& [m, c] : b.terms) {
        int v = mod_p(out.terms.count(m) ? out.terms[m] + c : c, prime_);
        if (v == 0)
            out.terms.erase(m);
        else
            out.terms[m] = v;
    }
    return out;
}

Element AlgebraPresentation::scale(const Element& a, int c) const {
    Element out;
    int cc = mod_p(c, prime_);
    if (cc == 0) return out;
    for (const auto& [m, v] : a.terms) out.terms[m] = mod_p(static_cast<long long>(v) * cc, prime_);
    return out;
}

Element AlgebraPresentation::mul_monomials(const Monomial& a, const Monomial& b) const {
    check_size(a);
    check_size(b);
    Monomial out = unit();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        out.exps[i] = a.exps[i] + b.exps[i];
        if (gens_[i].height != kInfiniteHeight && out.exps[i] >= gens_[i].height) return Element{};
    }
    int sign = 1;
    if (prime_ != 2) {
        // Koszul sign from interleaving b's factors into a's canonical order:
        // b's generator i crosses every a-factor of larger index.
        long long crossings = 0;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (b.exps[i] == 0 || gens_[i].degree % 2 == 0) continue;
            for (std::size_t j = i + 1; j < gens_.size(); ++j)
                if (gens_[j].degree % 2 != 0) crossings += static_cast<long long>(b.exps[i]) * a.exps[j];
        }
        if (crossings % 2 != 0) sign = -1;
    }
    return element(out, sign);
}

Element AlgebraPresentation::mul(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Element t = mul_monomials(ma, mb);
            out = add(out, scale(t, static_cast<int>(static_cast<long long>(ca) * cb % prime_)));
        }
    return out;
}

Element AlgebraPresentation::power(const Element& a, int n) const {
    Element out = element(unit());
    for (int k = 0; k < n; ++k) out = mul(out, a);
    return out;
}

std::vector<Monomial> AlgebraPresentation::basis_of_degree(int d) const {
    if (d < 0) throw std::invalid_argument("basis_of_degree: negative degree");
    std::vector<Monomial> out;
    Monomial cur = unit();
    // Bounded composition search in generator order.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (rem == 0) {
            for (std::size_t j = i; j < gens_.size(); ++j) cur.exps[j] = 0;
            out.push_back(cur);
            return;
        }
        if (i == gens_.size()) return;
        const auto& g = gens_[i];
        int emax = rem / g.degree;
        if (g.height != kInfiniteHeight) emax = std::min(emax, g.height - 1);
        for (int e = 0; e <= emax; ++e) {
            cur.exps[i] = e;
            rec(i + 1, rem - e * g.degree);
        }
        cur.exps[i] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, int> AlgebraPresentation::poincare_dims(int max_degree) const {
    std::map<int, int> dims;
    for (int d = 0; d <= max_degree; ++d) {
        int n = static_cast<int>(basis_of_degree(d).size());
        if (n) dims[d] = n;
    }
    return dims;
}

int AlgebraPresentation::top_degree() const {
    int t = 0;
    for (const auto& g : gens_) {
        if (g.height == kInfiniteHeight)
            throw std::domain_error("top_degree: presentation has a polynomial generator");
        t += (g.height - 1) * g.degree;
    }
    return t;
}

int AlgebraPresentation::homogeneous_degree(const Element& e) const {
    if (e.is_zero()) return -1;
    int d = degree(e.terms.begin()->first);
    for (const auto& [m, c] : e.terms) {
        (void)c;
        if (degree(m) != d) throw std::domain_error("element is not homogeneous");
    }
    return d;
}

std::string AlgebraPresentation::to_string(const Monomial& m) const {
    check_size(m);
    if (m.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!m.exps[i]) continue;
        if (!first) os << "*";
        os << gens_[i].name;
        if (m.exps[i] > 1) os << "^" << m.exps[i];
        first = false;
    }
    return os.str();
}

std::string AlgebraPresentation::to_string(const Element& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms) {
        if (!first) os << " + ";
        if (c != 1 || m.is_unit()) os << c << (m.is_unit() ? "" : "*");
        if (!m.is_unit()) os << to_string(m);
        first = false;
    }
    return os.str();
}

}  // namespace lscat
