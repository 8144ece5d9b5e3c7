#include "lscat/steenrod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lscat {

int op_shift(const BasicOp& op, int p) {
    if (p == 2) {
        if (op.bockstein) throw std::invalid_argument("Sq ops carry no separate Bockstein");
        if (op.i < 1) throw std::invalid_argument("Sq^i needs i >= 1");
        return op.i;
    }
    if (op.i < 0 || (op.i == 0 && !op.bockstein))
        throw std::invalid_argument("beta^e P^i needs (e, i) != (0, 0)");
    return 2 * op.i * (p - 1) + (op.bockstein ? 1 : 0);
}

std::string op_name(const BasicOp& op, int p) {
    std::ostringstream os;
    if (p == 2) {
        os << "Sq^" << op.i;
        return os.str();
    }
    if (op.bockstein) os << "beta";
    if (op.i > 0) os << (op.bockstein ? " " : "") << "P^" << op.i;
    return os.str();
}

BasicOp sq(int i) { return BasicOp{i, false}; }
BasicOp power_op(int i) { return BasicOp{i, false}; }
BasicOp beta_power_op(int i) { return BasicOp{i, true}; }

ActionTable::ActionTable(AlgebraPresentation base) : base_(std::move(base)) {}

void ActionTable::set(const std::string& gen, const BasicOp& op, const Element& value) {
    int gi = base_.generator_index(gen);
    if (gi < 0) throw std::invalid_argument("ActionTable::set: unknown generator " + gen);
    int shift = op_shift(op, prime());
    if (!value.is_zero()) {
        int d = base_.homogeneous_degree(value);
        if (d != base_.generator(static_cast<std::size_t>(gi)).degree + shift)
            throw std::invalid_argument("ActionTable::set: value of " + op_name(op, prime()) + " " + gen +
                                        " has the wrong degree");
    }
    stored_[{gi, op}] = value;
    autofilled_ = false;
}

void ActionTable::set_unknown(const std::string& gen, const BasicOp& op) {
    int gi = base_.generator_index(gen);
    if (gi < 0) throw std::invalid_argument("ActionTable::set_unknown: unknown generator " + gen);
    op_shift(op, prime());
    stored_[{gi, op}] = std::nullopt;
    autofilled_ = false;
}

// Values dictated by the unstable axioms alone.
std::optional<Element> ActionTable::forced_value(int gen, const BasicOp& op) const {
    const auto& g = base_.generator(static_cast<std::size_t>(gen));
    Element gel = base_.element(base_.generator_monomial(static_cast<std::size_t>(gen)));
    if (prime() == 2) {
        if (op.i > g.degree) return base_.zero();
        if (op.i == g.degree) return base_.mul(gel, gel);
        return std::nullopt;
    }
    if (2 * op.i > g.degree) return base_.zero();
    if (2 * op.i == g.degree) {
        if (op.bockstein) return base_.zero();  // beta of a p-th power
        return base_.power(gel, prime());
    }
    return std::nullopt;
}

std::optional<Element> ActionTable::value(int gen, const BasicOp& op) const {
    int shift = op_shift(op, prime());
    if (auto f = forced_value(gen, op)) return f;
    auto it = stored_.find({gen, op});
    if (it != stored_.end() && it->second.has_value()) return it->second;
    int target = base_.generator(static_cast<std::size_t>(gen)).degree + shift;
    if (base_.basis_of_degree(target).empty()) return base_.zero();
    return std::nullopt;
}

ActionTable ActionTable::autofill() const {
    for (const auto& [key, val] : stored_) {
        if (!val.has_value()) continue;
        auto forced = forced_value(key.first, key.second);
        if (forced && !(*forced == *val))
            throw std::invalid_argument("autofill: stored entry contradicts a forced value: " +
                                        op_name(key.second, prime()) + " " +
                                        base_.generator(static_cast<std::size_t>(key.first)).name);
    }
    ActionTable out = *this;
    out.autofilled_ = true;
    return out;
}

namespace {

// Operation appearing inside a Cartan expansion; (0, false) is the identity.
struct ExtOp {
    int i = 0;
    bool beta = false;
    bool identity() const { return i == 0 && !beta; }
    int key() const { return i * 2 + (beta ? 1 : 0); }
};

// Intermediate value: known part plus multilinear unknown terms keyed by
// their canonical slot list.
struct Mixed {
    Element known;
    std::map<std::vector<UnknownSlot>, Element> terms;
};

class CartanEngine {
public:
    CartanEngine(const ActionTable& table) : t_(table), a_(table.base()), p_(table.prime()) {}

    int slot_degree(const UnknownSlot& s) const {
        return a_.generator(static_cast<std::size_t>(s.gen)).degree + op_shift(s.op, p_);
    }

    // Sorts slots canonically; the Koszul sign of the permutation goes
    // into the returned multiplier.
    int canonicalize(std::vector<UnknownSlot>& slots) const {
        int sign = 1;
        for (std::size_t i = 1; i < slots.size(); ++i)
            for (std::size_t j = i; j > 0 && slots[j] < slots[j - 1]; --j) {
                if ((slot_degree(slots[j]) % 2) && (slot_degree(slots[j - 1]) % 2)) sign = -sign;
                std::swap(slots[j], slots[j - 1]);
            }
        return sign;
    }

    void add_term(Mixed& m, std::vector<UnknownSlot> slots, Element coeff) const {
        if (coeff.is_zero()) return;
        int sign = canonicalize(slots);
        if (sign != 1) coeff = a_.scale(coeff, sign);
        auto it = m.terms.find(slots);
        if (it == m.terms.end()) {
            m.terms.emplace(std::move(slots), std::move(coeff));
        } else {
            it->second = a_.add(it->second, coeff);
            if (it->second.is_zero()) m.terms.erase(it);
        }
    }

    void add_mixed(Mixed& into, const Mixed& m, int scalar = 1) const {
        if (scalar == 0) return;
        into.known = a_.add(into.known, scalar == 1 ? m.known : a_.scale(m.known, scalar));
        for (const auto& [slots, coeff] : m.terms)
            add_term(into, slots, scalar == 1 ? coeff : a_.scale(coeff, scalar));
    }

    int slots_degree(const std::vector<UnknownSlot>& slots) const {
        int d = 0;
        for (const auto& s : slots) d += slot_degree(s);
        return d;
    }

    Mixed mul(const Mixed& x, const Mixed& y) const {
        Mixed out;
        out.known = a_.mul(x.known, y.known);
        for (const auto& [slots, coeff] : y.terms)
            add_term(out, slots, a_.mul(x.known, coeff));
        for (const auto& [xs, xc] : x.terms) {
            // x-term slot values commute past the y parts with a Koszul sign.
            int sx = slots_degree(xs) % 2;
            {
                Element c;
                for (const auto& [m, cy] : y.known.terms) {
                    int sgn = (sx && (a_.degree(m) % 2)) ? -1 : 1;
                    c = a_.add(c, a_.scale(a_.mul(xc, a_.element(m, cy)), sgn));
                }
                add_term(out, xs, c);
            }
            for (const auto& [ys, yc] : y.terms) {
                Element c;
                for (const auto& [m, cy] : yc.terms) {
                    int sgn = (sx && (a_.degree(m) % 2)) ? -1 : 1;
                    c = a_.add(c, a_.scale(a_.mul(xc, a_.element(m, cy)), sgn));
                }
                std::vector<UnknownSlot> slots = xs;
                slots.insert(slots.end(), ys.begin(), ys.end());
                add_term(out, slots, c);
            }
        }
        return out;
    }

    Mixed unit_mixed() const {
        Mixed m;
        m.known = a_.element(a_.unit());
        return m;
    }

    Mixed single(const ExtOp& op, int gen) const {
        Mixed m;
        Element gel = a_.element(a_.generator_monomial(static_cast<std::size_t>(gen)));
        if (op.identity()) {
            m.known = gel;
            return m;
        }
        BasicOp b{op.i, op.beta};
        if (auto v = t_.value(gen, b)) {
            m.known = *v;
            return m;
        }
        m.terms[{UnknownSlot{gen, b}}] = a_.element(a_.unit());
        return m;
    }

    // Cartan splittings of op across (u, rest) where u has degree u_deg:
    // tuples (left op, right op, sign).
    std::vector<std::tuple<ExtOp, ExtOp, int>> splits(const ExtOp& op, int u_deg) const {
        std::vector<std::tuple<ExtOp, ExtOp, int>> out;
        for (int j = 0; j <= op.i; ++j) {
            if (!op.beta) {
                out.emplace_back(ExtOp{j, false}, ExtOp{op.i - j, false}, 1);
            } else {
                out.emplace_back(ExtOp{j, true}, ExtOp{op.i - j, false}, 1);
                out.emplace_back(ExtOp{j, false}, ExtOp{op.i - j, true}, (u_deg % 2) ? -1 : 1);
            }
        }
        return out;
    }

    Mixed apply_monomial(const ExtOp& op, const Monomial& mon) const {
        std::vector<int> factors;
        for (std::size_t i = 0; i < a_.n_generators(); ++i)
            for (int e = 0; e < mon.exps[i]; ++e) factors.push_back(static_cast<int>(i));
        std::map<std::pair<int, std::size_t>, Mixed> memo;
        return apply_factors(op, factors, 0, memo);
    }

    Mixed apply_factors(const ExtOp& op, const std::vector<int>& factors, std::size_t pos,
                        std::map<std::pair<int, std::size_t>, Mixed>& memo) const {
        if (pos == factors.size()) {
            Mixed m;
            if (op.identity()) m.known = a_.element(a_.unit());
            return m;
        }
        auto key = std::make_pair(op.key(), pos);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Mixed out;
        int u_deg = a_.generator(static_cast<std::size_t>(factors[pos])).degree;
        if (pos + 1 == factors.size()) {
            out = single(op, factors[pos]);
        } else {
            for (const auto& [l, r, sign] : splits(op, u_deg)) {
                Mixed left = single(l, factors[pos]);
                if (left.known.is_zero() && left.terms.empty()) continue;
                Mixed right = apply_factors(r, factors, pos + 1, memo);
                if (right.known.is_zero() && right.terms.empty()) continue;
                add_mixed(out, mul(left, right), sign);
            }
        }
        memo.emplace(key, out);
        return out;
    }

private:
    const ActionTable& t_;
    const AlgebraPresentation& a_;
    int p_;
};

}  // namespace

ActionResult ActionTable::cartan_apply(const BasicOp& op, const Element& e) const {
    op_shift(op, prime());
    base_.homogeneous_degree(e);  // throws on a non-homogeneous element
    CartanEngine eng(*this);
    Mixed acc;
    for (const auto& [mon, c] : e.terms) {
        Mixed m = eng.apply_monomial(ExtOp{op.i, op.bockstein}, mon);
        eng.add_mixed(acc, m, c);
    }
    ActionResult r;
    r.known = acc.known;
    for (const auto& [slots, coeff] : acc.terms) r.unknowns.push_back(UnknownTerm{coeff, slots});
    return r;
}

namespace {

bool term_dies(const AlgebraPresentation& a, const Element& coeff, const std::vector<UnknownSlot>& slots,
               std::size_t idx) {
    if (coeff.is_zero()) return true;
    if (idx == slots.size()) return false;  // nonzero product survives some completion
    const auto& s = slots[idx];
    int d = a.generator(static_cast<std::size_t>(s.gen)).degree + op_shift(s.op, a.prime());
    auto basis = a.basis_of_degree(d);
    if (basis.empty()) return true;  // no possible value but zero
    for (const auto& b : basis)
        if (!term_dies(a, a.mul(coeff, a.element(b)), slots, idx + 1)) return false;
    return true;
}

}  // namespace

bool ActionTable::pessimistic_is_zero(const BasicOp& op, const Element& e) const {
    ActionResult r = cartan_apply(op, e);
    if (!r.known.is_zero()) return false;
    for (const auto& term : r.unknowns)
        if (!term_dies(base_, term.coeff, term.slots, 0)) return false;
    return true;
}

std::vector<ValidationIssue> ActionTable::validate() const {
    std::vector<ValidationIssue> issues;
    // Stored entries against the unstable axioms.
    for (const auto& [key, val] : stored_) {
        if (!val.has_value()) continue;
        auto forced = forced_value(key.first, key.second);
        if (forced && !(*forced == *val)) {
            issues.push_back({"unstable axiom: " + op_name(key.second, prime()) + " " +
                              base_.generator(static_cast<std::size_t>(key.first)).name + " must be " +
                              base_.to_string(*forced) + ", stored " + base_.to_string(*val)});
        }
    }
    // beta applied twice must vanish wherever both steps are known.
    if (prime() != 2) {
        BasicOp beta = beta_power_op(0);
        for (std::size_t g = 0; g < base_.n_generators(); ++g) {
            auto v = value(static_cast<int>(g), beta);
            if (!v || v->is_zero()) continue;
            ActionResult r = cartan_apply(beta, *v);
            if (r.fully_known() && !r.known.is_zero())
                issues.push_back({"beta^2 nonzero on " + base_.generator(g).name + ": " +
                                  base_.to_string(r.known)});
        }
        for (const auto& [key, val] : stored_) {
            if (!val.has_value() || !key.second.bockstein || val->is_zero()) continue;
            ActionResult r = cartan_apply(beta, *val);
            if (r.fully_known() && !r.known.is_zero())
                issues.push_back({"beta applied to " + op_name(key.second, prime()) + " " +
                                  base_.generator(static_cast<std::size_t>(key.first)).name +
                                  " is nonzero: " + base_.to_string(r.known)});
        }
    }
    // Top operations on products of generators must square/cube them when
    // the Cartan expansion is fully known.
    for (std::size_t i = 0; i < base_.n_generators(); ++i) {
        for (std::size_t j = i; j < base_.n_generators(); ++j) {
            Element gi = base_.element(base_.generator_monomial(i));
            Element gj = base_.element(base_.generator_monomial(j));
            Element m = base_.mul(gi, gj);
            if (m.is_zero()) continue;
            int d = base_.homogeneous_degree(m);
            BasicOp top{0, false};
            Element expect;
            if (prime() == 2) {
                top = sq(d);
                expect = base_.mul(m, m);
            } else {
                if (d % 2 != 0) continue;
                top = power_op(d / 2);
                expect = base_.power(m, prime());
            }
            ActionResult r = cartan_apply(top, m);
            if (r.fully_known() && !(r.known == expect))
                issues.push_back({"Cartan inconsistency on " + base_.to_string(m) + ": " +
                                  op_name(top, prime()) + " gives " + base_.to_string(r.known) +
                                  ", expected " + base_.to_string(expect)});
        }
    }
    return issues;
}

std::string ActionTable::describe(const ActionResult& r) const {
    std::ostringstream os;
    os << base_.to_string(r.known);
    for (const auto& term : r.unknowns) {
        os << " + (" << base_.to_string(term.coeff) << ")";
        for (const auto& s : term.slots)
            os << "*[" << op_name(s.op, prime()) << " "
               << base_.generator(static_cast<std::size_t>(s.gen)).name << "]";
    }
    return os.str();
}

}  // namespace lscat
