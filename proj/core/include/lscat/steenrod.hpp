#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lscat/graded_algebra.hpp"

namespace lscat {

// A basic Steenrod operation: Sq^i (i >= 1) at p = 2, or beta^eps P^i at
// odd p with (eps, i) != (0, 0). The identity is not a BasicOp.
struct BasicOp {
    int i = 1;
    bool bockstein = false;

    bool operator<(const BasicOp& o) const {
        return i != o.i ? i < o.i : bockstein < o.bockstein;
    }
    bool operator==(const BasicOp& o) const { return i == o.i && bockstein == o.bockstein; }
};

int op_shift(const BasicOp& op, int p);
std::string op_name(const BasicOp& op, int p);
BasicOp sq(int i);
BasicOp power_op(int i);
BasicOp beta_power_op(int i);  // beta P^i; i = 0 is the plain Bockstein

// One multiplicative slot whose value is an undetermined class of known
// degree |gen| + shift(op).
struct UnknownSlot {
    int gen = 0;
    BasicOp op;

    bool operator<(const UnknownSlot& o) const {
        return gen != o.gen ? gen < o.gen : op < o.op;
    }
    bool operator==(const UnknownSlot& o) const { return gen == o.gen && op == o.op; }
};

// coeff * v_1 * ... * v_k where v_j is the (unknown) value of slots[j],
// multiplied on the right in order. Koszul signs from normalization are
// already absorbed into coeff, so the expression is multilinear in the
// slot values.
struct UnknownTerm {
    Element coeff;
    std::vector<UnknownSlot> slots;
};

struct ActionResult {
    Element known;
    std::vector<UnknownTerm> unknowns;

    bool fully_known() const { return unknowns.empty(); }
};

struct ValidationIssue {
    std::string what;
};

// Partial Steenrod action on the generators of a finite presentation.
// Values are stored per (generator, basic op); everything not stored and
// not forced by the unstable axioms or by an empty target degree is
// Unknown. Queries go through the forced rules first, so a stored entry
// can never override an axiom (contradictions are reported by validate()
// and rejected by autofill()).
class ActionTable {
public:
    ActionTable() = default;
    explicit ActionTable(AlgebraPresentation base);

    const AlgebraPresentation& base() const { return base_; }
    int prime() const { return base_.prime(); }

    // Stores an entry; the value must be homogeneous of degree
    // |gen| + shift(op) (zero is always acceptable).
    void set(const std::string& gen, const BasicOp& op, const Element& value);
    // Records an explicitly-unknown entry (round-trips through JSON).
    void set_unknown(const std::string& gen, const BasicOp& op);

    const std::map<std::pair<int, BasicOp>, std::optional<Element>>& stored() const { return stored_; }

    // Checks every stored entry against the forced rules; throws on a
    // contradiction, otherwise returns the (validated) table. Idempotent.
    ActionTable autofill() const;
    bool autofilled() const { return autofilled_; }

    // Resolved value of op on a single generator: forced rules, then the
    // stored entry, then degree vanishing; nullopt means Unknown.
    std::optional<Element> value(int gen, const BasicOp& op) const;

    // Full Cartan expansion of op on a homogeneous element. Unknown
    // generator entries propagate into unknown terms; truncation applies
    // to every coefficient.
    ActionResult cartan_apply(const BasicOp& op, const Element& e) const;

    // True iff the expansion is zero for every completion of the unknown
    // entries: the known part vanishes and each unknown term dies against
    // every tuple of basis monomials of the slots' degrees.
    bool pessimistic_is_zero(const BasicOp& op, const Element& e) const;

    std::vector<ValidationIssue> validate() const;

    std::string describe(const ActionResult& r) const;

private:
    std::optional<Element> forced_value(int gen, const BasicOp& op) const;

    AlgebraPresentation base_;
    std::map<std::pair<int, BasicOp>, std::optional<Element>> stored_;
    bool autofilled_ = false;
};

}  // namespace lscat
