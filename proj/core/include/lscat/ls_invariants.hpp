#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lscat/homology.hpp"
#include "lscat/steenrod.hpp"

namespace lscat {

struct ZRelation {
    BasicOp op;
    std::string target;
};

// A Cotor generator designated as supporting a transpotence-type
// differential, together with its known Steenrod relations. Operations
// not listed are undetermined, never assumed zero.
struct ZClass {
    std::string name;
    int degree = 0;
    int weight = 1;
    std::vector<ZRelation> relations;
};

// Algebraic model of the level-m stage: the quotient A^[m] by all
// (m+1)-fold products, one shifted copy z * A^[m-1] per z-class, and an
// opaque extra summand whose only usable fact is that it is
// even-dimensional at m = 2.
class ProjectiveModel {
public:
    ProjectiveModel(const AlgebraPresentation& a, std::vector<ZClass> zs, int m);

    int level() const { return m_; }

    // monomial survives into A^[m]: nonzero in A and of weight <= m
    bool contains(const Monomial& mono) const;
    // z * mono lies in the z-shifted summand: mono nonzero of weight <= m-1
    bool z_summand_contains(const ZClass& z, const Monomial& mono) const;

    // graded dimensions of A^[m] + sum_z z * A^[m-1]; the extra summand is
    // opaque and excluded
    std::map<int, int> dims(int max_degree) const;

    // the one fact known about the extra summand at m = 2
    static constexpr bool s2_correction_is_even = true;

private:
    const AlgebraPresentation* a_;
    std::vector<ZClass> zs_;
    int m_;
};

struct WitnessChecks {
    bool survival = false;          // mu and x*mu fit inside the level-m model
    bool nonvanishing = false;      // x*mu != 0
    bool degree_vanishing = false;  // deg(z*mu) is an empty degree
    bool parity = false;            // deg(x) odd, so the S_2 correction cannot interfere
    bool cross_term = false;        // every Cartan cross term dies pessimistically
};

struct WitnessCertificate {
    std::string z_name;
    int z_degree = 0;
    int z_weight = 1;
    BasicOp op;
    std::string x;
    Monomial mu;
    int m = 1;
    WitnessChecks checks;
    bool strict_mode = false;
    bool strict_survival = true;  // only binding when strict_mode is set

    bool valid() const {
        bool core = checks.survival && checks.nonvanishing && checks.degree_vanishing && checks.parity &&
                    checks.cross_term;
        return strict_mode ? core && strict_survival : core;
    }
    int bound() const { return m + 1; }
};

struct InvariantReport {
    int cup = 0;
    int wgt = 0;
    int mwgt_lower = 0;
    std::optional<WitnessCertificate> certificate;
    std::string fallback_reason;
    // Largest level the survival reasoning itself allows, when a
    // differential bound exists; not certified output.
    std::optional<int> exploratory_m;
};

// Largest m with a nonzero m-fold product, via the closed form
// sum(height-1) cross-checked against a brute-force scan of monomial
// exponent sums. Disagreement signals a presentation bug.
int cup_length(const AlgebraPresentation& a);

// Toomer filtration length: max of sum(e_i * weight_i) over nonzero
// monomials.
int wgt(const AlgebraPresentation& a);

void for_each_alive_monomial(const AlgebraPresentation& a, const std::function<void(const Monomial&)>& fn);

struct WitnessCandidate {
    ZClass z;
    BasicOp op;
    std::string x;
    Monomial mu;
};

struct CandidateSearch {
    std::vector<WitnessCandidate> candidates;
    std::string fallback_reason;  // set when empty
};

// For each z-relation (op, x): mu ranges over monomials with x*mu a
// nonzero monomial of maximal weight wgt(A).
CandidateSearch find_witness_candidates(const AlgebraPresentation& a, const std::vector<ZClass>& zs);

struct StrictData {
    const AlgebraPresentation* e2 = nullptr;
    const std::vector<DifferentialSpec>* differentials = nullptr;
};

WitnessCertificate verify_witness(const AlgebraPresentation& a, const ActionTable& table, const ZClass& z,
                                  const BasicOp& op, const std::string& x, const Monomial& mu, int m,
                                  bool strict_mode = false, const StrictData& strict = {});

struct MwgtOptions {
    bool strict_mode = false;
    bool exploratory = false;
    StrictData strict;
};

// E2 presentation implied by a finite presentation plus its differential
// data: differential targets lose their truncation, z-classes come in as
// exterior generators. Reproduces the stored E2 pages of all catalog
// entries.
AlgebraPresentation synthesize_e2(const AlgebraPresentation& a, const std::vector<ZClass>& zs,
                                  const std::vector<DifferentialSpec>& ds);

InvariantReport mwgt_lower(const AlgebraPresentation& a, const ActionTable& table,
                           const std::vector<ZClass>& zs, const MwgtOptions& opts = {});

}  // namespace lscat
