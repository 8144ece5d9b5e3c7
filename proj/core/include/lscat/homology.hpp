#pragma once

#include <map>
#include <string>
#include <vector>

#include "lscat/coalgebra.hpp"
#include "lscat/fp_matrix.hpp"
#include "lscat/graded_algebra.hpp"

namespace lscat {

// Display conventions: bar words show at internal degree minus word
// length (loop-space grading), cobar words at internal degree plus word
// length. Both reproduce the generator degrees of the catalog
// presentations they are compared against.
enum class Grading { Bar, Cobar };

struct BigradedDims {
    Grading grading = Grading::Bar;
    std::map<std::pair<int, int>, int> dims;  // (word length s, internal degree t) -> dim

    int display_degree(int s, int t) const { return grading == Grading::Bar ? t - s : t + s; }
    std::map<int, int> totals() const;  // by display degree
    bool empty() const { return dims.empty(); }
};

// True iff every nonzero entry sits in an even display degree.
bool collapse_check(const BigradedDims& d);

// One internal-degree slice of a bar or cobar complex, kept around for
// the d*d = 0 and Euler-characteristic property checks. For bar,
// boundary[s] maps word length s to s-1; for cobar, s to s+1.
struct ComplexSlice {
    int t = 0;
    std::map<int, int> word_counts;      // per word length
    std::map<int, FpMatrix> boundary;    // keyed by source word length
    std::map<int, int> homology;         // per word length
};

ComplexSlice build_bar_slice(const AlgebraPresentation& a, int t);
ComplexSlice build_cobar_slice(const CoalgebraPresentation& c, int t);

// Homology of the reduced bar complex of a finite presentation, through
// display degree max_display.
BigradedDims bar_homology(const AlgebraPresentation& a, int max_display);

// Homology of the reduced cobar complex, through display degree
// max_display.
BigradedDims cobar_homology(const CoalgebraPresentation& c, int max_display);

struct DifferentialSpec {
    int page = 2;
    std::string source;      // an exterior generator of the E2 presentation
    std::string target_gen;  // pure-power target
    int target_exp = 2;
};

struct EinfResult {
    AlgebraPresentation presentation;
    std::map<int, int> dims;
    std::vector<std::string> consistency_notes;
};

// Formal transpotence-type differentials: each one removes its exterior
// source generator and truncates the target generator at the stated
// power. Inconsistent target exponents (a target already truncated) are
// an error; degree / word-length mismatches are reported as notes.
EinfResult apply_differentials(const AlgebraPresentation& e2, const std::vector<DifferentialSpec>& ds,
                               int max_degree);

struct DimDiff {
    int degree = 0;
    int computed = 0;
    int expected = 0;
};

std::vector<DimDiff> compare_dims(const std::map<int, int>& computed, const std::map<int, int>& expected,
                                  int max_degree);
std::vector<DimDiff> compare_dims(const BigradedDims& computed, const AlgebraPresentation& expected,
                                  int max_degree);
std::vector<DimDiff> compare_dims(const BigradedDims& computed, const CoalgebraPresentation& expected,
                                  int max_degree);

std::string describe(const std::vector<DimDiff>& diffs);

}  // namespace lscat
