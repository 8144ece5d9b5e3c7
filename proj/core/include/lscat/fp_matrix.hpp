#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lscat/fp.hpp"

namespace lscat {

// Sparse matrix over F_p with labeled row/column index sets. Labels are
// sorted lexicographically at freeze time, which fixes the pivot order and
// makes ranks and reported kernel bases reproducible bit-for-bit.
//
// Zero entries are never stored; assigning a value of 0 erases the slot.
class FpMatrix {
public:
    explicit FpMatrix(int p) : p_(p) {}

    int prime() const { return p_; }

    void add_row_label(const std::string& r);
    void add_col_label(const std::string& c);

    // Accumulates into the slot (creating labels on demand).
    void add(const std::string& row, const std::string& col, long long value);

    // Sorts labels and compacts entries. Mutation is rejected afterwards;
    // every query below requires a frozen matrix.
    void freeze();
    bool frozen() const { return frozen_; }

    std::size_t n_rows() const { return row_labels_.size(); }
    std::size_t n_cols() const { return col_labels_.size(); }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    int at(const std::string& row, const std::string& col) const;

    int rank() const;

    // Basis of { k : M k = 0 }, vectors keyed by column label.
    std::vector<std::map<std::string, int>> kernel_basis() const;

    // Is v (keyed by row label) in the column span? Returns a preimage
    // keyed by column label when it is.
    struct Membership {
        bool contained = false;
        std::map<std::string, int> preimage;
    };
    Membership image_membership(const std::map<std::string, int>& v) const;

    // this * other, matching this's columns against other's rows by label.
    FpMatrix multiply(const FpMatrix& other) const;

    bool is_zero() const;

private:
    struct Dense;  // row-echelon working set, defined in the .cpp

    int p_;
    bool frozen_ = false;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::map<std::string, int> row_index_;
    std::map<std::string, int> col_index_;
    // Pre-freeze: keyed by label pair. Post-freeze: rows_ holds sorted
    // (col, value) pairs per row.
    std::map<std::pair<std::string, std::string>, int> staged_;
    std::vector<std::vector<std::pair<int, int>>> rows_;
};

}  // namespace lscat
