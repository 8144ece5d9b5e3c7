#include "lscat/fp_matrix.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace lscat {

int binomial_mod(int n, int k, int p) {
    if (k < 0 || k > n) return 0;
    // One Pascal row at a time, reduced mod p as we go.
    std::vector<int> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[j] = (row[j] + row[j - 1]) % p;
    return row[k];
}

void FpMatrix::add_row_label(const std::string& r) {
    if (frozen_) throw std::logic_error("FpMatrix: frozen");
    if (!row_index_.count(r)) {
        row_index_[r] = 0;
        row_labels_.push_back(r);
    }
}

void FpMatrix::add_col_label(const std::string& c) {
    if (frozen_) throw std::logic_error("FpMatrix: frozen");
    if (!col_index_.count(c)) {
        col_index_[c] = 0;
        col_labels_.push_back(c);
    }
}

void FpMatrix::add(const std::string& row, const std::string& col, long long value) {
    if (frozen_) throw std::logic_error("FpMatrix: frozen");
    add_row_label(row);
    add_col_label(col);
    int v = mod_p(staged_[{row, col}] + value, p_);
    if (v == 0)
        staged_.erase({row, col});
    else
        staged_[{row, col}] = v;
}

void FpMatrix::freeze() {
    if (frozen_) return;
    std::sort(row_labels_.begin(), row_labels_.end());
    std::sort(col_labels_.begin(), col_labels_.end());
    for (std::size_t i = 0; i < row_labels_.size(); ++i) row_index_[row_labels_[i]] = static_cast<int>(i);
    for (std::size_t j = 0; j < col_labels_.size(); ++j) col_index_[col_labels_[j]] = static_cast<int>(j);
    rows_.assign(row_labels_.size(), {});
    for (const auto& [key, v] : staged_)
        rows_[row_index_[key.first]].emplace_back(col_index_[key.second], v);
    for (auto& r : rows_) std::sort(r.begin(), r.end());
    staged_.clear();
    frozen_ = true;
}

int FpMatrix::at(const std::string& row, const std::string& col) const {
    if (!frozen_) throw std::logic_error("FpMatrix: freeze before querying");
    auto ri = row_index_.find(row);
    auto ci = col_index_.find(col);
    if (ri == row_index_.end() || ci == col_index_.end()) throw std::out_of_range("FpMatrix: unknown label");
    const auto& r = rows_[ri->second];
    auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(ci->second, 0));
    if (it != r.end() && it->first == ci->second) return it->second;
    return 0;
}

// Row-echelon working set. Rows are dense (packed bits over F_2, bytes
// otherwise); pivots are taken leftmost-first in label order.
struct FpMatrix::Dense {
    int p;
    std::size_t cols;
    std::size_t words;
    std::vector<std::vector<std::uint64_t>> bit_rows;
    std::vector<std::vector<std::uint8_t>> byte_rows;
    std::vector<int> pivot_col;  // per stored row

    Dense(int p_, std::size_t cols_) : p(p_), cols(cols_), words((cols_ + 63) / 64) {}

    std::vector<std::uint64_t> pack(const std::vector<int>& dense) const {
        std::vector<std::uint64_t> w(words, 0);
        for (std::size_t j = 0; j < cols; ++j)
            if (dense[j]) w[j >> 6] |= (std::uint64_t{1} << (j & 63));
        return w;
    }

    static int leading_bit(const std::vector<std::uint64_t>& w) {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k]) return static_cast<int>(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w[k])));
        return -1;
    }

    // Reduces `row` against the pivots; if nonzero, keeps it as a new
    // pivot (normalized to leading coefficient 1) and returns true.
    bool absorb(std::vector<int> dense) {
        if (p == 2) {
            auto w = pack(dense);
            for (std::size_t r = 0; r < bit_rows.size(); ++r) {
                int c = pivot_col[r];
                if (w[c >> 6] & (std::uint64_t{1} << (c & 63)))
                    for (std::size_t k = 0; k < words; ++k) w[k] ^= bit_rows[r][k];
            }
            int lead = leading_bit(w);
            if (lead < 0) return false;
            bit_rows.push_back(std::move(w));
            pivot_col.push_back(lead);
            return true;
        }
        std::vector<std::uint8_t> row(cols);
        for (std::size_t j = 0; j < cols; ++j) row[j] = static_cast<std::uint8_t>(dense[j]);
        for (std::size_t r = 0; r < byte_rows.size(); ++r) {
            int c = pivot_col[r];
            int f = row[static_cast<std::size_t>(c)];
            if (f == 0) continue;
            int neg = p - f;
            const auto& pr = byte_rows[r];
            for (std::size_t k = 0; k < cols; ++k)
                row[k] = static_cast<std::uint8_t>((row[k] + neg * pr[k]) % p);
        }
        int lead = -1;
        for (std::size_t j = 0; j < cols; ++j)
            if (row[j]) { lead = static_cast<int>(j); break; }
        if (lead < 0) return false;
        int inv = Fp(row[static_cast<std::size_t>(lead)], p).inverse().value();
        for (std::size_t k = 0; k < cols; ++k) row[k] = static_cast<std::uint8_t>(row[k] * inv % p);
        byte_rows.push_back(std::move(row));
        pivot_col.push_back(lead);
        return true;
    }

    std::size_t rank() const { return pivot_col.size(); }

    // Back-substitution to reduced echelon form.
    void to_rref() {
        std::size_t n = pivot_col.size();
        if (p == 2) {
            for (std::size_t r = n; r-- > 0;) {
                for (std::size_t q = 0; q < r; ++q) {
                    int c = pivot_col[r];
                    if (bit_rows[q][c >> 6] & (std::uint64_t{1} << (c & 63)))
                        for (std::size_t k = 0; k < words; ++k) bit_rows[q][k] ^= bit_rows[r][k];
                }
            }
        } else {
            for (std::size_t r = n; r-- > 0;) {
                for (std::size_t q = 0; q < r; ++q) {
                    std::size_t c = static_cast<std::size_t>(pivot_col[r]);
                    int f = byte_rows[q][c];
                    if (f == 0) continue;
                    int neg = p - f;
                    for (std::size_t k = 0; k < cols; ++k)
                        byte_rows[q][k] = static_cast<std::uint8_t>((byte_rows[q][k] + neg * byte_rows[r][k]) % p);
                }
            }
        }
    }

    int entry(std::size_t r, std::size_t j) const {
        if (p == 2) return (bit_rows[r][j >> 6] >> (j & 63)) & 1 ? 1 : 0;
        return byte_rows[r][j];
    }
};

int FpMatrix::rank() const {
    if (!frozen_) throw std::logic_error("FpMatrix: freeze before querying");
    Dense d(p_, n_cols());
    std::vector<int> dense(n_cols(), 0);
    for (const auto& r : rows_) {
        std::fill(dense.begin(), dense.end(), 0);
        for (auto [c, v] : r) dense[static_cast<std::size_t>(c)] = v;
        d.absorb(dense);
    }
    return static_cast<int>(d.rank());
}

std::vector<std::map<std::string, int>> FpMatrix::kernel_basis() const {
    if (!frozen_) throw std::logic_error("FpMatrix: freeze before querying");
    Dense d(p_, n_cols());
    std::vector<int> dense(n_cols(), 0);
    for (const auto& r : rows_) {
        std::fill(dense.begin(), dense.end(), 0);
        for (auto [c, v] : r) dense[static_cast<std::size_t>(c)] = v;
        d.absorb(dense);
    }
    d.to_rref();
    std::vector<bool> is_pivot(n_cols(), false);
    std::vector<int> pivot_row(n_cols(), -1);
    for (std::size_t r = 0; r < d.pivot_col.size(); ++r) {
        is_pivot[static_cast<std::size_t>(d.pivot_col[r])] = true;
        pivot_row[static_cast<std::size_t>(d.pivot_col[r])] = static_cast<int>(r);
    }
    std::vector<std::map<std::string, int>> basis;
    for (std::size_t f = 0; f < n_cols(); ++f) {
        if (is_pivot[f]) continue;
        std::map<std::string, int> vec;
        vec[col_labels_[f]] = 1;
        for (std::size_t c = 0; c < n_cols(); ++c) {
            if (!is_pivot[c]) continue;
            int val = d.entry(static_cast<std::size_t>(pivot_row[c]), f);
            if (val) vec[col_labels_[c]] = mod_p(-val, p_);
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

FpMatrix::Membership FpMatrix::image_membership(const std::map<std::string, int>& v) const {
    if (!frozen_) throw std::logic_error("FpMatrix: freeze before querying");
    for (const auto& [label, value] : v) {
        (void)value;
        if (!row_index_.count(label)) throw std::invalid_argument("image_membership: vector label not a row label");
    }
    // Solve M x = v by eliminating the augmented system [M | v] rowwise.
    std::size_t nc = n_cols();
    Dense d(p_, nc + 1);
    std::vector<int> dense(nc + 1, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::fill(dense.begin(), dense.end(), 0);
        for (auto [c, val] : rows_[i]) dense[static_cast<std::size_t>(c)] = val;
        auto it = v.find(row_labels_[i]);
        if (it != v.end()) dense[nc] = mod_p(it->second, p_);
        d.absorb(dense);
    }
    Membership m;
    for (int pc : d.pivot_col)
        if (static_cast<std::size_t>(pc) == nc) return m;  // inconsistent row: 0 = nonzero
    m.contained = true;
    d.to_rref();
    for (std::size_t r = 0; r < d.pivot_col.size(); ++r) {
        std::size_t c = static_cast<std::size_t>(d.pivot_col[r]);
        int val = d.entry(r, nc);
        if (val) m.preimage[col_labels_[c]] = val;
    }
    return m;
}

FpMatrix FpMatrix::multiply(const FpMatrix& other) const {
    if (!frozen_ || !other.frozen_) throw std::logic_error("FpMatrix: freeze before multiplying");
    if (p_ != other.p_) throw std::invalid_argument("FpMatrix: mixed moduli");
    FpMatrix out(p_);
    for (const auto& r : row_labels_) out.add_row_label(r);
    for (const auto& c : other.col_labels_) out.add_col_label(c);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (auto [k, a] : rows_[i]) {
            auto it = other.row_index_.find(col_labels_[static_cast<std::size_t>(k)]);
            if (it == other.row_index_.end()) continue;
            for (auto [j, b] : other.rows_[static_cast<std::size_t>(it->second)])
                out.add(row_labels_[i], other.col_labels_[static_cast<std::size_t>(j)],
                        static_cast<long long>(a) * b);
        }
    }
    out.freeze();
    return out;
}

bool FpMatrix::is_zero() const {
    if (!frozen_) throw std::logic_error("FpMatrix: freeze before querying");
    for (const auto& r : rows_)
        if (!r.empty()) return false;
    return true;
}

}  // namespace lscat
