#include "lscat/homology.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lscat {

std::map<int, int> BigradedDims::totals() const {
    std::map<int, int> out;
    for (const auto& [st, d] : dims)
        if (d) out[display_degree(st.first, st.second)] += d;
    return out;
}

bool collapse_check(const BigradedDims& d) {
    for (const auto& [st, dim] : d.dims)
        if (dim && d.display_degree(st.first, st.second) % 2 != 0) return false;
    return true;
}

namespace {

std::string word_label(const std::vector<int>& letters) {
    // Fixed-width indices keep lexicographic label order aligned with
    // lexicographic letter order, which pins the pivot order.
    std::string s;
    char buf[8];
    for (int x : letters) {
        std::snprintf(buf, sizeof buf, "%05d", x);
        s += buf;
        s += '.';
    }
    return s;
}

// Words over a letter alphabet with prescribed total degree, grouped by
// word length.
std::map<int, std::vector<std::vector<int>>> words_of_degree(const std::vector<int>& letter_degrees, int t) {
    std::map<int, std::vector<std::vector<int>>> by_len;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            if (!cur.empty()) by_len[static_cast<int>(cur.size())].push_back(cur);
            return;
        }
        for (std::size_t i = 0; i < letter_degrees.size(); ++i) {
            if (letter_degrees[i] > rem) continue;
            cur.push_back(static_cast<int>(i));
            rec(rem - letter_degrees[i]);
            cur.pop_back();
        }
    };
    rec(t);
    return by_len;
}

void fill_homology(ComplexSlice& slice, bool bar) {
    // dim H at s = (words at s) - rank(out of s) - rank(into s).
    for (const auto& [s, n] : slice.word_counts) {
        int r_out = 0, r_in = 0;
        auto it = slice.boundary.find(s);
        if (it != slice.boundary.end()) r_out = it->second.rank();
        int s_in = bar ? s + 1 : s - 1;
        it = slice.boundary.find(s_in);
        if (it != slice.boundary.end()) r_in = it->second.rank();
        slice.homology[s] = n - r_out - r_in;
    }
}

}  // namespace

ComplexSlice build_bar_slice(const AlgebraPresentation& a, int t) {
    if (t <= 0) throw std::invalid_argument("build_bar_slice: need t > 0");
    if (!a.all_heights_finite()) throw std::domain_error("bar complex needs a finite presentation");
    ComplexSlice slice;
    slice.t = t;

    // Letters: positive-degree basis monomials up to degree t.
    std::vector<Monomial> letters;
    std::vector<int> letter_degrees;
    for (int d = 1; d <= t; ++d)
        for (const auto& m : a.basis_of_degree(d)) {
            letters.push_back(m);
            letter_degrees.push_back(d);
        }
    auto by_len = words_of_degree(letter_degrees, t);
    for (const auto& [s, ws] : by_len) slice.word_counts[s] = static_cast<int>(ws.size());

    // Letter lookup for merged factors.
    std::map<Monomial, int> letter_index;
    for (std::size_t i = 0; i < letters.size(); ++i) letter_index[letters[i]] = static_cast<int>(i);

    for (const auto& [s, ws] : by_len) {
        if (s < 2) continue;
        FpMatrix mat(a.prime());
        for (const auto& w : ws) mat.add_col_label(word_label(w));
        if (by_len.count(s - 1))
            for (const auto& w : by_len.at(s - 1)) mat.add_row_label(word_label(w));
        for (const auto& w : ws) {
            const std::string col = word_label(w);
            int prefix_deg = 0;
            for (int i = 0; i + 1 < s; ++i) {
                prefix_deg += letter_degrees[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])];
                // sign exponent: position (1-based) plus degrees through slot i.
                int sign = ((i + 1 + prefix_deg) % 2 != 0) ? -1 : 1;
                Element prod = a.mul_monomials(letters[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])],
                                               letters[static_cast<std::size_t>(w[static_cast<std::size_t>(i + 1)])]);
                for (const auto& [mono, c] : prod.terms) {
                    std::vector<int> merged;
                    merged.reserve(static_cast<std::size_t>(s) - 1);
                    for (int j = 0; j < s; ++j) {
                        if (j == i + 1) continue;
                        merged.push_back(j == i ? letter_index.at(mono) : w[static_cast<std::size_t>(j)]);
                    }
                    mat.add(word_label(merged), col, sign * c);
                }
            }
        }
        mat.freeze();
        slice.boundary.emplace(s, std::move(mat));
    }
    fill_homology(slice, true);
    return slice;
}

ComplexSlice build_cobar_slice(const CoalgebraPresentation& c, int t) {
    if (t <= 0) throw std::invalid_argument("build_cobar_slice: need t > 0");
    ComplexSlice slice;
    slice.t = t;

    std::vector<CoBasis> letters = c.basis_up_to(t);
    std::vector<int> letter_degrees;
    letter_degrees.reserve(letters.size());
    for (const auto& b : letters) letter_degrees.push_back(c.degree(b));
    auto by_len = words_of_degree(letter_degrees, t);
    for (const auto& [s, ws] : by_len) slice.word_counts[s] = static_cast<int>(ws.size());

    std::map<CoBasis, int> letter_index;
    for (std::size_t i = 0; i < letters.size(); ++i) letter_index[letters[i]] = static_cast<int>(i);

    for (const auto& [s, ws] : by_len) {
        FpMatrix mat(c.prime());
        for (const auto& w : ws) mat.add_col_label(word_label(w));
        if (by_len.count(s + 1))
            for (const auto& w : by_len.at(s + 1)) mat.add_row_label(word_label(w));
        for (const auto& w : ws) {
            const std::string col = word_label(w);
            int prefix_deg = 0;
            for (int i = 0; i < s; ++i) {
                const CoBasis& letter = letters[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])];
                for (const auto& [l, r, coeff] : c.reduced_coproduct(letter)) {
                    // sign exponent: position plus degrees strictly left of
                    // the slot plus the left output factor.
                    int e = (i + 1) + prefix_deg + c.degree(l);
                    int sign = (e % 2 != 0) ? -1 : 1;
                    std::vector<int> split;
                    split.reserve(static_cast<std::size_t>(s) + 1);
                    for (int j = 0; j < s; ++j) {
                        if (j == i) {
                            split.push_back(letter_index.at(l));
                            split.push_back(letter_index.at(r));
                        } else {
                            split.push_back(w[static_cast<std::size_t>(j)]);
                        }
                    }
                    mat.add(word_label(split), col, sign * coeff);
                }
                prefix_deg += letter_degrees[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])];
            }
        }
        mat.freeze();
        slice.boundary.emplace(s, std::move(mat));
    }
    fill_homology(slice, false);
    return slice;
}

BigradedDims bar_homology(const AlgebraPresentation& a, int max_display) {
    if (max_display < 0) throw std::invalid_argument("bar_homology: negative cutoff");
    BigradedDims out;
    out.grading = Grading::Bar;
    out.dims[{0, 0}] = 1;
    int dmin = kInfiniteHeight;
    for (const auto& g : a.generators()) dmin = std::min(dmin, g.degree);
    if (dmin == kInfiniteHeight) return out;  // trivial algebra
    if (dmin < 2) throw std::domain_error("bar_homology: generators must sit in degree >= 2");
    // Internal degree t shows at t - s with s <= t/dmin, so only t with
    // t - floor(t/dmin) <= max_display can contribute.
    for (int t = 1; t - t / dmin <= max_display; ++t) {
        ComplexSlice slice = build_bar_slice(a, t);
        for (const auto& [s, h] : slice.homology)
            if (h && t - s <= max_display) out.dims[{s, t}] = h;
    }
    return out;
}

BigradedDims cobar_homology(const CoalgebraPresentation& c, int max_display) {
    if (max_display < 0) throw std::invalid_argument("cobar_homology: negative cutoff");
    BigradedDims out;
    out.grading = Grading::Cobar;
    out.dims[{0, 0}] = 1;
    for (int t = 1; t + 1 <= max_display; ++t) {
        ComplexSlice slice = build_cobar_slice(c, t);
        for (const auto& [s, h] : slice.homology)
            if (h && t + s <= max_display) out.dims[{s, t}] = h;
    }
    return out;
}

EinfResult apply_differentials(const AlgebraPresentation& e2, const std::vector<DifferentialSpec>& ds,
                               int max_degree) {
    EinfResult res;
    std::vector<GeneratorSpec> gens = e2.generators();
    std::map<std::string, int> pos;
    for (std::size_t i = 0; i < gens.size(); ++i) pos[gens[i].name] = static_cast<int>(i);
    std::vector<bool> removed(gens.size(), false);

    for (const auto& d : ds) {
        auto s_it = pos.find(d.source);
        auto t_it = pos.find(d.target_gen);
        if (s_it == pos.end()) throw std::invalid_argument("apply_differentials: unknown source " + d.source);
        if (t_it == pos.end()) throw std::invalid_argument("apply_differentials: unknown target " + d.target_gen);
        GeneratorSpec& src = gens[static_cast<std::size_t>(s_it->second)];
        GeneratorSpec& tgt = gens[static_cast<std::size_t>(t_it->second)];
        if (src.height != 2)
            throw std::invalid_argument("apply_differentials: source " + d.source + " is not exterior");
        if (removed[static_cast<std::size_t>(s_it->second)])
            throw std::invalid_argument("apply_differentials: source " + d.source + " used twice");
        if (d.target_exp < 2) throw std::invalid_argument("apply_differentials: target exponent must be >= 2");
        if (tgt.height != kInfiniteHeight)
            throw std::domain_error("apply_differentials: target " + d.target_gen +
                                    " already truncated; exponent inconsistent with an earlier differential");
        if (tgt.degree * d.target_exp != src.degree + 1) {
            std::ostringstream os;
            os << "degree mismatch: d_" << d.page << "(" << d.source << ") = " << d.target_gen << "^"
               << d.target_exp << " has degree " << tgt.degree * d.target_exp << ", source + 1 = "
               << src.degree + 1;
            res.consistency_notes.push_back(os.str());
        }
        if (tgt.weight * d.target_exp != src.weight + d.page) {
            std::ostringstream os;
            os << "word-length mismatch: target " << d.target_gen << "^" << d.target_exp << " sits in filtration "
               << tgt.weight * d.target_exp << ", source filtration + page = " << src.weight + d.page;
            res.consistency_notes.push_back(os.str());
        }
        tgt.height = d.target_exp;
        removed[static_cast<std::size_t>(s_it->second)] = true;
    }

    std::vector<GeneratorSpec> kept;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!removed[i]) kept.push_back(gens[i]);
    res.presentation = AlgebraPresentation(e2.prime(), kept);
    res.dims = res.presentation.poincare_dims(max_degree);
    return res;
}

std::vector<DimDiff> compare_dims(const std::map<int, int>& computed, const std::map<int, int>& expected,
                                  int max_degree) {
    std::vector<DimDiff> out;
    for (int d = 0; d <= max_degree; ++d) {
        int c = computed.count(d) ? computed.at(d) : 0;
        int e = expected.count(d) ? expected.at(d) : 0;
        if (c != e) out.push_back({d, c, e});
    }
    return out;
}

std::vector<DimDiff> compare_dims(const BigradedDims& computed, const AlgebraPresentation& expected,
                                  int max_degree) {
    return compare_dims(computed.totals(), expected.poincare_dims(max_degree), max_degree);
}

std::vector<DimDiff> compare_dims(const BigradedDims& computed, const CoalgebraPresentation& expected,
                                  int max_degree) {
    return compare_dims(computed.totals(), expected.dims_up_to(max_degree), max_degree);
}

std::string describe(const std::vector<DimDiff>& diffs) {
    if (diffs.empty()) return "no discrepancies";
    std::ostringstream os;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (i) os << "; ";
        os << "degree " << diffs[i].degree << ": computed " << diffs[i].computed << ", expected "
           << diffs[i].expected;
    }
    return os.str();
}

}  // namespace lscat
