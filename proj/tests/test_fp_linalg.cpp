#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lscat/fp_matrix.hpp"

using namespace lscat;

namespace {

FpMatrix from_rows(int p, const std::vector<std::vector<int>>& rows) {
    FpMatrix m(p);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m.add_row_label("r" + std::to_string(i));
            m.add_col_label("c" + std::to_string(j));
            if (rows[i][j]) m.add("r" + std::to_string(i), "c" + std::to_string(j), rows[i][j]);
        }
    m.freeze();
    return m;
}

}  // namespace

TEST_CASE("Fp arithmetic") {
    Fp a(2, 3), b(2, 3);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 1);
    CHECK((-a).value() == 1);
    CHECK(a.inverse().value() == 2);
    CHECK(Fp(-1, 3).value() == 2);
    CHECK_THROWS(Fp(1, 3) + Fp(1, 2));
    CHECK(binomial_mod(4, 2, 2) == 0);
    CHECK(binomial_mod(4, 2, 3) == 0);
    CHECK(binomial_mod(3, 1, 3) == 0);
    CHECK(binomial_mod(5, 2, 3) == 1);
}

TEST_CASE("rank examples") {
    CHECK(from_rows(2, {{1, 0}, {0, 1}}).rank() == 2);
    CHECK(from_rows(2, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}).rank() == 0);
    // det = 1 - 4 = -3 = 0 mod 3
    CHECK(from_rows(3, {{1, 2}, {2, 1}}).rank() == 1);
}

TEST_CASE("kernel examples") {
    // zero map on 3 columns
    FpMatrix z(2);
    z.add_row_label("r0");
    for (int j = 0; j < 3; ++j) z.add_col_label("c" + std::to_string(j));
    z.freeze();
    CHECK(z.kernel_basis().size() == 3);

    CHECK(from_rows(2, {{1, 0}, {0, 1}}).kernel_basis().empty());

    auto ker = from_rows(2, {{1, 1}}).kernel_basis();
    REQUIRE(ker.size() == 1);
    CHECK(ker[0].at("c0") == 1);
    CHECK(ker[0].at("c1") == 1);
}

TEST_CASE("image membership") {
    auto m = from_rows(2, {{1}, {1}});
    auto hit = m.image_membership({{"r0", 1}, {"r1", 1}});
    CHECK(hit.contained);
    auto miss = m.image_membership({{"r0", 1}});
    CHECK_FALSE(miss.contained);
    auto zero = m.image_membership({});
    CHECK(zero.contained);
    CHECK(zero.preimage.empty());
    CHECK_THROWS(m.image_membership({{"nope", 1}}));

    auto id = from_rows(3, {{1, 0}, {0, 1}});
    auto any = id.image_membership({{"r0", 2}, {"r1", 1}});
    CHECK(any.contained);
    CHECK(any.preimage.at("c0") == 2);
    CHECK(any.preimage.at("c1") == 1);
}

TEST_CASE("rank-nullity and kernel correctness on random matrices") {
    std::mt19937 rng(20240811);
    for (int p : {2, 3, 5}) {
        for (int trial = 0; trial < 40; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 6);
            int cols = 1 + static_cast<int>(rng() % 6);
            std::vector<std::vector<int>> data(rows, std::vector<int>(cols, 0));
            for (auto& r : data)
                for (auto& v : r) v = static_cast<int>(rng() % static_cast<unsigned>(p));
            FpMatrix m = from_rows(p, data);
            auto ker = m.kernel_basis();
            CHECK(m.rank() + static_cast<int>(ker.size()) == cols);
            for (const auto& k : ker) {
                // check M k = 0 exactly
                for (int i = 0; i < rows; ++i) {
                    long long acc = 0;
                    for (int j = 0; j < cols; ++j) {
                        auto it = k.find("c" + std::to_string(j));
                        if (it != k.end()) acc += static_cast<long long>(data[i][j]) * it->second;
                    }
                    CHECK(acc % p == 0);
                }
            }
        }
    }
}

TEST_CASE("rank is invariant under label permutation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 5);
        int cols = 2 + static_cast<int>(rng() % 5);
        std::vector<std::vector<int>> data(rows, std::vector<int>(cols, 0));
        for (auto& r : data)
            for (auto& v : r) v = static_cast<int>(rng() % 3);
        FpMatrix m = from_rows(3, data);
        // same entries, permuted labels
        FpMatrix shuffled(3);
        std::vector<int> rperm(rows), cperm(cols);
        for (int i = 0; i < rows; ++i) rperm[i] = (i * 7 + 3) % rows;
        for (int j = 0; j < cols; ++j) cperm[j] = (j * 5 + 1) % cols;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                shuffled.add_row_label("q" + std::to_string(rperm[i] * rows + i));
                shuffled.add_col_label("d" + std::to_string(cperm[j] * cols + j));
                if (data[i][j])
                    shuffled.add("q" + std::to_string(rperm[i] * rows + i),
                                 "d" + std::to_string(cperm[j] * cols + j), data[i][j]);
            }
        shuffled.freeze();
        CHECK(m.rank() == shuffled.rank());
    }
}

TEST_CASE("multiply matches by label and detects zero products") {
    FpMatrix a(2);
    a.add("x", "m", 1);
    a.add("y", "m", 1);
    a.freeze();
    FpMatrix b(2);
    b.add("m", "u", 1);
    b.add("m", "v", 1);
    b.freeze();
    auto prod = a.multiply(b);
    CHECK(prod.at("x", "u") == 1);
    CHECK(prod.at("y", "v") == 1);
    CHECK_FALSE(prod.is_zero());

    FpMatrix c(2);
    c.add("u", "t", 1);
    c.add("v", "t", 1);
    c.freeze();
    CHECK(prod.multiply(c).is_zero());  // each row hits t twice, 1+1 = 0
}
