#include "support.hpp"

#include "monores/errors.hpp"
#include "monores/homotopy.hpp"
#include "monores/pivot_relabeling.hpp"
#include "monores/resolutions.hpp"
#include "monores/shamash.hpp"

#include <doctest.h>

using namespace monores;
using namespace monores::testing;

namespace {

std::size_t rank_oracle_formula(const std::vector<std::size_t>& f, std::size_t r, std::size_t i) {
    std::size_t total = 0;
    for (std::size_t d = 0; 2 * d <= i; ++d) {
        const std::size_t k = i - 2 * d;
        // number of u in N^r with |u| = d
        total += binom_oracle(static_cast<long>(r + d) - 1, static_cast<long>(d)) * (k < f.size() ? f[k] : 0);
    }
    return total;
}

} // namespace

TEST_CASE("Shamash ranks and the square identity on random instances") {
    std::mt19937 rng(31);
    std::size_t tested = 0;
    for (const auto& [name, ideal] : corpus()) {
        CAPTURE(name);
        for (std::size_t r = 1; r <= 2; ++r) {
            const CIData ci = random_ci(rng, ideal, r);
            HomotopySystem h = taylor_homotopy(ideal, ci);
            if (const auto s = smallest_pivot_indices(ideal)) {
                h = pivot_homotopy(ideal, *s, ci);
            }
            const std::size_t n = 5;
            const ShamashComplex c = shamash_complex(h, ci, n);
            const auto f = h.complex.ranks();
            for (std::size_t i = 0; i <= n; ++i) {
                CHECK(c.ranks()[i] == rank_oracle_formula(f, r, i));
                CHECK(shamash_rank(f, r, i) == rank_oracle_formula(f, r, i));
            }
            CHECK(check_shamash_square(c, ci).pass);
            ++tested;
        }
    }
    CHECK(tested > 20);
}

TEST_CASE("Shamash bases carry the shifted multidegrees") {
    const MonomialIdeal i = ideal_from("vars: x y\ngens: x^2, x*y, y^2");
    const CIData ci(i, {parse_polynomial("x^2", i.variables()), parse_polynomial("y^2", i.variables())});
    const ShamashComplex c = shamash_complex(taylor_homotopy(i, ci), ci, 4);
    for (std::size_t d = 0; d < c.bases.size(); ++d) {
        for (const ShamashLabel& b : c.bases[d]) {
            CHECK(b.k + 2 * (b.u[0] + b.u[1]) == d);
        }
    }
    CHECK(c.ranks() == std::vector<std::size_t>{1, 3, 5, 7, 9});
}

TEST_CASE("exactness over R for monomial complete intersections") {
    const MonomialIdeal i = ideal_from("vars: x y\ngens: x^2, x*y, y^2");
    SUBCASE("pivot base, a = x^2") {
        const CIData ci(i, {parse_polynomial("x^2", i.variables())});
        const ShamashComplex c = shamash_complex(pivot_homotopy(i, IndexSet{1, 3}, ci), ci, 5);
        const RExactnessReport r = check_exactness_over_monomial_ci(c, ci, Multidegree{6, 6});
        CHECK(r.applicable);
        CHECK(r.pass);
        CHECK(r.strands_checked == 49);
    }
    SUBCASE("Taylor base, a = x^2, y^2") {
        const CIData ci(i, {parse_polynomial("x^2", i.variables()), parse_polynomial("y^2", i.variables())});
        const ShamashComplex c = shamash_complex(taylor_homotopy(i, ci), ci, 5);
        CHECK(check_exactness_over_monomial_ci(c, ci, Multidegree{5, 5}).pass);
    }
    SUBCASE("not applicable") {
        const CIData sum(i, {parse_polynomial("x^2 + y^2", i.variables())});
        const ShamashComplex c = shamash_complex(taylor_homotopy(i, sum), sum, 3);
        CHECK_FALSE(check_exactness_over_monomial_ci(c, sum, Multidegree{3, 3}).applicable);
        const CIData shared(i, {parse_polynomial("x^2", i.variables()), parse_polynomial("x*y", i.variables())});
        const ShamashComplex d = shamash_complex(taylor_homotopy(i, shared), shared, 3);
        CHECK_FALSE(check_exactness_over_monomial_ci(d, shared, Multidegree{3, 3}).applicable);
    }
    SUBCASE("mutation") {
        const CIData ci(i, {parse_polynomial("x^2", i.variables())});
        ShamashComplex c = shamash_complex(pivot_homotopy(i, IndexSet{1, 3}, ci), ci, 5);
        PolyMatrix& m = c.differentials[2];
        const auto [where, value] = *m.entries().begin();
        m.set(where.first, where.second, value * Rational(2));
        CHECK_FALSE(check_shamash_square(c, ci).pass);
        CHECK_THROWS_AS(check_exactness_over_monomial_ci(c, ci, Multidegree{6, 6}), contract_error);
    }
}

TEST_CASE("Betti bounds") {
    for (std::size_t q = 2; q <= 6; ++q) {
        for (std::size_t l = 2; l < q; ++l) {
            std::vector<std::size_t> pivot;
            for (std::size_t k = 0; k <= q; ++k) {
                pivot.push_back(binom_oracle(q, k) - binom_oracle(static_cast<long>(q - l), static_cast<long>(k) - static_cast<long>(l)));
            }
            for (std::size_t r = 1; r <= 3; ++r) {
                for (std::size_t n = 0; n <= 8; ++n) {
                    CHECK(betti_bound(q, l, r, n, BoundMode::structural) == rank_oracle_formula(pivot, r, n));
                    const std::size_t i = n / 2;
                    std::size_t literal = 0;
                    for (std::size_t j = 0; j <= i; ++j) {
                        literal += (n < pivot.size() ? pivot[n] : 0) *
                                   binom_oracle(static_cast<long>(r + i - j) - 1, static_cast<long>(r) - 1);
                    }
                    CHECK(betti_bound(q, l, r, n, BoundMode::paper_literal) == literal);
                }
            }
        }
    }
    std::vector<std::uint64_t> literal;
    std::vector<std::uint64_t> structural;
    for (std::size_t n = 0; n <= 4; ++n) {
        literal.push_back(betti_bound(3, 2, 1, n, BoundMode::paper_literal));
        structural.push_back(betti_bound(3, 2, 1, n, BoundMode::structural));
    }
    CHECK(literal == std::vector<std::uint64_t>{1, 3, 4, 0, 0});
    CHECK(structural == std::vector<std::uint64_t>{1, 3, 3, 3, 3});
    CHECK(shamash_rank({1, 3, 2}, 0, 1) == 3);
}
