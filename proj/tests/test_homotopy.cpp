#include "support.hpp"

#include "monores/dg_algebra.hpp"
#include "monores/errors.hpp"
#include "monores/homotopy.hpp"
#include "monores/pivot_relabeling.hpp"
#include "monores/resolutions.hpp"

#include <doctest.h>

using namespace monores;
using namespace monores::testing;

namespace {

void require_all(const HomotopyReport& report) {
    for (const IdentityCheck& c : report.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
    CHECK(report.pass);
}

} // namespace

TEST_CASE("express_in_generators") {
    const MonomialIdeal i = ideal_from("vars: x y\ngens: x^2, x*y, y^2");
    const Polynomial a = parse_polynomial("x^2*y + 3*x*y^2 - y^3", i.variables());
    for (DivisorStrategy strategy : {DivisorStrategy::first, DivisorStrategy::last}) {
        const auto c = express_in_generators(a, i, strategy);
        REQUIRE(c.size() == 3);
        Polynomial sum;
        for (std::size_t j = 1; j <= 3; ++j) {
            sum += c[j - 1].shifted(i.generator(j));
        }
        CHECK(sum == a);
    }
    CHECK(express_in_generators(a, i, DivisorStrategy::first) != express_in_generators(a, i, DivisorStrategy::last));
    CHECK_THROWS_AS(express_in_generators(parse_polynomial("x^2 + y", i.variables()), i), membership_error);
}

TEST_CASE("CIData validates the coefficients") {
    const MonomialIdeal i = ideal_from("vars: x y\ngens: x^2, x*y, y^2");
    const Polynomial a = parse_polynomial("x^2 + y^2", i.variables());
    const Polynomial one = Polynomial::constant(1, 2);
    CHECK_NOTHROW(CIData(i, {a}, {{one, Polynomial(), one}}));
    CHECK_THROWS_AS(CIData(i, {a}, {{one, one, one}}), membership_error);
    CHECK_THROWS_AS(CIData(i, {a}, {{one, one}}), dimension_error);
    const CIData derived(i, {a});
    CHECK(derived.coefficient(1, 1) == one);
    CHECK(derived.coefficient(1, 3) == one);
}

TEST_CASE("Taylor homotopies") {
    std::mt19937 rng(5);
    for (const auto& [name, ideal] : corpus()) {
        CAPTURE(name);
        for (std::size_t r = 1; r <= 3; ++r) {
            const CIData ci = random_ci(rng, ideal, r);
            const HomotopySystem h = taylor_homotopy(ideal, ci);
            CHECK(h.complex == taylor_resolution(ideal));
            require_all(verify_homotopy(h, ci));
            // σ_s is left multiplication by Σ_j a_sj ε_j
            const TaylorAlgebra t(ideal);
            for (std::size_t s = 1; s <= r; ++s) {
                ChainElement lead;
                for (std::size_t j = 1; j <= ideal.num_generators(); ++j) {
                    lead.add(IndexSet{j}, ci.coefficient(s, j));
                }
                for (const IndexSet a : all_subsets(ideal.num_generators())) {
                    CHECK(sigma_of(h, s, a) == t.product(lead, ChainElement::basis(a, ideal.nvars())));
                }
            }
        }
    }
}

TEST_CASE("pivot homotopies on random instances") {
    const auto instances = random_instances(30);
    std::array<std::size_t, 3> case_hits{};
    for (const Instance& in : instances) {
        CAPTURE(in.ideal.to_string());
        CAPTURE(in.s.to_string());
        const HomotopySystem h = pivot_homotopy(in.ideal, in.s, in.ci);
        CHECK(h.complex == pivot_complex(in.ideal, in.s));
        require_all(verify_homotopy(h, in.ci));

        const PivotRelabeling pi = relabel_for_pivot(in.ideal, in.s);
        const MonomialIdeal relabeled = pi.relabel(in.ideal);
        const CIData ci = in.ci.relabeled(relabeled, pi);
        const std::size_t l = in.s.size();
        const HomotopySystem normal = pivot_homotopy_normal_form(relabeled, l, ci);
        require_all(verify_homotopy(normal, ci));
        const IndexSet head = IndexSet::range(l);
        const PivotNormalForm algebra(relabeled, l);
        const TaylorAlgebra taylor(relabeled);
        for (std::size_t k = 0; k < normal.complex.length(); ++k) {
            for (const BasisLabel& b : normal.complex.basis(k)) {
                const IndexSet a = b.cell;
                const std::size_t inside = (a & head).size();
                for (std::size_t s = 1; s <= ci.r(); ++s) {
                    const ChainElement image = sigma_of(normal, s, a);
                    ChainElement lead;
                    for (std::size_t j = 1; j <= relabeled.num_generators(); ++j) {
                        lead.add(IndexSet{j}, ci.coefficient(s, j));
                    }
                    const ChainElement x = ChainElement::basis(a, relabeled.nvars());
                    CHECK(image == algebra.product(lead, x));
                    if (inside + 2 <= l) {
                        CHECK(image == taylor.product(lead, x));
                    }
                    if (image.is_zero()) {
                        continue;
                    }
                    if (inside + 2 <= l) {
                        ++case_hits[0];
                    } else if (a.contains(l + 1)) {
                        ++case_hits[1];
                    } else {
                        ++case_hits[2];
                    }
                }
            }
        }
    }
    for (std::size_t c = 0; c < 3; ++c) {
        CAPTURE(c);
        CHECK(case_hits[c] > 0);
    }
}

TEST_CASE("identities on the individual cell classes") {
    const auto instances = random_instances(30);
    // commutator classes: |[l]∖A| = 1 with l+1 in A, and without it;
    // anticommutator classes: |A∩[l]| = l-2 or l-1, with or without l+1
    std::array<std::size_t, 6> tested{};
    for (const Instance& in : instances) {
        const PivotRelabeling pi = relabel_for_pivot(in.ideal, in.s);
        const MonomialIdeal relabeled = pi.relabel(in.ideal);
        const CIData ci = in.ci.relabeled(relabeled, pi);
        const std::size_t l = in.s.size();
        const HomotopySystem h = pivot_homotopy_normal_form(relabeled, l, ci);
        const IndexSet head = IndexSet::range(l);
        auto cls = [&](std::size_t inside, bool with_pivot) {
            return [=](IndexSet a) { return (a & head).size() == inside && a.contains(l + 1) == with_pivot; };
        };
        std::size_t slot = 0;
        for (bool with_pivot : {true, false}) {
            for (std::size_t s = 1; s <= ci.r(); ++s) {
                const CellClassCheck c = check_commutator_on_cells(h, ci, s, cls(l - 1, with_pivot));
                CHECK(c.pass);
                tested[slot] += c.cells_tested;
            }
            ++slot;
        }
        for (std::size_t inside : {l - 2, l - 1}) {
            for (bool with_pivot : {true, false}) {
                for (std::size_t s = 1; s <= ci.r(); ++s) {
                    for (std::size_t t = s + 1; t <= ci.r(); ++t) {
                        const CellClassCheck c = check_anticommutator_on_cells(h, s, t, cls(inside, with_pivot));
                        CHECK(c.pass);
                        tested[slot] += c.cells_tested;
                    }
                }
                ++slot;
            }
        }
    }
    for (std::size_t c = 0; c < tested.size(); ++c) {
        CAPTURE(c);
        CHECK(tested[c] > 0);
    }
}

TEST_CASE("divisor strategies give different but valid systems") {
    const MonomialIdeal i = ideal_from("vars: x y\ngens: x^2, x*y, y^2");
    const Polynomial a = parse_polynomial("x^2*y + x*y^2", i.variables());
    const CIData first(i, {a}, DivisorStrategy::first);
    const CIData last(i, {a}, DivisorStrategy::last);
    CHECK(first.coefficients() != last.coefficients());
    const HomotopySystem hf = pivot_homotopy(i, IndexSet{1, 3}, first);
    const HomotopySystem hl = pivot_homotopy(i, IndexSet{1, 3}, last);
    require_all(verify_homotopy(hf, first));
    require_all(verify_homotopy(hl, last));
    CHECK(hf.sigma != hl.sigma);
}

TEST_CASE("mutated homotopies fail verification") {
    const MonomialIdeal i = ideal_from("vars: a b c\ngens: a^2, b^2, c^2, a*b*c");
    const CIData ci(i, {parse_polynomial("a^2 + b^2", i.variables()), parse_polynomial("c^2", i.variables())});
    HomotopySystem h = pivot_homotopy(i, IndexSet{1, 2, 3}, ci);
    require_all(verify_homotopy(h, ci));
    SUBCASE("perturbed entry") {
        PolyMatrix& m = h.sigma[0][1];
        const auto [where, value] = *m.entries().begin();
        m.set(where.first, where.second, value + Polynomial::monomial(Multidegree{0, 0, 0}));
        const HomotopyReport r = verify_homotopy(h, ci);
        CHECK_FALSE(r.pass);
    }
    SUBCASE("swapped homotopies") {
        std::swap(h.sigma[0], h.sigma[1]);
        const HomotopyReport r = verify_homotopy(h, ci);
        CHECK_FALSE(r.pass);
        CHECK_FALSE(r.checks[1].pass);
        CHECK(r.checks[1].first_failure.has_value());
    }
}
