#pragma once

#include "monores/chain_complex.hpp"
#include "monores/dg_algebra.hpp"
#include "monores/homotopy.hpp"
#include "monores/io.hpp"
#include "monores/monomial_ideal.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace monores::testing {

struct NamedIdeal {
    std::string name;
    MonomialIdeal ideal;
};

inline MonomialIdeal ideal_from(const std::string& text) { return parse_ideal(text); }

// Worked examples and small hand-picked ideals.
inline std::vector<NamedIdeal> fixed_corpus() {
    const std::vector<std::pair<std::string, std::string>> texts = {
        {"path3", "vars: w x y z\ngens: w*x, x*y, y*z"},
        {"squares_abc", "vars: a b c\ngens: a^2, b^2, c^2, a*b*c"},
        {"cycle4", "vars: w x y z\ngens: w*x, x*y, y*z, w*z"},
        {"u_path", "vars: u w x y z\ngens: u, w*x, x*y, y*z"},
        {"xy_square", "vars: x y\ngens: x^2, x*y, y^2"},
        {"variables", "vars: x y z\ngens: x, y, z"},
        {"triangle", "vars: x y z\ngens: x*y, y*z, x*z"},
        {"squares_mixed", "vars: x y z\ngens: x^2, y^2, z^2, x*y, y*z"},
        {"power4", "vars: x y\ngens: x^4, x^3*y, x^2*y^2, x*y^3, y^4"},
        {"square_diag", "vars: a b c d\ngens: a*b, b*c, c*d, a*d, a*c"},
        {"mixed4", "vars: x y z\ngens: x^2*y, x*y^2, y*z^2, x*z^2"},
        {"cube_pair", "vars: x y z\ngens: x^3, y^3, x*y*z"},
    };
    std::vector<NamedIdeal> out;
    for (const auto& [name, text] : texts) {
        out.push_back({name, ideal_from(text)});
    }
    return out;
}

inline Multidegree random_monomial(std::mt19937& rng, std::size_t nvars, unsigned max_exp) {
    std::uniform_int_distribution<unsigned> e(0, max_exp);
    Multidegree m(nvars);
    for (std::size_t k = 0; k < nvars; ++k) {
        m[k] = e(rng);
    }
    return m;
}

// Minimally generated ideal with q generators, exponents at most max_exp.
inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t nvars, std::size_t q, unsigned max_exp) {
    std::vector<std::string> vars;
    for (std::size_t k = 0; k < nvars; ++k) {
        vars.push_back("x" + std::to_string(k + 1));
    }
    for (;;) {
        std::vector<Multidegree> gens;
        for (int attempt = 0; attempt < 200 && gens.size() < q; ++attempt) {
            const Multidegree m = random_monomial(rng, nvars, max_exp);
            if (m.is_zero()) {
                continue;
            }
            const bool comparable = std::any_of(gens.begin(), gens.end(), [&](const Multidegree& g) {
                return divides(g, m) || divides(m, g);
            });
            if (!comparable) {
                gens.push_back(m);
            }
        }
        if (gens.size() == q) {
            return MonomialIdeal(vars, gens);
        }
    }
}

inline std::vector<NamedIdeal> random_corpus(unsigned seed, std::size_t count) {
    std::mt19937 rng(seed);
    std::vector<NamedIdeal> out;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t nvars = 3 + k % 2;
        const std::size_t q = 3 + k % 3;
        out.push_back({"random" + std::to_string(k), random_ideal(rng, nvars, q, 2)});
    }
    return out;
}

// The corpus shared by the property suites and the acceptance binary: every
// ideal has q <= 5.
inline std::vector<NamedIdeal> corpus() {
    auto out = fixed_corpus();
    for (auto& n : random_corpus(20240611u, 10)) {
        out.push_back(std::move(n));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracles. None of these call the library's sign, lcm or rank
// routines.

inline std::vector<std::size_t> members_of(IndexSet a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= 64; ++i) {
        if (a.mask() >> (i - 1) & 1u) {
            out.push_back(i);
        }
    }
    return out;
}

// Sign of the permutation sorting the concatenation, by bubble sort.
inline int bubble_sign(std::vector<std::size_t> seq) {
    int sign = 1;
    for (std::size_t pass = 0; pass < seq.size(); ++pass) {
        for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
            if (seq[k] == seq[k + 1]) {
                return 0;
            }
            if (seq[k] > seq[k + 1]) {
                std::swap(seq[k], seq[k + 1]);
                sign = -sign;
            }
        }
    }
    return sign;
}

inline int sign_oracle(IndexSet a, IndexSet b) {
    auto seq = members_of(a);
    const auto tail = members_of(b);
    seq.insert(seq.end(), tail.begin(), tail.end());
    return bubble_sign(seq);
}

inline Multidegree lcm_oracle(const MonomialIdeal& ideal, IndexSet a) {
    Multidegree out(ideal.nvars());
    for (std::size_t i : members_of(a)) {
        for (std::size_t k = 0; k < ideal.nvars(); ++k) {
            out[k] = std::max(out[k], ideal.generators()[i - 1][k]);
        }
    }
    return out;
}

inline bool divides_oracle(const Multidegree& a, const Multidegree& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) {
            return false;
        }
    }
    return true;
}

inline std::vector<std::size_t> gaps_oracle(const MonomialIdeal& ideal, IndexSet tau) {
    std::vector<std::size_t> out;
    const Multidegree m = lcm_oracle(ideal, tau);
    for (std::size_t h = 1; h <= ideal.num_generators(); ++h) {
        if (!(tau.mask() >> (h - 1) & 1u) && divides_oracle(ideal.generators()[h - 1], m)) {
            out.push_back(h);
        }
    }
    return out;
}

inline std::size_t binom_oracle(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    std::size_t out = 1;
    for (long j = 1; j <= k; ++j) {
        out = out * static_cast<std::size_t>(n - k + j) / static_cast<std::size_t>(j);
    }
    return out;
}

// Rank over Q by plain Gaussian elimination on mpq_class.
inline std::size_t rank_oracle(std::vector<std::vector<mpq_class>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && m[r][c] != 0) {
                const mpq_class f = m[r][c] / m[rank][c];
                for (std::size_t k = c; k < cols; ++k) {
                    m[r][k] -= f * m[rank][k];
                }
            }
        }
        ++rank;
    }
    return rank;
}

// dim H_i of the strand of c at multidegree a, for i = 0..length-1, using
// only the stored labels and matrices.
inline std::vector<std::size_t> strand_homology_oracle(const BasedComplex& c, const Multidegree& a) {
    const std::size_t len = c.length();
    std::vector<std::vector<std::size_t>> kept(len);
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t k = 0; k < c.rank(i); ++k) {
            if (divides_oracle(c.basis(i)[k].degree, a)) {
                kept[i].push_back(k);
            }
        }
    }
    std::vector<std::size_t> ranks(len + 1, 0);  // ranks[i] = rank of strand of d_i
    for (std::size_t i = 1; i < len; ++i) {
        std::vector<std::vector<mpq_class>> m(kept[i - 1].size(), std::vector<mpq_class>(kept[i].size()));
        for (std::size_t r = 0; r < kept[i - 1].size(); ++r) {
            for (std::size_t k = 0; k < kept[i].size(); ++k) {
                const Multidegree& top = c.basis(i)[kept[i][k]].degree;
                const Multidegree& bottom = c.basis(i - 1)[kept[i - 1][r]].degree;
                if (!divides_oracle(bottom, top)) {
                    continue;
                }
                Multidegree shift(top.size());
                for (std::size_t v = 0; v < top.size(); ++v) {
                    shift[v] = top[v] - bottom[v];
                }
                m[r][k] = c.differential(i).at(kept[i - 1][r], kept[i][k]).coefficient(shift).value();
            }
        }
        ranks[i] = rank_oracle(std::move(m));
    }
    std::vector<std::size_t> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = kept[i].size() - ranks[i] - ranks[i + 1];
    }
    return out;
}

// Every multidegree componentwise below the lcm of all generators.
inline std::vector<Multidegree> box(const MonomialIdeal& ideal) {
    const Multidegree top = lcm_oracle(ideal, IndexSet::range(ideal.num_generators()));
    std::vector<Multidegree> out{Multidegree(top.size())};
    for (std::size_t v = 0; v < top.size(); ++v) {
        std::vector<Multidegree> next;
        for (const Multidegree& m : out) {
            for (unsigned e = 0; e <= top[v]; ++e) {
                Multidegree n = m;
                n[v] = e;
                next.push_back(n);
            }
        }
        out = std::move(next);
    }
    return out;
}

// Exactness over the whole box: H_0 is Q exactly at degree 0 and every
// higher homology vanishes.
inline bool exact_oracle(const BasedComplex& c, const MonomialIdeal& ideal) {
    for (const Multidegree& a : box(ideal)) {
        const auto h = strand_homology_oracle(c, a);
        for (std::size_t i = 1; i < h.size(); ++i) {
            if (h[i] != 0) {
                return false;
            }
        }
    }
    return true;
}

inline std::vector<IndexSet> subsets_with_gaps(const MonomialIdeal& ideal) {
    std::vector<IndexSet> out;
    const std::size_t q = ideal.num_generators();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q); ++mask) {
        const IndexSet s = IndexSet::from_mask(mask);
        if (s.size() >= 2 && !gaps_oracle(ideal, s).empty()) {
            out.push_back(s);
        }
    }
    return out;
}

// Random complete intersection data: a_s = Σ_j c_sj m_j with c_sj zero, a
// scalar, or a scalar times a variable.
inline CIData random_ci(std::mt19937& rng, const MonomialIdeal& ideal, std::size_t r) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> scalar(-3, 3);
    std::uniform_int_distribution<std::size_t> var(0, ideal.nvars() - 1);
    for (;;) {
        std::vector<Polynomial> elements;
        std::vector<std::vector<Polynomial>> coeffs;
        bool nonzero = true;
        for (std::size_t s = 0; s < r; ++s) {
            std::vector<Polynomial> row;
            Polynomial a;
            for (std::size_t j = 1; j <= ideal.num_generators(); ++j) {
                Polynomial c;
                const int k = kind(rng);
                const int value = scalar(rng);
                if (k >= 1 && value != 0) {
                    Multidegree m(ideal.nvars());
                    if (k == 3) {
                        m[var(rng)] = 1;
                    }
                    c = Polynomial::monomial(m, Rational(value));
                }
                a += c.shifted(ideal.generator(j));
                row.push_back(std::move(c));
            }
            nonzero = nonzero && !a.is_zero();
            elements.push_back(std::move(a));
            coeffs.push_back(std::move(row));
        }
        if (nonzero) {
            return CIData(ideal, elements, coeffs);
        }
    }
}

// σ_s(ε_A) read off the matrices of a homotopy system.
inline ChainElement sigma_of(const HomotopySystem& h, std::size_t s, IndexSet a) {
    const std::size_t k = a.size();
    const auto col = h.complex.index_of(k, a);
    if (!col) {
        throw std::logic_error("cell " + a.to_string() + " is not a basis element");
    }
    ChainElement out;
    if (k >= h.sigma.at(s - 1).size()) {
        return out;
    }
    for (const auto& [row, value] : h.map(s, k).column(*col)) {
        out.add(h.complex.basis(k + 1)[row].cell, value);
    }
    return out;
}

struct Instance {
    MonomialIdeal ideal;
    IndexSet s;
    CIData ci;
};

// Random ideals with a pivot set, r between 1 and 3.
inline std::vector<Instance> random_instances(std::size_t count) {
    std::mt19937 rng(99);
    std::vector<Instance> out;
    std::size_t k = 0;
    while (out.size() < count) {
        const MonomialIdeal ideal = random_ideal(rng, 3 + k % 2, 3 + k % 3, 2);
        ++k;
        const auto candidates = subsets_with_gaps(ideal);
        if (candidates.empty()) {
            continue;
        }
        const IndexSet s = candidates[rng() % candidates.size()];
        out.push_back({ideal, s, random_ci(rng, ideal, 1 + out.size() % 3)});
    }
    return out;
}

} // namespace monores::testing
