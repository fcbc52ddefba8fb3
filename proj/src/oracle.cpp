#include "rmcoset/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rmcoset/rm_code.hpp"

namespace rmcoset::oracle {

namespace {

using Bits = std::vector<std::uint64_t>;

std::uint64_t cube_weight(const Exponent& a, int q) {
    std::uint64_t w = 0;
    for (std::size_t i = a.size(); i-- > 0;) w = w * q + a[i];
    return w;
}

bool test_bit(const Bits& b, std::uint64_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }

std::uint64_t popcount(const Bits& b) {
    std::uint64_t c = 0;
    for (auto w : b) c += std::popcount(w);
    return c;
}

void budget_fail(std::uint64_t budget) {
    fail(Errc::BudgetExceeded, "search exceeded the budget of " + std::to_string(budget) + " nodes");
}

class ShadowSearch {
public:
    ShadowSearch(const std::vector<Exponent>& cand, int q, int s, std::uint64_t m, std::uint64_t budget)
        : cand_(cand), m_(m), budget_(budget) {
        const std::uint64_t n = checked_cube_size(q, s);
        words_ = static_cast<std::size_t>((n + 63) / 64);
        const auto cube = cube_members(q, s);
        for (const auto& a : cand_) {
            Bits sh(words_, 0);
            for (const auto& b : cube)
                if (leq_poset(a, b)) {
                    const std::uint64_t w = cube_weight(b, q);
                    sh[w >> 6] |= std::uint64_t{1} << (w & 63);
                }
            shadow_.push_back(std::move(sh));
            pos_.push_back(cube_weight(a, q));
        }
        stack_.assign(m_ + 1, Bits(words_, 0));
    }

    ShadowResult run() {
        // incumbent: the anti-lex prefix
        Bits u(words_, 0);
        for (std::uint64_t i = 0; i < m_; ++i) merge(u, shadow_[i]);
        best_ = popcount(u);
        best_set_.clear();
        for (std::uint64_t i = 0; i < m_; ++i) best_set_.push_back(i);
        chosen_.clear();
        dfs(0, 0);
        ShadowResult res;
        res.value = best_;
        for (auto i : best_set_) res.witness.push_back(cand_[i]);
        res.nodes = nodes_;
        return res;
    }

private:
    void merge(Bits& dst, const Bits& src) const {
        for (std::size_t k = 0; k < words_; ++k) dst[k] |= src[k];
    }

    void dfs(std::size_t i, std::uint64_t depth) {
        if (++nodes_ > budget_) budget_fail(budget_);
        const Bits& u = stack_[depth];
        const std::uint64_t size = popcount(u);
        if (depth == m_) {
            if (size < best_) {
                best_ = size;
                best_set_ = chosen_;
            }
            return;
        }
        const std::uint64_t need = m_ - depth;
        if (cand_.size() - i < need) return;
        std::uint64_t covered = 0;
        for (std::size_t j = i; j < cand_.size(); ++j) covered += test_bit(u, pos_[j]);
        const std::uint64_t lb = size + (need > covered ? need - covered : 0);
        if (lb >= best_) return;

        stack_[depth + 1] = u;
        merge(stack_[depth + 1], shadow_[i]);
        chosen_.push_back(i);
        dfs(i + 1, depth + 1);
        chosen_.pop_back();
        dfs(i + 1, depth);
    }

    const std::vector<Exponent>& cand_;
    std::uint64_t m_;
    std::uint64_t budget_;
    std::size_t words_ = 0;
    std::vector<Bits> shadow_;
    std::vector<std::uint64_t> pos_;
    std::vector<Bits> stack_;
    std::vector<std::size_t> chosen_, best_set_;
    std::uint64_t best_ = 0;
    std::uint64_t nodes_ = 0;
};

std::vector<gf::Value> univariate_falling(const gf::Field& f, int a) {
    // coefficients of ∏_{j<a} (X − γ_j), ascending
    std::vector<gf::Value> c{1};
    for (int j = 0; j < a; ++j) {
        std::vector<gf::Value> next(c.size() + 1, 0);
        const gf::Value g = static_cast<gf::Value>(j);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] = f.add(next[k + 1], c[k]);
            next[k] = f.sub(next[k], f.mul(g, c[k]));
        }
        c = std::move(next);
    }
    return c;
}

EvaluatedSubspace evaluate_all(std::vector<Polynomial> gens, const gf::FieldPtr& field, int s) {
    EvaluationSpace space(field, s);
    EvaluatedSubspace out;
    out.evaluations = Matrix(gens.size(), space.n());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto word = space.evaluate_poly(gens[i]);
        for (std::size_t k = 0; k < word.size(); ++k) out.evaluations.at(i, k) = word[k];
    }
    out.generators = std::move(gens);
    return out;
}

struct CodeSetup {
    gf::FieldPtr field;
    std::vector<std::vector<gf::Value>> g1, g2;  // evaluation rows of W(0,u1), W(0,u2)
    std::size_t n = 0;
};

CodeSetup setup(const CodePair& pair) {
    pair.validate();
    CodeSetup cs;
    cs.field = gf::Field::of_size(static_cast<std::uint32_t>(pair.q));
    EvaluationSpace space(cs.field, pair.s);
    cs.n = space.n();
    for (const auto& a : monomial_basis(pair.q, pair.s, 0, pair.u1)) {
        std::vector<gf::Value> row(cs.n);
        for (std::size_t k = 0; k < cs.n; ++k) row[k] = space.monomial_at(a, k);
        if (degree(a) <= pair.u2) cs.g2.push_back(row);
        cs.g1.push_back(std::move(row));
    }
    return cs;
}

std::size_t rank_on(const std::vector<std::vector<gf::Value>>& rows, const std::vector<std::size_t>& cols,
                    const gf::Field& f) {
    if (rows.empty() || cols.empty()) return 0;
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < cols.size(); ++k) m.at(i, k) = rows[i][cols[k]];
    return rank(std::move(m), f);
}

std::vector<std::size_t> mask_to_set(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; mask; ++k, mask >>= 1)
        if (mask & 1) out.push_back(k);
    return out;
}

void require_small(const CodeSetup& cs, std::uint64_t budget) {
    if (cs.n > 62) fail(Errc::InvalidParameters, "exhaustive subset search needs n <= 62");
    if ((std::uint64_t{1} << cs.n) > budget) budget_fail(budget);
}

}  // namespace

ShadowResult brute_min_shadow(const Window& window, std::uint64_t m, std::uint64_t budget) {
    const auto cand = window_members(window);
    if (m < 1 || m > cand.size())
        fail(Errc::RankOutOfRange, "m = " + std::to_string(m) + " outside 1.." + std::to_string(cand.size()));
    if (checked_cube_size(window.q, window.s) > kMaxMaterialized)
        fail(Errc::WindowTooLarge, "cube too large for the shadow oracle");
    ShadowSearch search(cand, window.q, window.s, m, budget);
    return search.run();
}

std::size_t EvaluatedSubspace::support_size() const {
    std::size_t count = 0;
    for (std::size_t k = 0; k < evaluations.cols; ++k) {
        for (std::size_t i = 0; i < evaluations.rows; ++i)
            if (evaluations.at(i, k) != 0) {
                ++count;
                break;
            }
    }
    return count;
}

EvaluatedSubspace extremal_subspace(const std::vector<Exponent>& A, const gf::FieldPtr& field, int s) {
    const int q = static_cast<int>(field->q());
    std::vector<Polynomial> gens;
    for (const auto& a : A) {
        if (static_cast<int>(a.size()) != s || !in_cube(a, q))
            fail(Errc::InvalidParameters, "exponent vector outside Q^s_q");
        std::vector<std::vector<gf::Value>> factors;
        for (int t = 0; t < s; ++t) factors.push_back(univariate_falling(*field, a[t]));
        Polynomial poly;
        Exponent e(s, 0);
        auto expand = [&](auto&& self, int t, gf::Value coeff) -> void {
            if (coeff == 0) return;
            if (t == s) {
                poly.emplace_back(e, coeff);
                return;
            }
            for (int k = 0; k <= a[t]; ++k) {
                e[t] = k;
                self(self, t + 1, field->mul(coeff, factors[t][k]));
            }
            e[t] = 0;
        };
        expand(expand, 0, 1);
        gens.push_back(std::move(poly));
    }
    return evaluate_all(std::move(gens), field, s);
}

EvaluatedSubspace random_subspace(const std::vector<Exponent>& A, const gf::FieldPtr& field, int s,
                                  RandomSource& rng) {
    const int q = static_cast<int>(field->q());
    const auto cube = cube_members(q, s);
    std::vector<Polynomial> gens;
    for (const auto& a : A) {
        Polynomial poly{{a, 1}};
        for (const auto& b : cube) {
            if (cmp_lex(b, a) >= 0) continue;
            const auto c = static_cast<gf::Value>(rng.below(field->q()));
            if (c != 0) poly.emplace_back(b, c);
        }
        gens.push_back(std::move(poly));
    }
    return evaluate_all(std::move(gens), field, s);
}

std::uint64_t brute_min_support(const CodePair& pair, std::uint64_t m, std::uint64_t budget) {
    const std::uint64_t ell = pair.ell();
    if (m < 1 || m > ell) fail(Errc::RankOutOfRange, "m outside 1.." + std::to_string(ell));
    const gf::FieldPtr field = gf::Field::of_size(static_cast<std::uint32_t>(pair.q));
    const gf::Field& f = *field;
    EvaluationSpace space(field, pair.s);
    const std::size_t n = space.n();
    if (n > 64) fail(Errc::InvalidParameters, "support oracle needs n <= 64");

    // graded lex; pivots of degree > u2 are exactly the subspaces meeting C_2 trivially
    auto mons = monomial_basis(pair.q, pair.s, 0, pair.u1);
    std::sort(mons.begin(), mons.end(), [](const Exponent& x, const Exponent& y) {
        const int dx = degree(x), dy = degree(y);
        if (dx != dy) return dx < dy;
        return cmp_lex(x, y) < 0;
    });
    const std::size_t K = mons.size();
    std::vector<std::vector<gf::Value>> rows(K, std::vector<gf::Value>(n));
    for (std::size_t j = 0; j < K; ++j)
        for (std::size_t k = 0; k < n; ++k) rows[j][k] = space.monomial_at(mons[j], k);
    std::vector<std::size_t> pivot_ok;
    for (std::size_t j = 0; j < K; ++j)
        if (degree(mons[j]) > pair.u2) pivot_ok.push_back(j);

    const gf::Value q = f.q();
    std::uint64_t best = n + 1;
    std::uint64_t nodes = 0;
    std::vector<bool> is_pivot(K, false);
    // one scratch stack per row, so deeper rows leave the caller's partial sums intact
    std::vector<std::vector<std::vector<gf::Value>>> buf(
        m, std::vector<std::vector<gf::Value>>(K + 1, std::vector<gf::Value>(n)));

    auto support_of = [&](const std::vector<gf::Value>& w) {
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (w[k]) mask |= std::uint64_t{1} << k;
        return mask;
    };

    // fill row coefficients on the free slots below `pivot`, then descend to the next row
    auto next_row = [&](auto&& self_row, std::uint64_t row, std::size_t after, std::uint64_t mask) -> void {
        if (row == m) {
            best = std::min<std::uint64_t>(best, std::popcount(mask));
            return;
        }
        if (static_cast<std::uint64_t>(std::popcount(mask)) >= best) return;
        for (std::size_t pi = after; pi < pivot_ok.size(); ++pi) {
            if (pivot_ok.size() - pi < m - row) break;
            const std::size_t p = pivot_ok[pi];
            std::vector<std::size_t> free;
            for (std::size_t j = 0; j < p; ++j)
                if (!is_pivot[j]) free.push_back(j);
            is_pivot[p] = true;
            auto& stack = buf[row];
            stack[0] = rows[p];
            auto slot = [&](auto&& self_slot, std::size_t k) -> void {
                if (k == free.size()) {
                    if (++nodes > budget) budget_fail(budget);
                    self_row(self_row, row + 1, pi + 1, mask | support_of(stack[k]));
                    return;
                }
                const auto& r = rows[free[k]];
                for (gf::Value c = 0; c < q; ++c) {
                    auto& dst = stack[k + 1];
                    const auto& src = stack[k];
                    if (c == 0) {
                        dst = src;
                    } else {
                        for (std::size_t x = 0; x < n; ++x) dst[x] = f.add(src[x], f.mul(c, r[x]));
                    }
                    self_slot(self_slot, k + 1);
                }
            };
            slot(slot, 0);
            is_pivot[p] = false;
        }
    };
    next_row(next_row, 0, 0, 0);
    return best;
}

std::uint64_t brute_min_shortened(const CodePair& pair, std::uint64_t m, std::uint64_t budget) {
    const std::uint64_t ell = pair.ell();
    if (m < 1 || m > ell) fail(Errc::RankOutOfRange, "m outside 1.." + std::to_string(ell));
    const CodeSetup cs = setup(pair);
    require_small(cs, budget);
    const std::uint64_t full = (std::uint64_t{1} << cs.n) - 1;
    std::uint64_t best = cs.n;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        const std::uint64_t size = std::popcount(mask);
        if (size >= best) continue;
        const auto outside = mask_to_set(full & ~mask);
        const std::size_t d1 = cs.g1.size() - rank_on(cs.g1, outside, *cs.field);
        const std::size_t d2 = cs.g2.size() - rank_on(cs.g2, outside, *cs.field);
        if (d1 - d2 >= m) best = size;
    }
    return best;
}

std::size_t leakage_dim(const PositionSet& J, const CodePair& pair) {
    const CodeSetup cs = setup(pair);
    for (auto j : J)
        if (j >= cs.n) fail(Errc::InvalidParameters, "position index out of range");
    return rank_on(cs.g1, J, *cs.field) - rank_on(cs.g2, J, *cs.field);
}

std::size_t shortened_dim_difference(const PositionSet& J, const CodePair& pair) {
    const CodeSetup cs = setup(pair);
    std::vector<bool> in(cs.n, false);
    for (auto j : J) {
        if (j >= cs.n) fail(Errc::InvalidParameters, "position index out of range");
        in[j] = true;
    }
    std::vector<std::size_t> outside;
    for (std::size_t k = 0; k < cs.n; ++k)
        if (!in[k]) outside.push_back(k);
    const std::size_t d1 = cs.g1.size() - rank_on(cs.g1, outside, *cs.field);
    const std::size_t d2 = cs.g2.size() - rank_on(cs.g2, outside, *cs.field);
    return d1 - d2;
}

Profile brute_profile(const CodePair& pair, std::uint64_t budget) {
    const std::uint64_t ell = pair.ell();
    const CodeSetup cs = setup(pair);
    require_small(cs, budget);
    const std::uint64_t n = cs.n;
    std::vector<std::uint64_t> min_size(ell + 1, n + 1);
    std::vector<std::int64_t> max_below(ell + 1, -1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto J = mask_to_set(mask);
        const std::size_t leak = rank_on(cs.g1, J, *cs.field) - rank_on(cs.g2, J, *cs.field);
        const std::uint64_t size = J.size();
        for (std::uint64_t k = 1; k <= ell; ++k) {
            if (leak >= k)
                min_size[k] = std::min(min_size[k], size);
            else
                max_below[k] = std::max<std::int64_t>(max_below[k], static_cast<std::int64_t>(size));
        }
    }
    Profile p;
    for (std::uint64_t k = 1; k <= ell; ++k) {
        p.t.push_back(min_size[k] - 1);
        p.r.push_back(static_cast<std::uint64_t>(max_below[k] + 1));
    }
    return p;
}

}  // namespace rmcoset::oracle
