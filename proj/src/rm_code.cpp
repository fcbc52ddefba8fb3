#include "rmcoset/rm_code.hpp"

#include "rmcoset/rghw.hpp"

namespace rmcoset {

EvaluationSpace::EvaluationSpace(gf::FieldPtr field, int s) : field_(std::move(field)), s_(s) {
    if (!field_) fail(Errc::InvalidParameters, "null field");
    const std::uint64_t n = checked_cube_size(q(), s);
    if (n > kMaxMaterialized) fail(Errc::WindowTooLarge, "q^s exceeds 2^22 evaluation points");
    n_ = static_cast<std::size_t>(n);
    const int qq = q();
    pow_.assign(qq, std::vector<gf::Value>(qq, 0));
    for (int x = 0; x < qq; ++x) {
        gf::Value v = 1;
        for (int e = 0; e < qq; ++e) {
            pow_[x][e] = v;
            v = field_->mul(v, static_cast<gf::Value>(x));
        }
    }
}

std::vector<gf::Value> EvaluationSpace::point(std::size_t k) const {
    std::vector<gf::Value> x(s_);
    for (int i = s_; i-- > 0;) {
        x[i] = static_cast<gf::Value>(k % q());
        k /= q();
    }
    return x;
}

std::size_t EvaluationSpace::index_of(const std::vector<gf::Value>& x) const {
    std::size_t k = 0;
    for (int i = 0; i < s_; ++i) k = k * q() + x[i];
    return k;
}

gf::Value EvaluationSpace::monomial_at(const Exponent& a, std::size_t k) const {
    gf::Value v = 1;
    for (int i = s_; i-- > 0;) {
        v = field_->mul(v, pow_[k % q()][a[i]]);
        k /= q();
    }
    return v;
}

Matrix EvaluationSpace::evaluation_matrix(const std::vector<Exponent>& monomials) const {
    Matrix m(monomials.size(), n_);
    for (std::size_t r = 0; r < monomials.size(); ++r)
        for (std::size_t k = 0; k < n_; ++k) m.at(r, k) = monomial_at(monomials[r], k);
    return m;
}

std::vector<gf::Value> EvaluationSpace::evaluate(const std::vector<Exponent>& monomials,
                                                 const std::vector<gf::Value>& coeff) const {
    if (monomials.size() != coeff.size()) fail(Errc::LengthMismatch, "one coefficient per monomial expected");
    std::vector<gf::Value> word(n_, 0);
    for (std::size_t j = 0; j < monomials.size(); ++j) {
        if (coeff[j] == 0) continue;
        for (std::size_t k = 0; k < n_; ++k)
            word[k] = field_->add(word[k], field_->mul(coeff[j], monomial_at(monomials[j], k)));
    }
    return word;
}

std::vector<gf::Value> EvaluationSpace::evaluate_poly(const std::vector<std::pair<Exponent, gf::Value>>& poly) const {
    std::vector<Exponent> mons;
    std::vector<gf::Value> coeff;
    for (const auto& [a, c] : poly) {
        mons.push_back(a);
        coeff.push_back(c);
    }
    return evaluate(mons, coeff);
}

bool EvaluationSpace::in_rm(const std::vector<gf::Value>& word, int u) const {
    if (word.size() != n_) fail(Errc::LengthMismatch, "word length differs from n");
    const int du = dual_order(u, s_, q());
    if (du < 0) return true;
    for (const auto& b : monomial_basis(q(), s_, 0, du)) {
        gf::Value acc = 0;
        for (std::size_t k = 0; k < n_; ++k) acc = field_->add(acc, field_->mul(word[k], monomial_at(b, k)));
        if (acc != 0) return false;
    }
    return true;
}

std::vector<Exponent> monomial_basis(int q, int s, int lo, int hi) {
    lo = std::max(lo, 0);
    hi = std::min(hi, s * (q - 1));
    if (hi < lo) return {};
    return window_members(Window{q, s, lo, hi, std::nullopt});
}

}  // namespace rmcoset
