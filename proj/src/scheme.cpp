#include "rmcoset/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

namespace rmcoset {

LeakageProfile profile(const CodePair& pair) {
    LeakageProfile p;
    p.pair = pair;
    p.ell = pair.ell();
    const std::uint64_t n = pair.n();
    const CodePair dual = pair.dual();
    const auto m_dual = hierarchy(dual);
    const auto m_pair = hierarchy(pair);
    for (std::uint64_t m = 1; m <= p.ell; ++m) {
        p.t.push_back(m_dual[m - 1] - 1);
        p.r.push_back(n - m_pair[p.ell - m] + 1);
        p.t_ghw.push_back(ghw(dual.u1, pair.s, pair.q, m) - 1);
        p.r_ghw.push_back(n - ghw(pair.u1, pair.s, pair.q, p.ell - m + 1) + 1);
    }
    return p;
}

QueryCounts query_counts(const CodePair& pair) {
    pair.validate();
    return {static_cast<std::uint64_t>(pair.u1) + 1, static_cast<std::uint64_t>(pair.q) - 1, pair.u1 < pair.q - 1};
}

std::string to_string(Decoder d) { return d == Decoder::A ? "A" : "B"; }

Scheme::Scheme(const CodePair& pair, std::optional<std::vector<std::uint32_t>> modulus)
    : pair_((pair.validate(), pair)),
      field_(gf::Field::of_size(static_cast<std::uint32_t>(pair.q), std::move(modulus))),
      space_(field_, pair.s),
      secret_basis_(monomial_basis(pair.q, pair.s, pair.u2 + 1, pair.u1)),
      random_basis_(monomial_basis(pair.q, pair.s, 0, pair.u2)) {
    g_secret_ = space_.evaluation_matrix(secret_basis_);
    g_random_ = space_.evaluation_matrix(random_basis_);
}

Shares Scheme::encode_with(const Secret& secret, const std::vector<gf::Value>& randomness) const {
    if (secret.size() != ell())
        fail(Errc::LengthMismatch, "secret has " + std::to_string(secret.size()) + " entries, expected " +
                                       std::to_string(ell()));
    if (randomness.size() != randomness_dim())
        fail(Errc::LengthMismatch, "randomness has " + std::to_string(randomness.size()) + " entries, expected " +
                                       std::to_string(randomness_dim()));
    const gf::Field& f = *field_;
    for (auto v : secret)
        if (v >= f.q()) fail(Errc::InvalidParameters, "secret entry outside the field");
    Shares word(n(), 0);
    auto accumulate = [&](const Matrix& g, const std::vector<gf::Value>& c) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            for (std::size_t k = 0; k < word.size(); ++k) word[k] = f.add(word[k], f.mul(c[j], g.at(j, k)));
        }
    };
    accumulate(g_secret_, secret);
    accumulate(g_random_, randomness);
    return word;
}

Shares Scheme::encode(const Secret& secret, RandomSource& rng) const {
    std::vector<gf::Value> randomness(randomness_dim());
    for (auto& c : randomness) c = static_cast<gf::Value>(rng.below(field_->q()));
    return encode_with(secret, randomness);
}

bool Scheme::in_c1(const Shares& word) const { return space_.in_rm(word, pair_.u1); }

ReconstructResult Scheme::reconstruct(const PartialShares& shares) const {
    if (shares.size() != n()) fail(Errc::LengthMismatch, "expected " + std::to_string(n()) + " share slots");
    const gf::Field& f = *field_;
    std::vector<std::size_t> J;
    for (std::size_t k = 0; k < shares.size(); ++k)
        if (shares[k]) {
            if (*shares[k] >= f.q()) fail(Errc::InvalidParameters, "share value outside the field");
            J.push_back(k);
        }
    const std::size_t l = ell(), k2 = randomness_dim();
    Matrix A(J.size(), l + k2);
    std::vector<gf::Value> y(J.size());
    for (std::size_t e = 0; e < J.size(); ++e) {
        for (std::size_t j = 0; j < l; ++j) A.at(e, j) = g_secret_.at(j, J[e]);
        for (std::size_t j = 0; j < k2; ++j) A.at(e, l + j) = g_random_.at(j, J[e]);
        y[e] = *shares[J[e]];
    }
    const auto x = solve(A, y, f);
    if (!x) fail(Errc::InconsistentShares, "observed shares match no codeword of C_1");
    const std::size_t rank_all = rank(A, f);
    std::size_t rank_rand = 0;
    if (k2 > 0 && !J.empty()) {
        std::vector<std::size_t> cols(k2);
        for (std::size_t j = 0; j < k2; ++j) cols[j] = l + j;
        rank_rand = rank(A.columns(cols), f);
    }
    const std::size_t leak = rank_all - rank_rand;
    if (leak == l) return Secret(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(l));
    return PartialInfo{leak};
}

LineQuery Scheme::sample_line(std::size_t i, std::size_t count, RandomSource& rng) const {
    const gf::Field& f = *field_;
    if (i >= n()) fail(Errc::InvalidParameters, "position index out of range");
    if (count > f.q() - 1) fail(Errc::InvalidParameters, "a line has only q−1 nonzero parameters");
    LineQuery line;
    const std::size_t code = 1 + static_cast<std::size_t>(rng.below(n() - 1));
    line.direction = space_.point(code);
    const auto p = space_.point(i);
    for (std::size_t k = 1; k <= count; ++k) {
        const auto lambda = static_cast<gf::Value>(k);
        std::vector<gf::Value> x(p.size());
        for (std::size_t t = 0; t < p.size(); ++t) x[t] = f.add(p[t], f.mul(lambda, line.direction[t]));
        line.lambdas.push_back(lambda);
        line.points.push_back(space_.index_of(x));
    }
    return line;
}

gf::Value Scheme::value_at_zero(const LineQuery& line, const std::vector<gf::Value>& y) const {
    const gf::Field& f = *field_;
    gf::Value acc = 0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        gf::Value w = 1;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (j == k) continue;
            w = f.mul(w, f.div(line.lambdas[j], f.sub(line.lambdas[j], line.lambdas[k])));
        }
        acc = f.add(acc, f.mul(y[k], w));
    }
    return acc;
}

gf::Value Scheme::berlekamp_welch_at_zero(const LineQuery& line, const std::vector<gf::Value>& y) const {
    const gf::Field& f = *field_;
    const std::size_t N = y.size();
    const std::size_t k = static_cast<std::size_t>(pair_.u1) + 1;
    const std::size_t e = (N - k) / 2;
    // unknowns: Q_0..Q_{e+k−1}, E_0..E_{e−1}; E monic of degree e
    const std::size_t nq = e + k;
    Matrix A(N, nq + e);
    std::vector<gf::Value> rhs(N);
    for (std::size_t r = 0; r < N; ++r) {
        const gf::Value lam = line.lambdas[r];
        gf::Value pw = 1;
        for (std::size_t j = 0; j < nq; ++j) {
            A.at(r, j) = pw;
            if (j < e) A.at(r, nq + j) = f.neg(f.mul(y[r], pw));
            if (j == e) rhs[r] = f.mul(y[r], pw);
            pw = f.mul(pw, lam);
        }
    }
    const auto sol = solve(A, rhs, f);
    if (!sol) fail(Errc::DecodingFailure, "no error locator fits the line");
    std::vector<gf::Value> Q(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(nq));
    std::vector<gf::Value> E(sol->begin() + static_cast<std::ptrdiff_t>(nq), sol->end());
    E.push_back(1);
    // Q / E by long division
    std::vector<gf::Value> quot(nq >= e ? nq - e : 0, 0);
    std::vector<gf::Value> rem = Q;
    for (std::size_t d = nq; d-- > e;) {
        const gf::Value c = rem[d];
        if (c == 0) continue;
        const std::size_t shift = d - e;
        quot[shift] = c;
        for (std::size_t j = 0; j <= e; ++j) rem[shift + j] = f.sub(rem[shift + j], f.mul(c, E[j]));
    }
    for (std::size_t j = 0; j < e; ++j)
        if (rem[j] != 0) fail(Errc::DecodingFailure, "error locator does not divide");
    std::size_t disagreements = 0;
    for (std::size_t r = 0; r < N; ++r) {
        gf::Value v = 0;
        for (std::size_t j = quot.size(); j-- > 0;) v = f.add(f.mul(v, line.lambdas[r]), quot[j]);
        if (v != y[r]) ++disagreements;
    }
    if (disagreements > e) fail(Errc::DecodingFailure, "too many errors on the line");
    return quot.empty() ? 0 : quot[0];
}

gf::Value Scheme::correct_a(const WordAccess& word, std::size_t i, RandomSource& rng) const {
    if (pair_.u1 >= pair_.q - 1) fail(Errc::PreconditionViolated, "decoder A needs u1 < q−1");
    const LineQuery line = sample_line(i, static_cast<std::size_t>(pair_.u1) + 1, rng);
    std::vector<gf::Value> y;
    for (auto p : line.points) y.push_back(word(p));
    return value_at_zero(line, y);
}

gf::Value Scheme::correct_b(const WordAccess& word, std::size_t i, RandomSource& rng) const {
    if (pair_.u1 > pair_.q - 2) fail(Errc::PreconditionViolated, "decoder B needs u1 <= q−2");
    const LineQuery line = sample_line(i, field_->q() - 1, rng);
    std::vector<gf::Value> y;
    for (auto p : line.points) y.push_back(word(p));
    return berlekamp_welch_at_zero(line, y);
}

gf::Value Scheme::correct(Decoder d, const WordAccess& word, std::size_t i, RandomSource& rng) const {
    return d == Decoder::A ? correct_a(word, i, rng) : correct_b(word, i, rng);
}

gf::Value Scheme::correct(Decoder d, const Shares& word, std::size_t i, RandomSource& rng) const {
    if (word.size() != n()) fail(Errc::LengthMismatch, "word length differs from n");
    return correct(d, WordAccess([&word](std::size_t k) { return word[k]; }), i, rng);
}

namespace {

struct Tally {
    std::uint64_t failures = 0;
    std::uint64_t decoding_failures = 0;
};

Tally run_trials(const Scheme& scheme, const SimulationConfig& cfg, std::uint64_t errors, std::uint64_t begin,
                 std::uint64_t end) {
    const gf::Field& f = *scheme.field();
    const std::size_t n = scheme.n();
    const auto& space = scheme.space();
    std::vector<Exponent> basis = scheme.secret_basis();
    basis.insert(basis.end(), scheme.random_basis().begin(), scheme.random_basis().end());
    std::vector<gf::Value> coeff(basis.size());
    std::unordered_map<std::size_t, std::size_t> swaps;
    std::unordered_map<std::size_t, gf::Value> err;
    Tally tally;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
        Mt64Source cw(derive_seed(cfg.seed, kStreamCodeword, trial));
        for (auto& c : coeff) c = static_cast<gf::Value>(cw.below(f.q()));
        auto codeword = [&](std::size_t k) {
            gf::Value v = 0;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (coeff[j]) v = f.add(v, f.mul(coeff[j], space.monomial_at(basis[j], k)));
            return v;
        };

        // the first `errors` entries of a random permutation, so patterns nest across δ
        Mt64Source pos(derive_seed(cfg.seed, kStreamPositions, trial));
        Mt64Source val(derive_seed(cfg.seed, kStreamValues, trial));
        swaps.clear();
        err.clear();
        for (std::uint64_t k = 0; k < errors; ++k) {
            const std::size_t j = k + static_cast<std::size_t>(pos.below(n - k));
            auto at = [&](std::size_t x) {
                auto it = swaps.find(x);
                return it == swaps.end() ? x : it->second;
            };
            const std::size_t pick = at(j);
            swaps[j] = at(k);
            err[pick] = static_cast<gf::Value>(1 + val.below(f.q() - 1));
        }
        Mt64Source target(derive_seed(cfg.seed, kStreamTarget, trial));
        const std::size_t i = static_cast<std::size_t>(target.below(n));
        const gf::Value truth = codeword(i);
        WordAccess word = [&](std::size_t k) {
            const gf::Value c = codeword(k);
            auto it = err.find(k);
            return it == err.end() ? c : f.add(c, it->second);
        };
        Mt64Source dec(derive_seed(cfg.seed, kStreamDecoder, trial));
        try {
            if (scheme.correct(cfg.decoder, word, i, dec) != truth) ++tally.failures;
        } catch (const Error& e) {
            if (e.code() != Errc::DecodingFailure) throw;
            ++tally.failures;
            ++tally.decoding_failures;
        }
    }
    return tally;
}

}  // namespace

SimulationResult simulate_correction(const CodePair& pair, const SimulationConfig& cfg) {
    pair.validate();
    if (!(cfg.delta >= 0.0 && cfg.delta <= 1.0)) fail(Errc::InvalidParameters, "delta must lie in [0,1]");
    if (cfg.decoder == Decoder::A && pair.u1 >= pair.q - 1)
        fail(Errc::PreconditionViolated, "decoder A needs u1 < q−1");
    if (cfg.decoder == Decoder::B) {
        if (pair.u1 > pair.q - 2) fail(Errc::PreconditionViolated, "decoder B needs u1 <= q−2");
        if (cfg.sigma && !(*cfg.sigma < 1.0 && pair.u1 <= *cfg.sigma * (pair.q - 1) - 1 + 1e-12))
            fail(Errc::PreconditionViolated, "decoder B needs σ < 1 and u1 <= σ(q−1) − 1");
    }
    const Scheme scheme(pair);
    SimulationResult res;
    res.trials = cfg.trials;
    res.errors_per_word = static_cast<std::uint64_t>(std::floor(cfg.delta * static_cast<double>(scheme.n()) + 1e-9));
    const QueryCounts qc = query_counts(pair);
    res.queries = cfg.decoder == Decoder::A ? qc.decoder_a : qc.decoder_b;
    const double sigma = cfg.sigma.value_or(static_cast<double>(pair.u1 + 1) / (pair.q - 1));
    res.bound = cfg.decoder == Decoder::A ? (pair.u1 + 1) * cfg.delta : 2 * cfg.delta / (1 - sigma);

    const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, 256));
    std::vector<Tally> parts(threads);
    if (threads == 1) {
        parts[0] = run_trials(scheme, cfg, res.errors_per_word, 0, cfg.trials);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                try {
                    parts[w] = run_trials(scheme, cfg, res.errors_per_word, cfg.trials * w / threads,
                                          cfg.trials * (w + 1) / threads);
                } catch (...) {
                    errs[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    }
    for (const auto& t : parts) {
        res.failures += t.failures;
        res.decoding_failures += t.decoding_failures;
    }
    res.failure_rate = cfg.trials ? static_cast<double>(res.failures) / static_cast<double>(cfg.trials) : 0.0;

    const LeakageProfile prof = profile(pair);
    res.t1 = prof.t[0];
    res.r1 = prof.r[0];
    res.queries_exceed_t1 = res.queries > res.t1;
    res.queries_below_r1 = res.queries < res.r1;
    if (prof.ell >= 2) {
        res.t2 = prof.t[1];
        res.at_most_one_qbit = res.t2 >= res.queries;
    }
    return res;
}

}  // namespace rmcoset
