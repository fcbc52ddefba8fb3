#include "rmcoset/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace rmcoset {

const char* to_string(Errc code) {
    switch (code) {
        case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Errc::UnsupportedSize: return "UnsupportedSize";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::MixedFields: return "MixedFields";
        case Errc::MixedShapes: return "MixedShapes";
        case Errc::WindowTooLarge: return "WindowTooLarge";
        case Errc::InvalidWindow: return "InvalidWindow";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::NotInWindow: return "NotInWindow";
        case Errc::RankOutOfRange: return "RankOutOfRange";
        case Errc::InvalidParameters: return "InvalidParameters";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::InconsistentShares: return "InconsistentShares";
        case Errc::DecodingFailure: return "DecodingFailure";
        case Errc::Overflow: return "Overflow";
        case Errc::UnknownTable: return "UnknownTable";
        case Errc::Io: return "Io";
    }
    return "Unknown";
}

namespace gf {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients over Z_p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime, so a^(p−2)
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t k = p - 2; k; k >>= 1) {
        if (k & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > df && !a.empty()) {
        const std::size_t shift = a.size() - 1 - df;
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        for (std::size_t i = 0; i <= df; ++i) {
            const std::uint64_t sub = c * f[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& f, std::uint32_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    for (; k; k >>= 1) {
        if (k & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t e = f.size() - 1;
    if (e <= 1) return e == 1;
    Poly xpk{0, 1};
    for (std::size_t k = 1; k <= e / 2; ++k) {
        xpk = poly_powmod(xpk, p, f, p);
        Poly g = xpk;
        g.resize(std::max<std::size_t>(g.size(), 2), 0);
        g[1] = (g[1] + p - 1) % p;
        trim(g);
        if (g.empty()) return false;
        if (poly_gcd(g, f, p).size() > 1) return false;
    }
    return true;
}

struct Digits {
    std::uint32_t p, e;

    Value add(Value a, Value b) const {
        if (p == 2) return a ^ b;
        Value r = 0, scale = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            const Value d = (a % p + b % p) % p;
            r += d * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return r;
    }
    Poly decode(Value v) const {
        Poly d(e, 0);
        for (std::uint32_t i = 0; i < e; ++i) {
            d[i] = v % p;
            v /= p;
        }
        trim(d);
        return d;
    }
    Value encode(const Poly& d) const {
        Value r = 0;
        for (std::size_t i = d.size(); i-- > 0;) r = r * p + d[i];
        return r;
    }
};

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
    std::uint32_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Powers of x modulo the monic f, or empty if x is not primitive.
std::vector<Value> powers_of_x(const Poly& f, std::uint32_t p) {
    const std::uint32_t e = static_cast<std::uint32_t>(f.size() - 1);
    const std::uint32_t q = ipow(p, e);
    const Digits dg{p, e};
    const std::uint32_t top_scale = q / p;
    // red[c] encodes −c·(f − x^e)
    std::vector<Value> red(p, 0);
    for (std::uint32_t c = 1; c < p; ++c) {
        Poly r(e, 0);
        for (std::uint32_t i = 0; i < e; ++i) r[i] = static_cast<std::uint32_t>((p - (c * f[i]) % p) % p);
        trim(r);
        red[c] = dg.encode(r);
    }
    std::vector<Value> pw;
    pw.reserve(q - 1);
    Value v = 1;
    for (std::uint32_t k = 0; k < q - 1; ++k) {
        if (k > 0 && v == 1) return {};
        pw.push_back(v);
        const std::uint32_t top = v / top_scale;
        v = (v % top_scale) * p;
        if (top) v = dg.add(v, red[top]);
    }
    if (v != 1) return {};
    return pw;
}

std::vector<std::uint32_t> divisors_below(std::uint32_t e) {
    std::vector<std::uint32_t> d;
    for (std::uint32_t k = 1; k < e; ++k)
        if (e % k == 0) d.push_back(k);
    return d;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, Poly>& conway_cache() {
    static std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> c;
    return c;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr>& field_cache() {
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> c;
    return c;
}

void check_size(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) fail(Errc::NonPrimeCharacteristic, "p = " + std::to_string(p) + " is not prime");
    if (e < 1) fail(Errc::InvalidParameters, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldSize) fail(Errc::UnsupportedSize, "p^e exceeds 2^16");
    }
}

Poly conway_locked(std::uint32_t p, std::uint32_t e);

Poly conway_search(std::uint32_t p, std::uint32_t e) {
    const std::uint32_t q = ipow(p, e);
    const Digits dg{p, e};
    std::vector<std::pair<std::uint32_t, Poly>> subfields;
    for (std::uint32_t d : divisors_below(e)) subfields.emplace_back(d, conway_locked(p, d));

    // Conway order: x^e − a_{e−1}x^{e−1} + a_{e−2}x^{e−2} − …, with (a_{e−1}, …, a_0)
    // increasing lexicographically.
    std::vector<std::uint32_t> a(e, 0);
    const std::uint64_t total = q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::uint32_t i = 0; i < e; ++i) {
            a[i] = static_cast<std::uint32_t>(rest % p);  // a[0] is a_0
            rest /= p;
        }
        if (a[0] == 0) continue;
        Poly f(e + 1, 0);
        f[e] = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            const bool negate = ((e - i) & 1u) != 0;
            f[i] = negate ? (p - a[i]) % p : a[i];
        }
        const std::vector<Value> pw = powers_of_x(f, p);
        if (pw.empty()) continue;
        std::vector<std::uint32_t> lg(q, 0);
        for (std::uint32_t k = 0; k < q - 1; ++k) lg[pw[k]] = k;
        auto mul = [&](Value x, Value y) -> Value {
            if (x == 0 || y == 0) return 0;
            return pw[(lg[x] + lg[y]) % (q - 1)];
        };
        bool compatible = true;
        for (const auto& [d, cd] : subfields) {
            const std::uint32_t qd = ipow(p, d);
            const Value beta = pw[((q - 1) / (qd - 1)) % (q - 1)];
            Value acc = 0, bp = 1;
            for (std::size_t k = 0; k < cd.size(); ++k) {
                acc = dg.add(acc, mul(cd[k] % p, bp));
                bp = mul(bp, beta);
            }
            if (acc != 0) {
                compatible = false;
                break;
            }
        }
        if (compatible) return f;
    }
    fail(Errc::InvalidParameters, "no Conway polynomial found");
}

Poly conway_locked(std::uint32_t p, std::uint32_t e) {
    auto& cache = conway_cache();
    if (auto it = cache.find({p, e}); it != cache.end()) return it->second;
    Poly f = conway_search(p, e);
    cache.emplace(std::make_pair(p, e), f);
    return f;
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> factor_prime_power(std::uint32_t q) noexcept {
    if (q < 2) return std::nullopt;
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, e);
}

std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t e) {
    check_size(p, e);
    std::lock_guard lock(cache_mutex());
    return conway_locked(p, e);
}

Value Field::add_digits(Value a, Value b) const noexcept {
    Value r = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

void Field::build_tables(Value primitive) {
    const Digits dg{p_, e_};
    neg_.assign(q_, 0);
    for (Value v = 0; v < q_; ++v) {
        Value r = 0, scale = 1, x = v;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += ((p_ - x % p_) % p_) * scale;
            x /= p_;
            scale *= p_;
        }
        neg_[v] = r;
    }
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    // exp_[k] = primitive^k via polynomial multiplication modulo the modulus
    const Poly g = e_ == 1 ? Poly{primitive} : dg.decode(primitive);
    Value v = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
        exp_[k] = exp_[k + q_ - 1] = v;
        log_[v] = k;
        if (e_ == 1) {
            v = static_cast<Value>(static_cast<std::uint64_t>(v) * primitive % p_);
        } else {
            v = dg.encode(poly_mulmod(dg.decode(v), g, modulus_, p_));
        }
    }
    if (p_ != 2 && e_ > 1 && q_ <= 1024) {
        add_.assign(static_cast<std::size_t>(q_) * q_, 0);
        for (Value a = 0; a < q_; ++a)
            for (Value b = 0; b < q_; ++b) add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
    }
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t e) {
    check_size(p, e);
    std::lock_guard lock(cache_mutex());
    auto& cache = field_cache();
    if (auto it = cache.find({p, e}); it != cache.end()) return it->second;

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = ipow(p, e);
    if (e == 1) {
        Value g = 1;
        for (Value c = 1; c < p; ++c) {
            std::uint64_t x = 1;
            std::uint32_t order = 0;
            do {
                x = x * c % p;
                ++order;
            } while (x != 1);
            if (order == p - 1) {
                g = c;
                break;
            }
        }
        f->modulus_ = {(p - g) % p, 1};
        f->build_tables(g);
    } else {
        f->modulus_ = conway_locked(p, e);
        f->build_tables(p);  // the root α = x is primitive for a Conway modulus
    }
    cache.emplace(std::make_pair(p, e), f);
    return f;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    check_size(p, e);
    if (e == 1) return make(p, e);
    if (modulus.size() != e + 1 || modulus.back() != 1)
        fail(Errc::InvalidParameters, "modulus must be monic of degree e (ascending coefficients)");
    for (auto& c : modulus)
        if (c >= p) fail(Errc::InvalidParameters, "modulus coefficient out of range");
    if (!irreducible(modulus, p)) fail(Errc::ReducibleModulus, "modulus is reducible over GF(p)");

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = ipow(p, e);
    f->modulus_ = std::move(modulus);
    // first element of multiplicative order q−1 in canonical order
    const Digits dg{p, e};
    std::vector<std::uint32_t> primes;
    for (std::uint32_t n = f->q_ - 1, d = 2; n > 1; ++d) {
        if (n % d == 0) {
            primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    Value primitive = 0;
    for (Value c = 1; c < f->q_ && primitive == 0; ++c) {
        const Poly cp = dg.decode(c);
        bool ok = true;
        for (std::uint32_t r : primes) {
            const Poly t = poly_powmod(cp, (f->q_ - 1) / r, f->modulus_, p);
            if (t.size() == 1 && t[0] == 1) {
                ok = false;
                break;
            }
        }
        if (ok) primitive = c;
    }
    f->build_tables(primitive);
    return f;
}

FieldPtr Field::of_size(std::uint32_t q, std::optional<std::vector<std::uint32_t>> modulus) {
    const auto pe = factor_prime_power(q);
    if (!pe) fail(Errc::NonPrimeCharacteristic, "q = " + std::to_string(q) + " is not a prime power");
    if (modulus) return make(pe->first, pe->second, std::move(*modulus));
    return make(pe->first, pe->second);
}

Value Field::pow(Value a, std::uint64_t k) const noexcept {
    if (k == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1)];
}

std::vector<Value> Field::elements() const {
    std::vector<Value> v(q_);
    for (Value i = 0; i < q_; ++i) v[i] = i;
    return v;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (e_ > 1) {
        os << " mod ";
        bool first = true;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (modulus_[i] != 1 || i == 0) os << modulus_[i];
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

FieldElement::FieldElement(FieldPtr field, Value value) : field_(std::move(field)), value_(value) {
    if (!field_) fail(Errc::InvalidParameters, "null field");
    if (value_ >= field_->q()) fail(Errc::InvalidParameters, "element value out of range");
}

const Field& FieldElement::same(const FieldElement& o) const {
    if (field_.get() != o.field_.get()) fail(Errc::MixedFields, "operands belong to different fields");
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {field_, same(o).add(value_, o.value_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {field_, same(o).sub(value_, o.value_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {field_, same(o).mul(value_, o.value_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {field_, same(o).div(value_, o.value_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

std::vector<FieldElement> enumerate_elements(const FieldPtr& field) {
    std::vector<FieldElement> out;
    out.reserve(field->q());
    for (Value v = 0; v < field->q(); ++v) out.emplace_back(field, v);
    return out;
}

}  // namespace gf
}  // namespace rmcoset
