#include "liecomp/field.hpp"

#include <charconv>
#include <stdexcept>

namespace liecomp {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * base % mod);
        base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % mod);
        exp >>= 1;
    }
    return result;
}

long parse_long(std::string_view s) {
    while (!s.empty() && s.front() == '+') s.remove_prefix(1);
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    return v;
}

std::uint32_t active_prime() { return Zp::modulus(); }

std::uint32_t active_nonresidue() {
    const auto& ctx = detail::field_context();
    if (ctx.p == 0 || ctx.r == 0) detail::throw_no_field();
    return ctx.r;
}

std::uint32_t addp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
std::uint32_t subp(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }
std::uint32_t mulp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
std::uint32_t invp(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::domain_error("inverse of zero");
    return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t quadratic_nonresidue(std::uint32_t p) {
    if (p == 2) throw std::invalid_argument("GF(2) has no quadratic nonresidue");
    if (!is_prime(p)) throw std::invalid_argument("quadratic_nonresidue: " + std::to_string(p) + " is not prime");
    for (std::uint32_t r = 2; r < p; ++r)
        if (pow_mod(r, (p - 1) / 2, p) == p - 1) return r;
    throw std::logic_error("no nonresidue found");
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw std::invalid_argument("prime too large");
    return FieldSpec{p, 1, 0};
}

FieldSpec FieldSpec::quadratic(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p == 2) throw std::invalid_argument("GF(4) is not supported");
    if (p >= (1u << 15)) throw std::invalid_argument("prime too large for GF(p^2)");
    return FieldSpec{p, 2, quadratic_nonresidue(p)};
}

std::uint64_t FieldSpec::order() const {
    if (characteristic == 0) return 0;
    return degree == 1 ? characteristic : std::uint64_t{characteristic} * characteristic;
}

std::string FieldSpec::name() const {
    if (characteristic == 0) return "Q";
    return "GF(" + token() + ")";
}

std::string FieldSpec::token() const {
    if (characteristic == 0) return "Q";
    return degree == 1 ? std::to_string(characteristic) : std::to_string(characteristic) + "^2";
}

FieldSpec parse_field(std::string_view text) {
    if (text == "Q" || text == "0") return FieldSpec::rationals();
    if (auto caret = text.find('^'); caret != std::string_view::npos) {
        const long p = parse_long(text.substr(0, caret));
        const long k = parse_long(text.substr(caret + 1));
        if (k == 1) return FieldSpec::prime(static_cast<std::uint32_t>(p));
        if (k != 2 || p < 2) throw std::invalid_argument("unsupported field '" + std::string(text) + "'");
        return FieldSpec::quadratic(static_cast<std::uint32_t>(p));
    }
    const long q = parse_long(text);
    if (q < 2 || q >= (1L << 31)) throw std::invalid_argument("unsupported field '" + std::string(text) + "'");
    if (is_prime(static_cast<std::uint64_t>(q))) return FieldSpec::prime(static_cast<std::uint32_t>(q));
    // a prime square such as 9 or 25 names GF(p^2)
    for (long p = 2; p * p <= q; ++p)
        if (p * p == q && is_prime(static_cast<std::uint64_t>(p))) return FieldSpec::quadratic(static_cast<std::uint32_t>(p));
    throw std::invalid_argument("unsupported field '" + std::string(text) + "'");
}

namespace detail {
void throw_no_field() { throw std::logic_error("finite-field arithmetic outside a FieldScope"); }
}  // namespace detail

FieldScope::FieldScope(const FieldSpec& spec) : saved_(detail::field_context()) {
    if (spec.characteristic == 0) return;
    detail::field_context() = {spec.characteristic, spec.degree == 2 ? spec.nonresidue : 0};
}

FieldScope::~FieldScope() { detail::field_context() = saved_; }

// --- Rational --------------------------------------------------------------

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

bool is_zero(const Rational& x) { return sgn(x.value()) == 0; }

Rational inverse(const Rational& x) {
    if (is_zero(x)) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / x.value());
}

std::string to_string(const Rational& x) { return x.value().get_str(); }

Rational FieldTraits<Rational>::parse(std::string_view token) {
    std::string s(token);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + std::string(token) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
    return Rational(q);
}

// --- Zp --------------------------------------------------------------------

Zp& Zp::operator/=(Zp o) {
    v_ = mulp(v_, invp(o.v_, modulus()), modulus());
    return *this;
}

bool is_zero(Zp x) { return x.residue() == 0; }

Zp inverse(Zp x) { return Zp::from_residue(invp(x.residue(), Zp::modulus())); }

std::string to_string(Zp x) { return std::to_string(x.residue()); }

FieldSpec FieldTraits<Zp>::current() { return FieldSpec{active_prime(), 1, 0}; }

Zp FieldTraits<Zp>::parse(std::string_view token) { return Zp(parse_long(token)); }

std::vector<Zp> FieldTraits<Zp>::elements() {
    const std::uint32_t p = active_prime();
    std::vector<Zp> out;
    out.reserve(p);
    for (std::uint32_t v = 0; v < p; ++v) out.push_back(Zp::from_residue(v));
    return out;
}

// --- Fp2 -------------------------------------------------------------------

Fp2::Fp2(long v) {
    const Zp z(v);
    a_ = z.residue();
}

Fp2& Fp2::operator+=(const Fp2& o) {
    const std::uint32_t p = active_prime();
    a_ = addp(a_, o.a_, p);
    b_ = addp(b_, o.b_, p);
    return *this;
}

Fp2& Fp2::operator-=(const Fp2& o) {
    const std::uint32_t p = active_prime();
    a_ = subp(a_, o.a_, p);
    b_ = subp(b_, o.b_, p);
    return *this;
}

Fp2& Fp2::operator*=(const Fp2& o) {
    const std::uint32_t p = active_prime();
    const std::uint32_t r = active_nonresidue();
    const std::uint32_t a = addp(mulp(a_, o.a_, p), mulp(r, mulp(b_, o.b_, p), p), p);
    const std::uint32_t b = addp(mulp(a_, o.b_, p), mulp(b_, o.a_, p), p);
    a_ = a;
    b_ = b;
    return *this;
}

Fp2& Fp2::operator/=(const Fp2& o) { return *this *= inverse(o); }

bool is_zero(const Fp2& x) { return x.re() == 0 && x.im() == 0; }

Fp2 inverse(const Fp2& x) {
    const std::uint32_t p = active_prime();
    const std::uint32_t r = active_nonresidue();
    // (a + bx)^{-1} = (a - bx) / (a^2 - r b^2)
    const std::uint32_t norm = subp(mulp(x.re(), x.re(), p), mulp(r, mulp(x.im(), x.im(), p), p), p);
    const std::uint32_t ninv = invp(norm, p);
    return Fp2::from_residues(mulp(x.re(), ninv, p), mulp(subp(0, x.im(), p), ninv, p));
}

std::string to_string(const Fp2& x) { return std::to_string(x.re()) + "+" + std::to_string(x.im()) + "*x"; }

FieldSpec FieldTraits<Fp2>::current() { return FieldSpec{active_prime(), 2, active_nonresidue()}; }

Fp2 FieldTraits<Fp2>::parse(std::string_view token) {
    const std::string_view t = token;
    // forms: "a", "a+b*x", "a-b*x", "b*x", "x"
    auto parse_coeff = [](std::string_view c) -> long {
        if (c.empty() || c == "+") return 1;
        if (c == "-") return -1;
        return parse_long(c);
    };
    if (t.empty()) throw std::invalid_argument("empty GF(p^2) entry");
    if (t.back() != 'x') return Fp2(parse_long(t));
    std::string_view body = t.substr(0, t.size() - 1);
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);
    // split at the last sign that is not leading
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    long a = 0;
    long b = 0;
    if (split == std::string_view::npos) {
        b = parse_coeff(body);
    } else {
        a = parse_long(body.substr(0, split));
        b = parse_coeff(body.substr(split));
    }
    const Zp za(a), zb(b);
    return Fp2::from_residues(za.residue(), zb.residue());
}

std::vector<Fp2> FieldTraits<Fp2>::elements() {
    const std::uint32_t p = active_prime();
    std::vector<Fp2> out;
    out.reserve(std::size_t{p} * p);
    for (std::uint32_t b = 0; b < p; ++b)
        for (std::uint32_t a = 0; a < p; ++a) out.push_back(Fp2::from_residues(a, b));
    return out;
}

// --- squares ---------------------------------------------------------------

std::optional<Rational> square_root(const Rational& x) {
    const mpq_class& q = x.value();
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

std::optional<Zp> square_root(Zp x) {
    const std::uint32_t p = active_prime();
    if (x.residue() == 0 || p == 2) return x;
    if (pow_mod(x.residue(), (p - 1) / 2, p) != 1) return std::nullopt;
    // Tonelli-Shanks
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(x.residue(), q, p);
    std::uint64_t r = pow_mod(x.residue(), (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return Zp::from_residue(static_cast<std::uint32_t>(r));
}

std::optional<Fp2> square_root(const Fp2& x) {
    for (const Fp2& y : FieldTraits<Fp2>::elements())
        if (y * y == x) return y;
    return std::nullopt;
}

bool is_square(const Rational& x) { return square_root(x).has_value(); }

bool is_square(Zp x) {
    const std::uint32_t p = active_prime();
    if (x.residue() == 0 || p == 2) return true;
    return pow_mod(x.residue(), (p - 1) / 2, p) == 1;
}

bool is_square(const Fp2& x) {
    if (is_zero(x)) return true;
    // Euler's criterion in GF(q): x^((q-1)/2) == 1
    const std::uint64_t p = active_prime();
    std::uint64_t e = (p * p - 1) / 2;
    Fp2 acc(1);
    Fp2 base = x;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc == Fp2(1);
}

std::optional<Zp> reduce_mod_p(const Rational& x) {
    const std::uint32_t p = active_prime();
    const mpz_class& den = x.value().get_den();
    if (mpz_fdiv_ui(den.get_mpz_t(), p) == 0) return std::nullopt;
    const auto n = static_cast<std::uint32_t>(mpz_fdiv_ui(x.value().get_num().get_mpz_t(), p));
    const auto d = static_cast<std::uint32_t>(mpz_fdiv_ui(den.get_mpz_t(), p));
    return Zp::from_residue(mulp(n, invp(d, p), p));
}

}  // namespace liecomp
