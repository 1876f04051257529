// Exact scalar types: arbitrary-precision rationals, prime fields GF(p) and
// quadratic extensions GF(p^2) = GF(p)[x]/(x^2 - r).
//
// Prime-field and extension elements store only their residues. The modulus
// (and the nonresidue r) live in a per-thread context installed by FieldScope,
// in the same spirit as NTL's ZZ_pPush. Every computation over GF(p) or
// GF(p^2) must run inside a FieldScope for that field.
#ifndef LIECOMP_FIELD_HPP
#define LIECOMP_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include <Eigen/Core>

namespace liecomp {

bool is_prime(std::uint64_t n);

/// Smallest positive integer that is not a square modulo the odd prime `p`.
/// Throws std::invalid_argument for p = 2 or composite p.
std::uint32_t quadratic_nonresidue(std::uint32_t p);

struct FieldSpec {
    std::uint32_t characteristic = 0;  // 0 or a prime
    int degree = 1;                    // 1 or 2
    std::uint32_t nonresidue = 0;      // r with x^2 = r; degree 2 only

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec quadratic(std::uint32_t p);

    bool is_finite() const { return characteristic != 0; }
    /// Number of elements; 0 for the rationals.
    std::uint64_t order() const;
    /// "Q", "GF(5)", "GF(3^2)".
    std::string name() const;
    /// Token used by the matrix text format and the CLI: "Q", "5", "3^2".
    std::string token() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Parses "Q", a prime "p", or "p^2". Throws std::invalid_argument.
FieldSpec parse_field(std::string_view text);

namespace detail {
struct FieldContext {
    std::uint32_t p = 0;
    std::uint32_t r = 0;
};
inline thread_local FieldContext current_field_context;
inline FieldContext& field_context() { return current_field_context; }
[[noreturn]] void throw_no_field();
}  // namespace detail

/// Installs the modulus for GF(p)/GF(p^2) arithmetic on this thread for the
/// lifetime of the object. A no-op for the rationals.
class FieldScope {
public:
    explicit FieldScope(const FieldSpec& spec);
    ~FieldScope();
    FieldScope(const FieldScope&) = delete;
    FieldScope& operator=(const FieldScope&) = delete;

private:
    detail::FieldContext saved_;
};

// ---------------------------------------------------------------------------

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT: implicit, Eigen builds Scalar(0)
    Rational(long num, long den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    const mpq_class& value() const { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }

private:
    mpq_class q_;
};

class Zp {
public:
    Zp() = default;
    Zp(long v) {  // NOLINT: implicit, reduced modulo the active prime
        if (v == 0 || v == 1) {
            v_ = static_cast<std::uint32_t>(v);
            return;
        }
        const long p = modulus();
        long r = v % p;
        v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    static Zp from_residue(std::uint32_t v) { Zp z; z.v_ = v; return z; }
    std::uint32_t residue() const { return v_; }

    Zp& operator+=(Zp o) {
        const std::uint32_t p = modulus();
        std::uint32_t s = v_ + o.v_;
        v_ = s >= p ? s - p : s;
        return *this;
    }
    Zp& operator-=(Zp o) {
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus() - o.v_;
        return *this;
    }
    Zp& operator*=(Zp o) {
        v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % modulus());
        return *this;
    }
    Zp& operator/=(Zp o);

    friend Zp operator+(Zp a, Zp b) { return a += b; }
    friend Zp operator-(Zp a, Zp b) { return a -= b; }
    friend Zp operator*(Zp a, Zp b) { return a *= b; }
    friend Zp operator/(Zp a, Zp b) { return a /= b; }
    friend Zp operator-(Zp a) { return a.v_ == 0 ? a : from_residue(modulus() - a.v_); }
    friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
    friend bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }

    static std::uint32_t modulus() {
        const std::uint32_t p = detail::field_context().p;
        if (p == 0) detail::throw_no_field();
        return p;
    }

private:
    std::uint32_t v_ = 0;
};

/// a + b x with x^2 = r.
class Fp2 {
public:
    Fp2() = default;
    Fp2(long v);  // NOLINT: implicit, embeds the prime field

    static Fp2 from_residues(std::uint32_t a, std::uint32_t b) { Fp2 z; z.a_ = a; z.b_ = b; return z; }
    std::uint32_t re() const { return a_; }
    std::uint32_t im() const { return b_; }

    Fp2& operator+=(const Fp2& o);
    Fp2& operator-=(const Fp2& o);
    Fp2& operator*=(const Fp2& o);
    Fp2& operator/=(const Fp2& o);

    friend Fp2 operator+(Fp2 a, const Fp2& b) { return a += b; }
    friend Fp2 operator-(Fp2 a, const Fp2& b) { return a -= b; }
    friend Fp2 operator*(Fp2 a, const Fp2& b) { return a *= b; }
    friend Fp2 operator/(Fp2 a, const Fp2& b) { return a /= b; }
    friend Fp2 operator-(const Fp2& a) { return Fp2(0) - a; }
    friend bool operator==(const Fp2& a, const Fp2& b) { return a.a_ == b.a_ && a.b_ == b.b_; }
    friend bool operator!=(const Fp2& a, const Fp2& b) { return !(a == b); }

private:
    std::uint32_t a_ = 0;
    std::uint32_t b_ = 0;
};

bool is_zero(const Rational& x);
bool is_zero(Zp x);
bool is_zero(const Fp2& x);

/// Multiplicative inverse; throws std::domain_error on zero.
Rational inverse(const Rational& x);
Zp inverse(Zp x);
Fp2 inverse(const Fp2& x);

std::string to_string(const Rational& x);
std::string to_string(Zp x);
std::string to_string(const Fp2& x);

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, Zp x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const Fp2& x) { return os << to_string(x); }

/// Per-type field facts. `current()` reports the field the type is bound to
/// on this thread.
template <class S>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool finite = false;
    static FieldSpec current() { return FieldSpec::rationals(); }
    static Rational parse(std::string_view token);
    static std::vector<Rational> elements() = delete;
};

template <>
struct FieldTraits<Zp> {
    static constexpr bool finite = true;
    static FieldSpec current();
    static Zp parse(std::string_view token);
    static std::vector<Zp> elements();
};

template <>
struct FieldTraits<Fp2> {
    static constexpr bool finite = true;
    static FieldSpec current();
    static Fp2 parse(std::string_view token);
    static std::vector<Fp2> elements();
};

template <class S>
concept ExactScalar = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { inverse(a) } -> std::convertible_to<S>;
    FieldTraits<S>::current();
};

/// True when x has a square root in its field.
bool is_square(const Rational& x);
bool is_square(Zp x);
bool is_square(const Fp2& x);

/// A square root when one exists in the field.
std::optional<Rational> square_root(const Rational& x);
std::optional<Zp> square_root(Zp x);
std::optional<Fp2> square_root(const Fp2& x);

/// Image of a rational under Z_(p) -> GF(p); nullopt when p divides the
/// denominator. Requires an active GF(p) scope.
std::optional<Zp> reduce_mod_p(const Rational& x);

/// Runs `fn(tag)` with `tag` a value of type std::type_identity<S> for the
/// scalar type implementing `spec`, inside a FieldScope for `spec`.
template <class Fn>
decltype(auto) dispatch_field(const FieldSpec& spec, Fn&& fn) {
    FieldScope scope(spec);
    if (spec.characteristic == 0) return fn(std::type_identity<Rational>{});
    if (spec.degree == 1) return fn(std::type_identity<Zp>{});
    return fn(std::type_identity<Fp2>{});
}

}  // namespace liecomp

namespace Eigen {

template <>
struct NumTraits<liecomp::Rational> : GenericNumTraits<liecomp::Rational> {
    using Real = liecomp::Rational;
    using NonInteger = liecomp::Rational;
    using Literal = liecomp::Rational;
    using Nested = liecomp::Rational;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 8, MulCost = 16 };
    static constexpr int digits10() { return 0; }
};

template <>
struct NumTraits<liecomp::Zp> : GenericNumTraits<liecomp::Zp> {
    using Real = liecomp::Zp;
    using NonInteger = liecomp::Zp;
    using Literal = liecomp::Zp;
    using Nested = liecomp::Zp;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 1, MulCost = 2 };
    static constexpr int digits10() { return 0; }
};

template <>
struct NumTraits<liecomp::Fp2> : GenericNumTraits<liecomp::Fp2> {
    using Real = liecomp::Fp2;
    using NonInteger = liecomp::Fp2;
    using Literal = liecomp::Fp2;
    using Nested = liecomp::Fp2;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 2, MulCost = 6 };
    static constexpr int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // LIECOMP_FIELD_HPP
