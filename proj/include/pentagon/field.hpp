#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace pentagon {

enum class FieldKind { Rationals, PrimeField };

/// The ground field: either Q or F_p for a prime p < 2^61.
class Field {
public:
    static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

    /// Q
    Field() = default;

    static Field rationals() { return Field{}; }
    /// Throws BadField unless p is a prime below 2^61.
    static Field prime(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::Rationals; }
    /// 0 for Q.
    std::uint64_t characteristic() const { return p_; }

    /// "Q" or "Fp:<p>", the same spelling the CLI accepts.
    std::string to_string() const;
    /// Inverse of to_string; throws BadField.
    static Field parse(const std::string& tag);

    friend bool operator==(const Field&, const Field&) = default;

private:
    FieldKind kind_ = FieldKind::Rationals;
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator, residues in [0, p).
class Scalar {
public:
    /// Zero of Q.
    Scalar() : Scalar(Field{}) {}
    explicit Scalar(Field f);
    Scalar(Field f, long long v);
    Scalar(Field f, const mpq_class& q);

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    /// Accepts "n", "-n", "n/d" with d > 0. Throws ParseError on junk or d = 0,
    /// NotInvertible when p divides d.
    static Scalar parse(Field f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    /// this += a * b without a temporary.
    void add_mul(const Scalar& a, const Scalar& b);

    Scalar operator-() const;
    /// Throws NotInvertible on zero.
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical text: "3", "-1/2" over Q; the residue over F_p.
    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;

    Field field_;
    std::variant<mpq_class, std::uint64_t> v_;
};

}  // namespace pentagon
