#include "pentagon/field.hpp"

#include <charconv>

#include "pentagon/errors.hpp"

namespace pentagon {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % mpz_class(std::to_string(p));
    if (r < 0) r += mpz_class(std::to_string(p));
    return std::stoull(r.get_str());
}

}  // namespace

// Deterministic Miller-Rabin; these bases cover all 64-bit integers.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= kMaxModulus) throw BadField("modulus " + std::to_string(p) + " is not below 2^61");
    if (!is_prime(p)) throw BadField(std::to_string(p) + " is not prime");
    Field f;
    f.kind_ = FieldKind::PrimeField;
    f.p_ = p;
    return f;
}

std::string Field::to_string() const {
    return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& tag) {
    if (tag == "Q") return rationals();
    if (tag.rfind("Fp:", 0) == 0) {
        std::uint64_t p = 0;
        const char* b = tag.data() + 3;
        const char* e = tag.data() + tag.size();
        auto [ptr, ec] = std::from_chars(b, e, p);
        if (ec != std::errc{} || ptr != e || b == e) throw BadField("bad modulus in '" + tag + "'");
        return prime(p);
    }
    throw BadField("unknown field tag '" + tag + "'");
}

Scalar::Scalar(Field f) : field_(f) {
    if (f.is_rational())
        v_ = mpq_class(0);
    else
        v_ = std::uint64_t{0};
}

Scalar::Scalar(Field f, long long v) : field_(f) {
    if (f.is_rational()) {
        v_ = mpq_class(static_cast<long>(v));
    } else {
        const auto p = static_cast<long long>(f.characteristic());
        long long r = v % p;
        if (r < 0) r += p;
        v_ = static_cast<std::uint64_t>(r);
    }
}

Scalar::Scalar(Field f, const mpq_class& q) : field_(f) {
    if (f.is_rational()) {
        mpq_class c(q);
        c.canonicalize();
        v_ = std::move(c);
        return;
    }
    const std::uint64_t p = f.characteristic();
    const std::uint64_t num = reduce(q.get_num(), p);
    const std::uint64_t den = reduce(q.get_den(), p);
    if (den == 0) throw NotInvertible("denominator vanishes modulo " + std::to_string(p));
    v_ = mul_mod(num, pow_mod(den, p - 2, p), p);
}

Scalar Scalar::parse(Field f, const std::string& text) {
    mpq_class q;
    const auto slash = text.find('/');
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](const std::string& s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
    if (slash == std::string::npos) {
        if (!valid_int(text)) throw ParseError("not a scalar: '" + text + "'");
        q = mpq_class(mpz_class(strip_plus(text)));
    } else {
        const std::string n = text.substr(0, slash);
        const std::string d = text.substr(slash + 1);
        if (!valid_int(n) || !valid_int(d) || d[0] == '-') throw ParseError("not a scalar: '" + text + "'");
        mpz_class den(strip_plus(d));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        q = mpq_class(mpz_class(strip_plus(n)), den);
        q.canonicalize();
    }
    return Scalar(f, q);
}

bool Scalar::is_zero() const {
    if (field_.is_rational()) return sgn(rational()) == 0;
    return residue() == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rational()) return rational() == 1;
    return residue() == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch(field_.to_string() + " vs " + o.field_.to_string());
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(v_) += o.rational();
    } else {
        const std::uint64_t p = field_.characteristic();
        std::uint64_t s = residue() + o.residue();
        if (s >= p) s -= p;
        v_ = s;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(v_) -= o.rational();
    } else {
        const std::uint64_t p = field_.characteristic();
        const std::uint64_t a = residue();
        const std::uint64_t b = o.residue();
        v_ = a >= b ? a - b : a + p - b;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational())
        std::get<mpq_class>(v_) *= o.rational();
    else
        v_ = mul_mod(residue(), o.residue(), field_.characteristic());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    return *this *= o.inverse();
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
    check_same(a);
    check_same(b);
    if (field_.is_rational()) {
        if (sgn(a.rational()) == 0 || sgn(b.rational()) == 0) return;
        static thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), a.rational().get_mpq_t(), b.rational().get_mpq_t());
        auto& q = std::get<mpq_class>(v_);
        mpq_add(q.get_mpq_t(), q.get_mpq_t(), tmp.get_mpq_t());
    } else {
        const std::uint64_t p = field_.characteristic();
        std::uint64_t s = residue() + mul_mod(a.residue(), b.residue(), p);
        if (s >= p) s -= p;
        v_ = s;
    }
}

Scalar Scalar::operator-() const {
    Scalar r(field_);
    r -= *this;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw NotInvertible("division by zero");
    if (field_.is_rational()) {
        Scalar r(*this);
        auto& q = std::get<mpq_class>(r.v_);
        mpq_inv(q.get_mpq_t(), q.get_mpq_t());
        return r;
    }
    const std::uint64_t p = field_.characteristic();
    Scalar r(field_);
    r.v_ = pow_mod(residue(), p - 2, p);
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    if (a.field_.is_rational()) return a.rational() == b.rational();
    return a.residue() == b.residue();
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return rational().get_str();
    return std::to_string(residue());
}

}  // namespace pentagon
