#include "hqg/exact/scalar.hpp"

#include <charconv>

namespace hqg {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational Field<Rational>::parse(std::string_view text) const {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_integer(num) || (slash != std::string_view::npos && !valid_integer(den)))
        throw FormatError("malformed rational '" + std::string(text) + "'");
    auto strip = [](std::string_view s) { return std::string(s.starts_with('+') ? s.substr(1) : s); };
    mpz_class n(strip(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) d = mpz_class(strip(den), 10);
    if (d == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string Field<Rational>::format(const Rational& x) const {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field<ModP>::Field(std::uint64_t prime) : p_(prime) {
    if (!is_prime(prime)) throw FormatError("modulus " + std::to_string(prime) + " is not prime");
    if (prime > (1ULL << 62)) throw FormatError("prime modulus too large");
}

ModP Field<ModP>::from_int(long long n) const {
    const auto p = static_cast<long long>(p_);
    long long r = n % p;
    if (r < 0) r += p;
    return ModP(static_cast<std::uint64_t>(r), p_);
}

ModP Field<ModP>::from_rational(const Rational& q) const {
    const mpz_class p(std::to_string(p_), 10);
    auto reduce = [&](const mpz_class& z) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
        return ModP(std::stoull(r.get_str()), p_);
    };
    return reduce(q.get_num()) * reciprocal(reduce(q.get_den()));
}

ModP Field<ModP>::parse(std::string_view text) const {
    if (!valid_integer(text) || text.front() == '+') throw FormatError("malformed field element '" + std::string(text) + "'");
    bool neg = text.front() == '-';
    if (neg) text.remove_prefix(1);
    // Reduce digit by digit so arbitrarily long literals are accepted.
    ModP acc(0, p_);
    const ModP ten(10, p_);
    for (char c : text) acc = acc * ten + ModP(static_cast<std::uint64_t>(c - '0'), p_);
    return neg ? -acc : acc;
}

}  // namespace hqg
