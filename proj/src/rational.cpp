#include "logbb/rational.hpp"

#include "logbb/errors.hpp"

#include <cctype>

namespace logbb {

Rat rat(long n, long d) {
    if (d == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

Rat rat_parse(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const char* msg) -> Rat {
        throw ParseError(std::string("invalid rational: ") + msg, i,
                         {"integer", "p/q"});
    };
    std::size_t n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits0 = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits0) return fail("expected digits");
    mpz_class num(std::string(text.substr(start, i - start)), 10);
    mpz_class den(1);
    if (i < n && text[i] == '/') {
        ++i;
        std::size_t dstart = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == dstart) return fail("expected denominator digits");
        den = mpz_class(std::string(text.substr(dstart, i - dstart)), 10);
        if (den == 0) return fail("zero denominator");
    }
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != n) return fail("trailing characters");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_pow(const Rat& base, unsigned long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rat q(num, den);
    q.canonicalize(); // sign of base already in num
    return q;
}

Rat rat_ipow(long n, unsigned long e) { return rat_pow(Rat(n), e); }

} // namespace logbb
