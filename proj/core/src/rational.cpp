#include "folcup/rational.hpp"

namespace folcup {

Rational rational_from_string(std::string_view s)
{
    if (s.empty())
        throw Error("rational_from_string: empty string");
    std::string text(s);
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw Error("rational_from_string: malformed rational '" + text + "'");
    if (r.get_den() == 0)
        throw Error("rational_from_string: zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::size_t coefficient_bits(const Rational& r)
{
    if (r == 0)
        return 0;
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) + mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

}  // namespace folcup
