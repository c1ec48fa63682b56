#ifndef FOLCUP_BIDEGREE_HPP
#define FOLCUP_BIDEGREE_HPP

#include <compare>
#include <string>

namespace folcup {

/* (p,q): p = transverse degree, q = tangential degree. Differential
 * components d_k have bidegree (k, 1-k); total degree is p+q. */
struct Bidegree {
    int p = 0;
    int q = 0;

    int total() const { return p + q; }
    auto operator<=>(const Bidegree&) const = default;
};

inline Bidegree operator+(Bidegree a, Bidegree b)
{
    return {a.p + b.p, a.q + b.q};
}

inline Bidegree diff_target(Bidegree a, int k)
{
    return {a.p + k, a.q + 1 - k};
}

inline std::string to_string(Bidegree a)
{
    return "(" + std::to_string(a.p) + "," + std::to_string(a.q) + ")";
}

}  // namespace folcup

#endif
