#include "folcup/simplicial.hpp"

#include <algorithm>
#include <set>

namespace folcup {

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets)
{
    std::set<Simplex> all;
    for (const Simplex& f : facets) {
        if (f.empty())
            throw Error("SimplicialComplex: empty facet");
        Simplex s = f;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error("SimplicialComplex: repeated vertex in facet");
        // enumerate all nonempty subsets
        const int n = static_cast<int>(s.size());
        for (int mask = 1; mask < (1 << n); ++mask) {
            Simplex face;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i))
                    face.push_back(s[static_cast<std::size_t>(i)]);
            all.insert(face);
        }
    }
    SimplicialComplex out;
    for (const Simplex& s : all) {
        const int d = static_cast<int>(s.size()) - 1;
        if (d >= static_cast<int>(out.by_dim_.size()))
            out.by_dim_.resize(static_cast<std::size_t>(d) + 1);
        out.by_dim_[static_cast<std::size_t>(d)].push_back(s);
    }
    for (auto& list : out.by_dim_)
        std::sort(list.begin(), list.end());
    return out;
}

SimplicialComplex SimplicialComplex::circle(int n)
{
    if (n < 3)
        throw Error("SimplicialComplex::circle: needs at least 3 vertices");
    std::vector<Simplex> facets;
    for (int i = 0; i < n; ++i)
        facets.push_back({i, (i + 1) % n});
    return from_facets(facets);
}

int SimplicialComplex::count(int d) const
{
    if (d < 0 || d > dim())
        return 0;
    return static_cast<int>(by_dim_[static_cast<std::size_t>(d)].size());
}

const std::vector<SimplicialComplex::Simplex>& SimplicialComplex::simplices(int d) const
{
    static const std::vector<Simplex> empty;
    if (d < 0 || d > dim())
        return empty;
    return by_dim_[static_cast<std::size_t>(d)];
}

int SimplicialComplex::index_of(int d, const Simplex& s) const
{
    const auto& list = simplices(d);
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s)
        return -1;
    return static_cast<int>(it - list.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const
{
    return index_of(static_cast<int>(s.size()) - 1, s) >= 0;
}

std::string SimplicialComplex::label(int d, int i) const
{
    const Simplex& s = simplices(d)[static_cast<std::size_t>(i)];
    std::string out = "[";
    for (std::size_t j = 0; j < s.size(); ++j)
        out += (j ? "," : "") + std::to_string(s[j]);
    return out + "]";
}

SparseMatrix SimplicialComplex::coboundary(int d) const
{
    SparseMatrix m(count(d + 1), count(d));
    const auto& rows = simplices(d + 1);
    for (int r = 0; r < count(d + 1); ++r) {
        const Simplex& s = rows[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            int c = index_of(d, face);
            if (c < 0)
                throw Error("SimplicialComplex: missing face");
            m.add_to(r, c, (i % 2 == 0) ? rational(1) : rational(-1));
        }
    }
    return m;
}

namespace {

Bidegree placed(int d, Placement axis)
{
    return axis == Placement::Transverse ? Bidegree{d, 0} : Bidegree{0, d};
}

}  // namespace

AlgebraModel cochain_algebra(const SimplicialComplex& k, Placement axis)
{
    AlgebraModel out;
    const int top = std::max(k.dim(), 0);
    out.mc = axis == Placement::Transverse ? MultiComplex(top, 0) : MultiComplex(0, top);
    for (int d = 0; d <= k.dim(); ++d) {
        out.mc.set_dim(placed(d, axis), k.count(d));
        std::vector<std::string> names;
        for (int i = 0; i < k.count(d); ++i)
            names.push_back(k.label(d, i));
        out.mc.set_labels(placed(d, axis), std::move(names));
    }
    const int kk = axis == Placement::Transverse ? 1 : 0;  // coboundary has bidegree (1,0) or (0,1)
    for (int d = 0; d < k.dim(); ++d) {
        SparseMatrix cb = k.coboundary(d);
        if (!cb.is_zero())
            out.mc.set_block(kk, placed(d, axis), std::move(cb));
    }

    // Alexander-Whitney: (f∪g)([v_0..v_n]) = f([v_0..v_j]) g([v_j..v_n]).
    for (int n = 0; n <= k.dim(); ++n) {
        for (int s = 0; s < k.count(n); ++s) {
            const auto& simplex = k.simplices(n)[static_cast<std::size_t>(s)];
            for (int j = 0; j <= n; ++j) {
                SimplicialComplex::Simplex front(simplex.begin(), simplex.begin() + j + 1);
                SimplicialComplex::Simplex back(simplex.begin() + j, simplex.end());
                const int fi = k.index_of(j, front);
                const int bi = k.index_of(n - j, back);
                QVector value = zero_vector(k.count(n));
                value[static_cast<std::size_t>(s)] = 1;
                // distinct simplices have distinct (front, back) splits, so no accumulation
                out.ps.set_pair(out.mc, placed(j, axis), fi, placed(n - j, axis), bi,
                                std::move(value));
            }
        }
    }
    out.ps.set_unit(QVector(static_cast<std::size_t>(k.count(0)), Rational(1)));
    return out;
}

BlockMap cochain_restriction(const SimplicialComplex& k, const SimplicialComplex& l,
                             Placement axis)
{
    BlockMap rho;
    for (int d = 0; d <= k.dim(); ++d) {
        SparseMatrix m(l.count(d), k.count(d));
        for (int i = 0; i < l.count(d); ++i) {
            int j = k.index_of(d, l.simplices(d)[static_cast<std::size_t>(i)]);
            if (j < 0)
                throw Error("cochain_restriction: not a subcomplex");
            m.set(i, j, rational(1));
        }
        if (!m.is_zero())
            rho.blocks.emplace(placed(d, axis), std::move(m));
    }
    return rho;
}

}  // namespace folcup
