#include "folcup/multicomplex.hpp"

namespace folcup {

MultiComplex::MultiComplex(int P, int Q) : P_(P), Q_(Q)
{
    if (P < 0 || Q < 0)
        throw Error("MultiComplex: negative box bounds");
}

void MultiComplex::set_dim(Bidegree a, int n)
{
    if (!in_box(a))
        throw Error("MultiComplex::set_dim: bidegree " + folcup::to_string(a) + " outside the box");
    if (n < 0)
        throw Error("MultiComplex::set_dim: negative dimension");
    if (n == 0)
        dims_.erase(a);
    else
        dims_[a] = n;
}

int MultiComplex::dim(Bidegree a) const
{
    auto it = dims_.find(a);
    return it == dims_.end() ? 0 : it->second;
}

int MultiComplex::total_dim() const
{
    int n = 0;
    for (const auto& [a, d] : dims_)
        n += d;
    return n;
}

void MultiComplex::set_block(int k, Bidegree a, SparseMatrix m)
{
    if (k < 0)
        throw Error("MultiComplex::set_block: negative component index");
    Bidegree b = diff_target(a, k);
    if (!in_box(a) || !in_box(b))
        throw Error("MultiComplex::set_block: block d_" + std::to_string(k) + " at " +
                    folcup::to_string(a) + " maps outside the box");
    if (m.cols() != dim(a) || m.rows() != dim(b))
        throw Error("MultiComplex::set_block: block shape mismatch at " + folcup::to_string(a));
    if (m.is_zero()) {
        auto it = diff_.find(k);
        if (it != diff_.end()) {
            it->second.erase(a);
            if (it->second.empty())
                diff_.erase(it);
        }
        return;
    }
    diff_[k][a] = std::move(m);
}

const SparseMatrix* MultiComplex::block(int k, Bidegree a) const
{
    auto it = diff_.find(k);
    if (it == diff_.end())
        return nullptr;
    auto jt = it->second.find(a);
    return jt == it->second.end() ? nullptr : &jt->second;
}

SparseMatrix MultiComplex::block_or_zero(int k, Bidegree a) const
{
    if (const SparseMatrix* m = block(k, a))
        return *m;
    Bidegree b = diff_target(a, k);
    return SparseMatrix(in_box(b) ? dim(b) : 0, dim(a));
}

int MultiComplex::max_k() const
{
    return diff_.empty() ? 0 : diff_.rbegin()->first;
}

void MultiComplex::set_labels(Bidegree a, std::vector<std::string> names)
{
    if (static_cast<int>(names.size()) != dim(a))
        throw Error("MultiComplex::set_labels: label count mismatch at " + folcup::to_string(a));
    labels_[a] = std::move(names);
}

const std::vector<std::string>* MultiComplex::labels(Bidegree a) const
{
    auto it = labels_.find(a);
    return it == labels_.end() ? nullptr : &it->second;
}

std::string MultiComplex::label(Bidegree a, int i) const
{
    if (const auto* names = labels(a))
        return (*names)[static_cast<std::size_t>(i)];
    return folcup::to_string(a) + "#" + std::to_string(i);
}

void ProductStructure::set_pair(const MultiComplex& mc, Bidegree a, int i, Bidegree b, int j,
                                QVector value)
{
    Bidegree c = a + b;
    if (!mc.in_box(c))
        throw Error("ProductStructure::set_pair: product block at " + folcup::to_string(a) + "x" +
                    folcup::to_string(b) + " lands outside the box");
    if (i < 0 || i >= mc.dim(a) || j < 0 || j >= mc.dim(b))
        throw Error("ProductStructure::set_pair: basis index out of range");
    if (static_cast<int>(value.size()) != mc.dim(c))
        throw Error("ProductStructure::set_pair: value length mismatch");
    if (is_zero(value)) {
        auto it = blocks_.find({a, b});
        if (it != blocks_.end()) {
            it->second.erase({i, j});
            if (it->second.empty())
                blocks_.erase(it);
        }
        return;
    }
    blocks_[{a, b}][{i, j}] = std::move(value);
}

const QVector* ProductStructure::pair(Bidegree a, int i, Bidegree b, int j) const
{
    auto it = blocks_.find({a, b});
    if (it == blocks_.end())
        return nullptr;
    auto jt = it->second.find({i, j});
    return jt == it->second.end() ? nullptr : &jt->second;
}

QVector ProductStructure::mul(const MultiComplex& mc, Bidegree a, const QVector& x, Bidegree b,
                              const QVector& y) const
{
    Bidegree c = a + b;
    if (!mc.in_box(c))
        return {};
    QVector out = zero_vector(mc.dim(c));
    auto it = blocks_.find({a, b});
    if (it == blocks_.end())
        return out;
    for (const auto& [ij, value] : it->second) {
        const Rational& xi = x[static_cast<std::size_t>(ij.first)];
        if (xi == 0)
            continue;
        const Rational& yj = y[static_cast<std::size_t>(ij.second)];
        if (yj == 0)
            continue;
        axpy(out, xi * yj, value);
    }
    return out;
}

SparseMatrix BlockMap::block_or_zero(const MultiComplex& src, const MultiComplex& dst,
                                     Bidegree a) const
{
    auto it = blocks.find(a);
    if (it != blocks.end())
        return it->second;
    return SparseMatrix(dst.in_box(a) ? dst.dim(a) : 0, src.dim(a));
}

QVector BlockMap::apply(const MultiComplex& src, const MultiComplex& dst, Bidegree a,
                        const QVector& x) const
{
    auto it = blocks.find(a);
    if (it != blocks.end())
        return it->second.apply(x);
    if (static_cast<int>(x.size()) != src.dim(a))
        throw Error("BlockMap::apply: length mismatch");
    return zero_vector(dst.in_box(a) ? dst.dim(a) : 0);
}

BlockMap BlockMap::identity(const MultiComplex& mc)
{
    BlockMap m;
    for (const auto& [a, d] : mc.dims())
        m.blocks.emplace(a, SparseMatrix::identity(d));
    return m;
}

BlockMap BlockMap::scaled_identity(const MultiComplex& mc, const Rational& s)
{
    BlockMap m;
    for (const auto& [a, d] : mc.dims())
        m.blocks.emplace(a, SparseMatrix::identity(d).scaled(s));
    return m;
}

BlockMap BlockMap::compose(const MultiComplex& a, const MultiComplex& b, const MultiComplex& c,
                           const BlockMap& second, const BlockMap& first)
{
    BlockMap out;
    for (const auto& [deg, d] : a.dims()) {
        (void)d;
        SparseMatrix m = second.block_or_zero(b, c, deg) * first.block_or_zero(a, b, deg);
        if (!m.is_zero())
            out.blocks.emplace(deg, std::move(m));
    }
    return out;
}

std::string Violation::to_string() const
{
    std::string s = check;
    if (at.p >= 0)
        s += " at " + folcup::to_string(at);
    if (index >= 0)
        s += " basis index " + std::to_string(index);
    if (!detail.empty())
        s += ": " + detail;
    return s;
}

void ValidationReport::add(std::string check, Bidegree at, int index, std::string detail)
{
    violations.push_back({std::move(check), at, index, std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other)
{
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string ValidationReport::to_string() const
{
    if (ok())
        return "valid";
    std::string s;
    for (const auto& v : violations)
        s += v.to_string() + "\n";
    return s;
}

}  // namespace folcup
