#include "mcg4/forms.hpp"

#include "mcg4/snf.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <map>
#include <stdexcept>

namespace mcg4 {

using Rat = boost::multiprecision::cpp_rational;

SymmetricForm::SymmetricForm(IntMatrix gram) : gram_(std::move(gram))
{
    if (!gram_.is_square())
        throw std::invalid_argument("SymmetricForm: Gram matrix must be square");
    if (!gram_.is_symmetric())
        throw std::invalid_argument("SymmetricForm: Gram matrix must be symmetric");
}

SymmetricForm SymmetricForm::hyperbolic()
{
    return SymmetricForm(IntMatrix::from_rows({{0, 1}, {1, 0}}));
}

SymmetricForm SymmetricForm::e8()
{
    // Cartan matrix of E8: chain 1..7 with node 8 attached at node 5.
    return SymmetricForm(IntMatrix::from_rows({
        {2, -1, 0, 0, 0, 0, 0, 0},
        {-1, 2, -1, 0, 0, 0, 0, 0},
        {0, -1, 2, -1, 0, 0, 0, 0},
        {0, 0, -1, 2, -1, 0, 0, 0},
        {0, 0, 0, -1, 2, -1, 0, -1},
        {0, 0, 0, 0, -1, 2, -1, 0},
        {0, 0, 0, 0, 0, -1, 2, 0},
        {0, 0, 0, 0, -1, 0, 0, 2},
    }));
}

Int SymmetricForm::pair(const IntMatrix& x, const IntMatrix& y) const
{
    if (x.rows() != rank() || y.rows() != rank() || x.cols() != 1 || y.cols() != 1)
        throw std::invalid_argument("SymmetricForm::pair: expected column vectors of matching rank");
    return (x.transposed() * gram_ * y).at(0, 0);
}

SymmetricForm direct_sum(const SymmetricForm& a, const SymmetricForm& b)
{
    return SymmetricForm(IntMatrix::block_diag(a.gram(), b.gram()));
}

IntMatrix radical_basis(const SymmetricForm& f)
{
    return kernel_basis(f.gram());
}

std::size_t corank(const SymmetricForm& f)
{
    return radical_basis(f).cols();
}

bool is_isometry(const SymmetricForm& f, const IntMatrix& a)
{
    if (a.rows() != f.rank() || a.cols() != f.rank())
        throw std::invalid_argument("is_isometry: dimension mismatch");
    if (a.transposed() * f.gram() * a != f.gram())
        return false;
    return is_unimodular(a);
}

bool is_even(const SymmetricForm& f)
{
    for (std::size_t i = 0; i < f.rank(); ++i)
        if (f.gram().at(i, i) % 2 != 0)
            return false;
    return true;
}

namespace {

// Rational LDL^T data for a positive-definite form: Q(x) = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2.
struct Cholesky {
    std::size_t n = 0;
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> u;
};

bool try_cholesky(const IntMatrix& q, Cholesky& out)
{
    const std::size_t n = q.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rat(q.at(i, j));

    out.n = n;
    out.d.assign(n, Rat(0));
    out.u.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] <= 0)
            return false;
        out.d[i] = a[i][i];
        for (std::size_t j = i + 1; j < n; ++j)
            out.u[i][j] = a[i][j] / a[i][i];
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) {
                a[k][l] -= out.d[i] * out.u[i][k] * out.u[i][l];
                a[l][k] = a[k][l];
            }
    }
    return true;
}

long long rat_floor(const Rat& r)
{
    Int num = numerator(r);
    Int den = denominator(r);
    Int q = num / den;
    if (num % den != 0 && num < 0)
        q -= 1;
    return q.convert_to<long long>();
}

// Depth-first over x[i] for i = level-1 down to 0; vectors with exact total norm
// (budget fully consumed at the last coordinate) are collected.
void short_vector_recurse(const Cholesky& ch, std::size_t level, std::vector<long long>& x,
                          const Rat& budget, std::vector<std::vector<long long>>& out)
{
    const std::size_t i = level - 1;
    Rat s(0);
    for (std::size_t j = i + 1; j < ch.n; ++j)
        s += ch.u[i][j] * x[j];

    auto weight = [&](long long t) {
        Rat e = Rat(t) + s;
        return ch.d[i] * e * e;
    };
    auto visit = [&](long long t) {
        x[i] = t;
        const Rat rest = budget - weight(t);
        if (i == 0) {
            if (rest == 0)
                out.push_back(x);
        } else {
            short_vector_recurse(ch, i, x, rest, out);
        }
    };

    const long long base = rat_floor(-s);
    for (long long t = base; weight(t) <= budget; --t)
        visit(t);
    for (long long t = base + 1; weight(t) <= budget; ++t)
        visit(t);
    x[i] = 0;
}

}  // namespace

std::vector<std::vector<long long>> short_vectors(const SymmetricForm& f, const Int& norm)
{
    Cholesky ch;
    if (!try_cholesky(f.gram(), ch))
        throw std::invalid_argument("short_vectors: form is not positive definite");
    if (norm < 0)
        return {};
    std::vector<std::vector<long long>> out;
    if (f.rank() == 0)
        return out;
    std::vector<long long> x(f.rank(), 0);
    short_vector_recurse(ch, f.rank(), x, Rat(norm), out);
    if (norm == 0)
        out.erase(std::remove(out.begin(), out.end(), std::vector<long long>(f.rank(), 0)), out.end());
    std::sort(out.begin(), out.end());
    return out;
}

Definiteness classify_definiteness(const SymmetricForm& f)
{
    if (f.rank() == 0)
        return Definiteness::Empty;
    if (integer_rank(f.gram()) < f.rank())
        return Definiteness::Degenerate;
    Cholesky ch;
    if (try_cholesky(f.gram(), ch))
        return Definiteness::PositiveDefinite;
    if (try_cholesky(-f.gram(), ch))
        return Definiteness::NegativeDefinite;
    return Definiteness::Indefinite;
}

namespace {

using Vec = std::vector<long long>;

long long to_ll(const Int& v)
{
    if (v > 1000000000 || v < -1000000000)
        throw std::invalid_argument("isometry enumeration: Gram entries out of supported range");
    return v.convert_to<long long>();
}

struct DefiniteSearch {
    std::size_t n = 0;
    std::vector<Vec> gram;                         // positive-definite P, int64
    std::map<long long, std::vector<Vec>> shorts;  // norm -> candidate vectors
    std::map<long long, std::vector<Vec>> pshorts; // norm -> P * candidate

    explicit DefiniteSearch(const SymmetricForm& pos)
    {
        n = pos.rank();
        gram.assign(n, Vec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                gram[i][j] = to_ll(pos.gram().at(i, j));
        for (std::size_t k = 0; k < n; ++k) {
            const long long c = gram[k][k];
            if (shorts.count(c))
                continue;
            auto vs = short_vectors(pos, Int(c));
            std::vector<Vec> pv;
            pv.reserve(vs.size());
            for (const Vec& v : vs) {
                Vec w(n, 0);
                for (std::size_t i = 0; i < n; ++i) {
                    long long acc = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        acc += gram[i][j] * v[j];
                    w[i] = acc;
                }
                pv.push_back(std::move(w));
            }
            shorts[c] = std::move(vs);
            pshorts[c] = std::move(pv);
        }
    }

    static long long dot(const Vec& a, const Vec& b)
    {
        long long acc = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            acc += a[i] * b[i];
        return acc;
    }

    // True if the partial assignment cols[0..next-1] extends to a full isometry.
    // When collect != nullptr, every completion is appended instead (no early exit).
    bool complete(std::vector<Vec>& cols, std::size_t next, std::vector<std::vector<Vec>>* collect,
                  std::vector<Vec>* first_found)
    {
        if (next == n) {
            if (collect)
                collect->push_back(cols);
            if (first_found)
                *first_found = cols;
            return true;
        }
        const auto& cands = shorts.at(gram[next][next]);
        const auto& pcands = pshorts.at(gram[next][next]);
        bool any = false;
        for (std::size_t c = 0; c < cands.size(); ++c) {
            bool ok = true;
            for (std::size_t i = 0; i < next && ok; ++i)
                ok = dot(pcands[c], cols[i]) == gram[i][next];
            if (!ok)
                continue;
            cols.push_back(cands[c]);
            const bool found = complete(cols, next + 1, collect, first_found);
            cols.pop_back();
            if (found && !collect)
                return true;
            any = any || found;
        }
        return any;
    }
};

IntMatrix columns_to_matrix(const std::vector<Vec>& cols)
{
    const std::size_t n = cols.size();
    IntMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, j) = cols[j][i];
    return m;
}

IsometryGroup enumerate_definite(const SymmetricForm& pos, std::size_t cap)
{
    DefiniteSearch search(pos);
    const std::size_t n = pos.rank();

    IsometryGroup out;
    out.order = 1;

    // Stabilizer chain: |Aut| is the product over k of the orbit size of e_k under
    // the pointwise stabilizer of e_0..e_{k-1}; an orbit point is a vector with the
    // right inner products against e_0..e_{k-1} that extends to a full isometry.
    for (std::size_t k = 0; k < n; ++k) {
        const auto& cands = search.shorts.at(search.gram[k][k]);
        const auto& pcands = search.pshorts.at(search.gram[k][k]);
        Int orbit = 0;
        for (std::size_t c = 0; c < cands.size(); ++c) {
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i)
                ok = pcands[c][i] == search.gram[i][k];
            if (!ok)
                continue;
            std::vector<Vec> cols;
            cols.reserve(n);
            for (std::size_t i = 0; i < k; ++i) {
                Vec e(n, 0);
                e[i] = 1;
                cols.push_back(std::move(e));
            }
            cols.push_back(cands[c]);
            std::vector<Vec> completion;
            if (search.complete(cols, k + 1, nullptr, &completion)) {
                orbit += 1;
                out.generators.push_back(columns_to_matrix(completion));
            }
        }
        out.orbit_sizes.push_back(orbit);
        out.order *= orbit;
    }

    if (out.order <= cap) {
        std::vector<std::vector<Vec>> all;
        std::vector<Vec> cols;
        search.complete(cols, 0, &all, nullptr);
        if (Int(all.size()) != out.order)
            throw std::logic_error("isometry enumeration: chain order and full search disagree");
        out.elements.reserve(all.size());
        for (const auto& c : all)
            out.elements.push_back(columns_to_matrix(c));
        std::sort(out.elements.begin(), out.elements.end(), IntMatrix::lex_less);
        out.materialized = true;
    }
    return out;
}

}  // namespace

IsometryGroup enumerate_isometries(const SymmetricForm& f, std::size_t materialize_cap)
{
    const std::size_t n = f.rank();
    IsometryGroup out;

    if (n == 0) {
        out.order = 1;
        out.materialized = true;
        out.elements = {IntMatrix()};
        return out;
    }
    if (n == 1) {
        out.order = 2;
        out.materialized = true;
        out.elements = {IntMatrix::from_rows({{-1}}), IntMatrix::from_rows({{1}})};
        out.generators = {IntMatrix::from_rows({{-1}})};
        return out;
    }
    if (f == SymmetricForm::hyperbolic()) {
        // The primitive isotropic vectors of the hyperbolic plane are +-e1, +-e2,
        // and an isometry permutes them, so the group is exactly {+-I, +-swap}.
        out.order = 4;
        out.materialized = true;
        out.elements = {
            IntMatrix::from_rows({{-1, 0}, {0, -1}}),
            IntMatrix::from_rows({{0, -1}, {-1, 0}}),
            IntMatrix::from_rows({{0, 1}, {1, 0}}),
            IntMatrix::from_rows({{1, 0}, {0, 1}}),
        };
        out.generators = {IntMatrix::from_rows({{-1, 0}, {0, -1}}),
                          IntMatrix::from_rows({{0, 1}, {1, 0}})};
        return out;
    }

    switch (classify_definiteness(f)) {
    case Definiteness::PositiveDefinite:
        return enumerate_definite(f, materialize_cap);
    case Definiteness::NegativeDefinite:
        return enumerate_definite(SymmetricForm(-f.gram()), materialize_cap);
    case Definiteness::Degenerate:
        throw EnumerationUnsupported(
            "enumerate_isometries: degenerate form of rank >= 2; the full isometry group "
            "is infinite in general (rel-boundary subgroups are handled by the report layer)");
    default:
        throw EnumerationUnsupported(
            "enumerate_isometries: indefinite nondegenerate form of rank >= 2 has an "
            "infinite isometry group (the hyperbolic plane is the only special case)");
    }
}

Int isometry_group_order(const SymmetricForm& f)
{
    return enumerate_isometries(f, 0).order;
}

}  // namespace mcg4
