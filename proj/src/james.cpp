#include "mcg4/james.hpp"

#include "mcg4/int_matrix.hpp"
#include "mcg4/snf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcg4 {

std::string monomial_to_string(const Monomial& m)
{
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (any)
            out << '*';
        out << 'x' << (i + 1);
        if (m[i] > 1)
            out << '^' << m[i];
        any = true;
    }
    return any ? out.str() : "1";
}

F2Poly F2Poly::one(std::size_t n)
{
    return monomial(n, Monomial(n, 0));
}

F2Poly F2Poly::generator(std::size_t n, std::size_t i)
{
    if (i >= n)
        throw std::invalid_argument("F2Poly::generator: index out of range");
    Monomial m(n, 0);
    m[i] = 1;
    return monomial(n, std::move(m));
}

F2Poly F2Poly::monomial(std::size_t n, Monomial m)
{
    if (m.size() != n)
        throw std::invalid_argument("F2Poly::monomial: exponent vector length mismatch");
    F2Poly p(n);
    p.terms_.insert(std::move(m));
    return p;
}

void F2Poly::toggle(const Monomial& m)
{
    auto it = terms_.find(m);
    if (it == terms_.end())
        terms_.insert(m);
    else
        terms_.erase(it);
}

F2Poly F2Poly::operator+(const F2Poly& other) const
{
    if (n_ != other.n_)
        throw std::invalid_argument("F2Poly: generator count mismatch in +");
    F2Poly out = *this;
    for (const Monomial& m : other.terms_)
        out.toggle(m);
    return out;
}

F2Poly F2Poly::operator*(const F2Poly& other) const
{
    if (n_ != other.n_)
        throw std::invalid_argument("F2Poly: generator count mismatch in *");
    F2Poly out(n_);
    for (const Monomial& a : terms_)
        for (const Monomial& b : other.terms_) {
            Monomial c(n_);
            for (std::size_t i = 0; i < n_; ++i)
                c[i] = a[i] + b[i];
            out.toggle(c);
        }
    return out;
}

bool F2Poly::is_homogeneous() const
{
    if (terms_.size() <= 1)
        return true;
    auto total = [](const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); };
    const unsigned d = total(*terms_.begin());
    for (const Monomial& m : terms_)
        if (total(m) != d)
            return false;
    return true;
}

std::size_t F2Poly::degree() const
{
    if (terms_.empty())
        return 0;
    if (!is_homogeneous())
        throw std::invalid_argument("F2Poly::degree: polynomial is not homogeneous");
    return 2 * std::accumulate(terms_.begin()->begin(), terms_.begin()->end(), 0u);
}

std::string F2Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const Monomial& m : terms_) {
        if (!first)
            out << " + ";
        out << monomial_to_string(m);
        first = false;
    }
    return out.str();
}

F2Poly sq2(const F2Poly& p)
{
    if (!p.is_homogeneous())
        throw std::invalid_argument("sq2: polynomial must be homogeneous");
    F2Poly out(p.generators());
    for (const Monomial& m : p.terms())
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] % 2 == 0)
                continue;
            Monomial bumped = m;
            bumped[i] += 1;
            out = out + F2Poly::monomial(p.generators(), std::move(bumped));
        }
    return out;
}

F2Poly sq2_w(const F2Poly& p, const F2Poly& w)
{
    if (!w.is_zero() && (!w.is_homogeneous() || w.degree() != 2))
        throw std::invalid_argument("sq2_w: twist must be homogeneous of degree 2 or zero");
    return sq2(p) + w * p;
}

namespace {

void monomials_of_weight(std::size_t n, std::size_t pos, unsigned weight, Monomial& m,
                         std::vector<Monomial>& out)
{
    if (pos + 1 == n) {
        m[pos] = weight;
        out.push_back(m);
        return;
    }
    for (unsigned e = weight; e + 1 > 0; --e) {
        m[pos] = e;
        monomials_of_weight(n, pos + 1, weight - e, m, out);
    }
    m[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n, std::size_t degree)
{
    std::vector<Monomial> out;
    if (degree % 2 != 0)
        return out;  // the classifying space has only even-dimensional cells
    if (n == 0)
        return degree == 0 ? std::vector<Monomial>{Monomial{}} : out;
    Monomial m(n, 0);
    monomials_of_weight(n, 0, static_cast<unsigned>(degree / 2), m, out);
    return out;
}

F2Matrix sq2_w_matrix(std::size_t n, const F2Poly& w, std::size_t deg)
{
    const auto src = monomial_basis(n, deg);
    const auto dst = monomial_basis(n, deg + 2);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < dst.size(); ++i)
        index[dst[i]] = i;

    F2Matrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        const F2Poly image = sq2_w(F2Poly::monomial(n, src[j]), w);
        for (const Monomial& t : image.terms())
            m.set(index.at(t), j, true);
    }
    return m;
}

D2Matrices d2_matrices(std::size_t n, const F2Poly& w)
{
    D2Matrices out;
    for (std::size_t r = 0; r <= 6; ++r) {
        if (r % 2 != 0 || r < 2) {
            const std::size_t src = monomial_basis(n, r).size();
            const std::size_t dst = r >= 2 ? monomial_basis(n, r - 2).size() : 0;
            out.s1[r] = F2Matrix(dst, src);
            out.s0[r] = F2Matrix(dst, src);
            continue;
        }
        const F2Matrix dual = sq2_w_matrix(n, w, r - 2).transposed();
        out.s1[r] = dual;
        out.s0[r] = dual;  // reduction mod 2 precedes it on the s = 0 row
    }
    return out;
}

SSReport e3_report(std::size_t n, bool spin)
{
    if (n < 1)
        throw std::invalid_argument("e3_report: need at least one generator");

    SSReport report;
    report.n = n;
    report.spin = spin;
    report.w = spin ? F2Poly::zero(n) : F2Poly::generator(n, 0);

    const F2Matrix sq_2_to_4 = sq2_w_matrix(n, report.w, 2);
    const F2Matrix sq_4_to_6 = sq2_w_matrix(n, report.w, 4);
    const std::size_t m4 = monomial_basis(n, 4).size();

    const std::size_t rank24 = f2_rank(sq_2_to_4);
    const std::size_t rank46 = f2_rank(sq_4_to_6);

    // d2 o d2 = 0: the image of d2^{6,0} lies in the kernel of d2^{4,1}.
    if (!(sq_2_to_4.transposed() * sq_4_to_6.transposed()).is_zero())
        throw std::logic_error("e3_report: d2 composition is nonzero");

    // E3^{2,2} = H_2 / im(d2^{4,1}); the image has dimension rank(sq2_w on degree 2).
    report.e3_22_dim = n - rank24;
    if (report.e3_22_dim > 0) {
        // the class of the w-dual generates iff e_1 is not in the image subspace
        F2Matrix e1(n, 1);
        e1.set(0, 0, true);
        report.e3_22_generated_by_w_dual =
            !f2_in_column_space(sq_2_to_4.transposed(), e1) && report.e3_22_dim == 1;
    }

    // E3^{4,1} = ker(d2^{4,1}) / im(d2^{6,0}).
    report.e3_41_dim = (m4 - rank24) - rank46;

    // E3^{4,0} = ker(red_2 then dual of sq2_w) inside H_4(K; Z): a full-rank
    // sublattice of Z^{m4} with quotient (Z/2)^{rank}.
    report.e3_40.free_rank = m4;
    report.e3_40.index_two_generators = rank24;
    const F2Matrix d2_40 = sq_2_to_4.transposed();
    const auto deg4 = monomial_basis(n, 4);
    for (std::size_t j = 0; j < m4; ++j) {
        bool in_kernel = true;
        for (std::size_t i = 0; i < n && in_kernel; ++i)
            in_kernel = !d2_40.get(i, j);
        if (in_kernel)
            report.e3_40.unit_generators += 1;
        else
            report.e3_40.index_two_duals.push_back(deg4[j]);
    }

    report.omega4_summands = {"Omega4 (coefficient group, symbolic)",
                              "E3^{4,0} (free rank " + std::to_string(m4) + ")"};
    if (report.e3_22_dim > 0)
        report.omega4_summands.push_back("E3^{2,2} ((Z/2)^" + std::to_string(report.e3_22_dim) + ")");

    // Omega_5 of the point vanishes in both categories, so the total-degree-5
    // line dies with E3^{4,1}.
    report.omega5_zero = report.e3_41_dim == 0;
    return report;
}

}  // namespace mcg4
