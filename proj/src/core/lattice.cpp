#include "core/lattice.hpp"

#include "core/error.hpp"
#include "core/linalg.hpp"
#include "core/rational.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace pfm {

namespace {

using IntegerRow = std::vector<Integer>;

// Unimodular row reduction of `rows` restricted to the first `cols` entries.
// Returns the number of pivot rows; rows past it are zero on those columns.
std::size_t echelonize(std::vector<IntegerRow>& rows, std::size_t cols, bool reduce_above)
{
    std::size_t piv = 0;
    for (std::size_t col = 0; col < cols && piv < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = piv; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
            }
            if (best == rows.size()) break;
            std::swap(rows[piv], rows[best]);
            bool done = true;
            for (std::size_t r = piv + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[piv][col].get_mpz_t());
                for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= q * rows[piv][c];
                if (rows[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (piv < rows.size() && rows[piv][col] != 0) {
            if (rows[piv][col] < 0)
                for (auto& x : rows[piv]) x = -x;
            if (reduce_above) {
                for (std::size_t r = 0; r < piv; ++r) {
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[piv][col].get_mpz_t());
                    if (q == 0) continue;
                    for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= q * rows[piv][c];
                }
            }
            ++piv;
        }
    }
    return piv;
}

// Integer basis of {v : sum_r v_r * m[r] = 0}, Hermite-reduced.
std::vector<IntegerRow> left_kernel(const std::vector<IntegerRow>& m, std::size_t cols)
{
    const std::size_t n = m.size();
    std::vector<IntegerRow> work(n);
    for (std::size_t r = 0; r < n; ++r) {
        work[r] = m[r];
        work[r].resize(cols + n);
        work[r][cols + r] = 1;
    }
    const std::size_t rank = echelonize(work, cols, false);

    std::vector<IntegerRow> kernel;
    for (std::size_t r = rank; r < n; ++r) kernel.emplace_back(work[r].begin() + static_cast<long>(cols), work[r].end());
    echelonize(kernel, n, true);
    return kernel;
}

long to_long(const Integer& z)
{
    if (!z.fits_slong_p()) fail(ErrorCode::invariant, "lattice entry exceeds machine range");
    return z.get_si();
}

}  // namespace

void ExponentMatrix::validate() const
{
    if (signs.size() != entries.size() || ygrades.size() != entries.size())
        fail(ErrorCode::invalid_argument, "exponent matrix: signs/ygrades do not match the monomial count");
    for (const auto& row : entries)
        if (row.size() != variables) fail(ErrorCode::invalid_argument, "exponent matrix: ragged row");
    for (int s : signs)
        if (s != 1 && s != -1) fail(ErrorCode::invalid_argument, "exponent matrix: sign must be +1 or -1");
    for (long g : ygrades)
        if (g < 0) fail(ErrorCode::invalid_argument, "exponent matrix: negative y-grade");
}

LatticeVector x_exponents(const ExponentMatrix& a, const LatticeVector& b)
{
    LatticeVector x(a.variables, 0);
    for (std::size_t j = 0; j < a.monomials(); ++j)
        if (b[j] != 0)
            for (std::size_t i = 0; i < a.variables; ++i) x[i] += b[j] * a.entries[j][i];
    return x;
}

int sign_of(const ExponentMatrix& a, const LatticeVector& b)
{
    long negatives = 0;
    for (std::size_t j = 0; j < a.monomials(); ++j)
        if (a.signs[j] < 0) negatives += b[j];
    return negatives % 2 == 0 ? 1 : -1;
}

long ydegree_of(const ExponentMatrix& a, const LatticeVector& b)
{
    long d = 0;
    for (std::size_t j = 0; j < a.monomials(); ++j) d += b[j] * a.ygrades[j];
    return d;
}

std::vector<LatticeVector> integer_kernel_basis(const ExponentMatrix& a)
{
    a.validate();
    std::vector<IntegerRow> m(a.monomials(), IntegerRow(a.variables));
    for (std::size_t j = 0; j < a.monomials(); ++j)
        for (std::size_t i = 0; i < a.variables; ++i) m[j][i] = a.entries[j][i];

    std::vector<LatticeVector> out;
    for (const auto& row : left_kernel(m, a.variables)) {
        LatticeVector v;
        v.reserve(row.size());
        for (const auto& z : row) v.push_back(to_long(z));
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

// Depth-first search over the monomials of positive y-grade. The y-grade 0
// monomials are solved for at the leaves. Pruning uses linear forms that must
// vanish on every kernel point (a basis of the constraints with the y-grade 0
// columns eliminated) and the linear-programming bound on how far the
// remaining budget can move each form.
class KernelEnumerator {
public:
    explicit KernelEnumerator(const ExponentMatrix& a) : a_(a)
    {
        a.validate();
        for (std::size_t j = 0; j < a.monomials(); ++j) (a.ygrades[j] > 0 ? positive_ : zero_).push_back(j);
        build_forms();
        build_solver();
        build_bounds();
    }

    std::vector<LatticeVector> run(long ydegree)
    {
        out_.clear();
        if (ydegree < 0) return out_;
        point_.assign(a_.monomials(), 0);
        partial_.assign(forms_.size(), 0);
        exps_.assign(a_.variables, 0);
        descend(0, ydegree);
        std::sort(out_.begin(), out_.end());
        return out_;
    }

private:
    void build_forms()
    {
        // Constraint combinations y with y^T A0 = 0, so that y . x-exponents is
        // independent of the y-grade 0 coordinates.
        std::vector<IntegerRow> ys;
        if (zero_.empty()) {
            for (std::size_t i = 0; i < a_.variables; ++i) {
                IntegerRow y(a_.variables);
                y[i] = 1;
                ys.push_back(std::move(y));
            }
        } else {
            std::vector<IntegerRow> a0(a_.variables, IntegerRow(zero_.size()));
            for (std::size_t i = 0; i < a_.variables; ++i)
                for (std::size_t k = 0; k < zero_.size(); ++k) a0[i][k] = a_.entries[zero_[k]][i];
            ys = left_kernel(a0, zero_.size());
        }
        for (const auto& y : ys) {
            std::vector<long> form(a_.monomials(), 0);
            bool nonzero = false;
            for (std::size_t j : positive_) {
                Integer c = 0;
                for (std::size_t i = 0; i < a_.variables; ++i) c += y[i] * a_.entries[j][i];
                form[j] = to_long(c);
                nonzero = nonzero || form[j] != 0;
            }
            if (nonzero) forms_.push_back(std::move(form));
        }
    }

    void build_solver()
    {
        if (zero_.empty()) return;
        // Pick independent variable rows of A0 and invert the square block.
        RationalMatrix a0t(zero_.size(), std::vector<Rational>(a_.variables));
        for (std::size_t k = 0; k < zero_.size(); ++k)
            for (std::size_t i = 0; i < a_.variables; ++i) a0t[k][i] = a_.entries[zero_[k]][i];
        RationalMatrix reduced = a0t;
        auto pivots = row_reduce(reduced, a_.variables);
        if (pivots.size() != zero_.size())
            fail(ErrorCode::invalid_argument,
                 "monomials of y-grade 0 must have linearly independent exponents (otherwise the expansion diverges)");
        selected_ = pivots;

        const std::size_t k = zero_.size();
        RationalMatrix aug(k, std::vector<Rational>(2 * k));
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) aug[r][c] = a_.entries[zero_[c]][selected_[r]];
            aug[r][k + r] = 1;
        }
        row_reduce(aug, 2 * k);
        inverse_.assign(k, std::vector<Rational>(k));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) inverse_[r][c] = aug[r][k + c];
    }

    void build_bounds()
    {
        // For each depth t and form f: the indices in positive_[t..] of the
        // largest and smallest ratio form[j] / ygrade[j].
        const std::size_t n = positive_.size();
        best_max_.assign(forms_.size(), std::vector<std::size_t>(n + 1, 0));
        best_min_.assign(forms_.size(), std::vector<std::size_t>(n + 1, 0));
        for (std::size_t f = 0; f < forms_.size(); ++f) {
            for (std::size_t t = n; t-- > 0;) {
                const std::size_t j = positive_[t];
                best_max_[f][t] = j;
                best_min_[f][t] = j;
                if (t + 1 < n) {
                    const std::size_t jm = best_max_[f][t + 1];
                    if (ratio_less(j, jm, f)) best_max_[f][t] = jm;
                    const std::size_t jn = best_min_[f][t + 1];
                    if (ratio_less(jn, j, f)) best_min_[f][t] = jn;
                }
            }
        }
    }

    bool ratio_less(std::size_t j, std::size_t k, std::size_t f) const
    {
        return forms_[f][j] * a_.ygrades[k] < forms_[f][k] * a_.ygrades[j];
    }

    bool feasible(std::size_t t, long remaining) const
    {
        for (std::size_t f = 0; f < forms_.size(); ++f) {
            const long s = partial_[f];
            if (t == positive_.size()) {
                if (s != 0) return false;
                continue;
            }
            const std::size_t jmax = best_max_[f][t], jmin = best_min_[f][t];
            if (s * a_.ygrades[jmax] + remaining * forms_[f][jmax] < 0) return false;
            if (s * a_.ygrades[jmin] + remaining * forms_[f][jmin] > 0) return false;
        }
        return true;
    }

    void descend(std::size_t t, long remaining)
    {
        if (!feasible(t, remaining)) return;
        if (t == positive_.size()) {
            if (remaining == 0) leaf();
            return;
        }
        const std::size_t j = positive_[t];
        const long w = a_.ygrades[j];
        const long top = remaining / w;
        const long lo = t + 1 == positive_.size() ? (remaining % w == 0 ? top : top + 1) : 0;
        for (long c = 0; c <= top; ++c) {
            if (c >= lo) {
                point_[j] = c;
                descend(t + 1, remaining - c * w);
            }
            // advance the running sums to c + 1
            for (std::size_t f = 0; f < forms_.size(); ++f) partial_[f] += forms_[f][j];
            if (!zero_.empty())
                for (std::size_t i = 0; i < a_.variables; ++i) exps_[i] += a_.entries[j][i];
        }
        for (std::size_t f = 0; f < forms_.size(); ++f) partial_[f] -= (top + 1) * forms_[f][j];
        if (!zero_.empty())
            for (std::size_t i = 0; i < a_.variables; ++i) exps_[i] -= (top + 1) * a_.entries[j][i];
        point_[j] = 0;
    }

    void leaf()
    {
        if (zero_.empty()) {
            out_.push_back(point_);
            return;
        }
        LatticeVector p = point_;
        for (std::size_t r = 0; r < zero_.size(); ++r) {
            Rational v = 0;
            for (std::size_t c = 0; c < zero_.size(); ++c) v -= inverse_[r][c] * exps_[selected_[c]];
            if (!is_integer(v) || v < 0) return;
            p[zero_[r]] = v.get_num().get_si();
        }
        for (long e : x_exponents(a_, p))
            if (e != 0) return;
        out_.push_back(std::move(p));
    }

    const ExponentMatrix& a_;
    std::vector<std::size_t> positive_, zero_, selected_;
    std::vector<std::vector<long>> forms_;
    RationalMatrix inverse_;
    std::vector<std::vector<std::size_t>> best_max_, best_min_;

    LatticeVector point_;
    std::vector<long> partial_;
    std::vector<long> exps_;
    std::vector<LatticeVector> out_;
};

}  // namespace

std::vector<LatticeVector> enumerate_kernel_points(const ExponentMatrix& a, long ydegree)
{
    return KernelEnumerator(a).run(ydegree);
}

std::vector<KernelGenerator> nonneg_kernel_generators(const ExponentMatrix& a, long degree_bound)
{
    if (degree_bound <= 0) fail(ErrorCode::precondition, "degree bound must be positive");
    KernelEnumerator enumerator(a);
    std::vector<KernelGenerator> basis;
    for (long d = 1; d <= degree_bound; ++d) {
        const std::size_t known = basis.size();
        for (auto& p : enumerator.run(d)) {
            // p is reducible iff some smaller irreducible fits under it.
            bool reducible = false;
            for (std::size_t g = 0; g < known && !reducible; ++g) {
                const auto& e = basis[g].exponents;
                reducible = std::equal(e.begin(), e.end(), p.begin(), [](long x, long y) { return x <= y; });
            }
            if (reducible) continue;
            KernelGenerator gen;
            gen.sign = sign_of(a, p);
            gen.ydegree = d;
            gen.exponents = std::move(p);
            basis.push_back(std::move(gen));
        }
    }
    std::sort(basis.begin(), basis.end(),
              [](const KernelGenerator& x, const KernelGenerator& y) { return x.exponents < y.exponents; });
    return basis;
}

}  // namespace pfm
