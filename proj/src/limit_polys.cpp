#include "rmac/limit_polys.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "rmac/combinatorics.hpp"
#include "rmac/complex.hpp"
#include "rmac/errors.hpp"
#include "rmac/linalg.hpp"

namespace rmac {

namespace {

// Modulus standing in for Q. A square submatrix of size r of a matrix whose
// columns carry d+1 entries of +-1 has |det| <= (d+1)^(r/2) (Hadamard), so
// while (d+1)^r < P^2 no nonzero minor vanishes mod P and ranks agree with Q.
constexpr std::uint64_t kRationalModulus = (std::uint64_t{1} << 61) - 1;

struct Observable {
    VertexSet support;   // vertex set J of the full subcomplex
    int degree;          // k in H~_k
    std::int64_t faces_below;  // number of (d-1)-faces inside J
    std::int64_t rank_below;   // rank of the (d-1)-st boundary of the skeleton on J
};

/// Joint distribution of (|S|, X_1, X_2) over all subsets S of the candidate simplices.
class Enumeration {
public:
    Enumeration(int d, int vertices, std::vector<Observable> observables, const FieldSpec& field, unsigned workers)
        : d_(d), observables_(std::move(observables))
    {
        const SimplicialComplex skeleton = build_skeleton(vertices, d);
        const IntegerMatrix boundary = boundary_matrix(skeleton, d);
        rows_ = boundary.rows();
        auto top = skeleton.faces(d);
        for (std::size_t c = 0; c < top.size(); ++c) {
            std::uint32_t membership = 0;
            for (std::size_t g = 0; g < observables_.size(); ++g)
                if (top[c].subset_of(observables_[g].support))
                    membership |= 1u << g;
            if (membership == 0)
                continue;
            std::vector<std::int64_t> column(rows_);
            for (std::size_t r = 0; r < rows_; ++r)
                column[r] = boundary(r, c);
            columns_.push_back(std::move(column));
            membership_.push_back(membership);
        }
        const int count = static_cast<int>(columns_.size());
        if (count > kEnumerationGuard)
            throw GuardError("enumeration over 2^" + std::to_string(count) +
                             " complexes exceeds the limit of 2^" + std::to_string(kEnumerationGuard));

        if (field.is_rational()) {
            const double log_bound = static_cast<double>(std::min<std::size_t>(columns_.size(), rows_)) *
                                     std::log2(static_cast<double>(d + 1));
            if (log_bound >= 121.0)
                throw InvariantError("modular rank is not certified to equal the rational rank");
            modulus_ = kRationalModulus;
        } else {
            modulus_ = field.modulus();
        }

        bound_ = static_cast<std::size_t>(std::max<std::size_t>(rows_, columns_.size())) + 1;
        run(workers);
    }

    int candidates() const { return static_cast<int>(columns_.size()); }

    /// sum over S of weight(x_1, x_2) p^|S| (1-p)^(M-|S|)
    template <typename Weight>
    IntPolynomial expectation(Weight weight) const
    {
        const auto m = static_cast<unsigned>(columns_.size());
        IntPolynomial result;
        for (unsigned s = 0; s <= m; ++s) {
            mpz_class total = 0;
            for (std::size_t x1 = 0; x1 < bound_; ++x1)
                for (std::size_t x2 = 0; x2 < bound_; ++x2) {
                    const std::uint64_t count = tally_[index(s, x1, x2)];
                    if (count != 0)
                        total += mpz_class(static_cast<unsigned long>(count)) * weight(static_cast<long>(x1), static_cast<long>(x2));
                }
            if (total != 0) {
                IntPolynomial term = IntPolynomial::bernstein(s, m - s);
                term *= total;
                result += term;
            }
        }
        return result;
    }

private:
    struct State {
        std::vector<ModularEchelon> bases;
        std::array<std::int64_t, 2> inside{0, 0};
        unsigned size = 0;
    };

    std::size_t index(std::size_t s, std::size_t x1, std::size_t x2) const
    {
        return (s * bound_ + x1) * bound_ + x2;
    }

    std::int64_t observe(const State& state, std::size_t g) const
    {
        const Observable& o = observables_[g];
        const auto rank = static_cast<std::int64_t>(state.bases[g].rank());
        if (o.degree == d_ - 1)
            return o.faces_below - o.rank_below - rank;
        return state.inside[g] - rank;
    }

    // Include or exclude column c; returns a mask of bases that grew.
    std::uint32_t include(State& state, std::size_t c) const
    {
        std::uint32_t grown = 0;
        for (std::size_t g = 0; g < observables_.size(); ++g) {
            if (membership_[c] >> g & 1) {
                ++state.inside[g];
                if (state.bases[g].insert(columns_[c]))
                    grown |= 1u << g;
            }
        }
        ++state.size;
        return grown;
    }

    void exclude_again(State& state, std::size_t c, std::uint32_t grown) const
    {
        for (std::size_t g = 0; g < observables_.size(); ++g) {
            if (membership_[c] >> g & 1) {
                --state.inside[g];
                if (grown >> g & 1)
                    state.bases[g].pop();
            }
        }
        --state.size;
    }

    void descend(State& state, std::size_t c, std::vector<std::uint64_t>& tally) const
    {
        if (c == columns_.size()) {
            const auto x1 = static_cast<std::size_t>(observe(state, 0));
            const auto x2 = observables_.size() > 1 ? static_cast<std::size_t>(observe(state, 1)) : 0;
            ++tally[index(state.size, x1, x2)];
            return;
        }
        descend(state, c + 1, tally);
        const std::uint32_t grown = include(state, c);
        descend(state, c + 1, tally);
        exclude_again(state, c, grown);
    }

    void run(unsigned workers)
    {
        const std::size_t cells = (columns_.size() + 1) * bound_ * bound_;
        const std::size_t split = std::min<std::size_t>(columns_.size(), 8);
        const std::size_t tasks = std::size_t{1} << split;
        const unsigned threads = detail::resolve_workers(workers);
        std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(cells, 0));

        detail::parallel_for(tasks, threads, [&](std::size_t task, unsigned worker) {
            State state;
            for (std::size_t g = 0; g < observables_.size(); ++g)
                state.bases.emplace_back(rows_, modulus_);
            for (std::size_t c = 0; c < split; ++c)
                if (task >> c & 1)
                    include(state, c);
            descend(state, split, partial[worker]);
        });

        tally_.assign(cells, 0);
        for (const auto& part : partial)
            for (std::size_t t = 0; t < cells; ++t)
                tally_[t] += part[t];
    }

    int d_;
    std::vector<Observable> observables_;
    std::size_t rows_ = 0;
    std::vector<std::vector<std::int64_t>> columns_;
    std::vector<std::uint32_t> membership_;
    std::uint64_t modulus_ = 2;
    std::size_t bound_ = 1;
    std::vector<std::uint64_t> tally_;
};

void check_dimensions(int d, int j)
{
    if (d < 1)
        throw std::invalid_argument("d must be at least 1");
    if (j < d + 1 || j > kMaxVertices)
        throw std::invalid_argument("j must lie in d+1..64, got j=" + std::to_string(j));
    if (binomial(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(d + 1)) >
        static_cast<std::uint64_t>(kEnumerationGuard))
        throw GuardError("C(" + std::to_string(j) + "," + std::to_string(d + 1) +
                         ") candidate simplices exceed the enumeration limit of " +
                         std::to_string(kEnumerationGuard));
}

Observable make_observable(int d, VertexSet support, int degree, const FieldSpec& field)
{
    const int j = support.size();
    const SimplicialComplex skeleton = build_skeleton(j, d - 1);
    Observable o;
    o.support = support;
    o.degree = degree;
    o.faces_below = static_cast<std::int64_t>(skeleton.face_count(d - 1));
    o.rank_below = static_cast<std::int64_t>(rank(boundary_matrix(skeleton, d - 1), field));
    return o;
}

IntPolynomial single_moment(int d, int j, int degree, const FieldSpec& field, unsigned workers, bool variance)
{
    check_dimensions(d, j);
    Enumeration e(d, j, {make_observable(d, VertexSet::range(j), degree, field)}, field, workers);
    IntPolynomial mean = e.expectation([](long x, long) { return x; });
    if (!variance)
        return mean;
    IntPolynomial second = e.expectation([](long x, long) { return x * x; });
    return second - mean * mean;
}

} // namespace

int homology_degree(int d, int j, int i)
{
    if (i == j - d)
        return d - 1;
    if (i == j - d - 1)
        return d;
    throw std::invalid_argument("i must be j-d or j-d-1 (got i=" + std::to_string(i) +
                                ", j=" + std::to_string(j) + ", d=" + std::to_string(d) + ")");
}

IntPolynomial limit_poly_f(int d, int j, const FieldSpec& field, unsigned workers)
{
    return single_moment(d, j, d - 1, field, workers, false);
}

IntPolynomial limit_poly_g(int d, int j, const FieldSpec& field, unsigned workers)
{
    return single_moment(d, j, d, field, workers, false);
}

IntPolynomial exact_variance_poly(int d, int j, int i, const FieldSpec& field, unsigned workers)
{
    return single_moment(d, j, homology_degree(d, j, i), field, workers, true);
}

IntPolynomial exact_cov_poly(int d, int j, int m, int i, const FieldSpec& field, unsigned workers)
{
    if (d < 1 || j < d + 1)
        throw std::invalid_argument("exact_cov_poly requires d >= 1 and j >= d+1");
    if (m < 0 || m > j)
        throw std::invalid_argument("overlap m must lie in 0..j");
    const int degree = homology_degree(d, j, i);
    const int vertices = 2 * j - m;
    if (vertices > kMaxVertices)
        throw std::invalid_argument("2j - m exceeds 64 vertices");

    const VertexSet first = VertexSet::range(j);
    const VertexSet second(VertexSet::range(vertices).bits() & ~VertexSet::range(j - m).bits());
    const auto per_set = binomial(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(d + 1));
    const auto shared = binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(d + 1));
    if (2 * per_set - shared > static_cast<std::uint64_t>(kEnumerationGuard)) {
        if (m <= d)
            return {};
        throw GuardError("covariance enumeration over " + std::to_string(2 * per_set - shared) +
                         " candidate simplices exceeds the limit of " + std::to_string(kEnumerationGuard));
    }

    Enumeration e(d, vertices,
                  {make_observable(d, first, degree, field), make_observable(d, second, degree, field)},
                  field, workers);
    IntPolynomial joint = e.expectation([](long x1, long x2) { return x1 * x2; });
    IntPolynomial mean1 = e.expectation([](long x1, long) { return x1; });
    IntPolynomial mean2 = e.expectation([](long, long x2) { return x2; });
    return joint - mean1 * mean2;
}

} // namespace rmac
