#include "rmac/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rmac/combinatorics.hpp"
#include "rmac/linalg.hpp"

namespace rmac {

namespace {

void check_vertex_count(int n)
{
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must lie in 1.." + std::to_string(kMaxVertices) +
                                    ", got " + std::to_string(n));
}

void sort_bucket(std::vector<VertexSet>& bucket)
{
    std::sort(bucket.begin(), bucket.end(), lex_less);
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
}

} // namespace

SimplicialComplex::SimplicialComplex(int n) : n_(n)
{
    check_vertex_count(n);
}

SimplicialComplex::SimplicialComplex(int n, std::vector<std::vector<VertexSet>> faces_by_dim)
    : n_(n), faces_(std::move(faces_by_dim))
{
    check_vertex_count(n);
    const VertexSet labels = VertexSet::range(n);
    for (std::size_t k = 0; k < faces_.size(); ++k) {
        for (VertexSet s : faces_[k]) {
            if (s.size() != static_cast<int>(k) + 1)
                throw std::invalid_argument("simplex stored in the wrong dimension bucket");
            if (!s.subset_of(labels))
                throw std::invalid_argument("simplex uses a label above n");
        }
        sort_bucket(faces_[k]);
    }
    while (!faces_.empty() && faces_.back().empty())
        faces_.pop_back();
}

std::span<const VertexSet> SimplicialComplex::faces(int k) const
{
    if (k < 0 || k > dim())
        return {};
    return faces_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::simplex_count() const
{
    std::size_t total = 0;
    for (const auto& bucket : faces_)
        total += bucket.size();
    return total;
}

std::ptrdiff_t SimplicialComplex::index_of(VertexSet simplex) const
{
    auto bucket = faces(simplex.size() - 1);
    auto it = std::lower_bound(bucket.begin(), bucket.end(), simplex, lex_less);
    if (it == bucket.end() || *it != simplex)
        return -1;
    return it - bucket.begin();
}

bool SimplicialComplex::contains(VertexSet simplex) const
{
    if (simplex.empty())
        return true;
    return index_of(simplex) >= 0;
}

VertexSet SimplicialComplex::vertex_set() const
{
    VertexSet out;
    for (VertexSet v : faces(0))
        out = out | v;
    return out;
}

std::vector<VertexSet> SimplicialComplex::facets() const
{
    std::vector<VertexSet> out;
    for (int k = dim(); k >= 0; --k) {
        for (VertexSet s : faces(k)) {
            bool maximal = true;
            for (VertexSet bigger : out) {
                if (s.subset_of(bigger)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal)
                out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool SimplicialComplex::is_downward_closed() const
{
    for (int k = 1; k <= dim(); ++k) {
        for (VertexSet s : faces(k)) {
            for (int v : s.labels())
                if (index_of(s.without(v)) < 0)
                    return false;
        }
    }
    return true;
}

SimplicialComplex build_complex(int n, const std::vector<std::vector<int>>& facets)
{
    check_vertex_count(n);
    std::vector<VertexSet> masks;
    masks.reserve(facets.size());
    int top = -1;
    for (const auto& facet : facets) {
        if (facet.empty())
            throw std::invalid_argument("facets must be non-empty");
        for (int v : facet)
            if (v < 1 || v > n)
                throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." +
                                            std::to_string(n));
        VertexSet s = VertexSet::from_labels(facet);
        masks.push_back(s);
        top = std::max(top, s.size() - 1);
    }

    std::vector<std::vector<VertexSet>> buckets(static_cast<std::size_t>(top + 1));
    for (VertexSet facet : masks) {
        // Every non-empty submask of the facet.
        const std::uint64_t full = facet.bits();
        for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) {
            VertexSet face(sub);
            buckets[static_cast<std::size_t>(face.size() - 1)].push_back(face);
        }
    }
    return SimplicialComplex(n, std::move(buckets));
}

SimplicialComplex build_skeleton(int n, int k)
{
    check_vertex_count(n);
    if (k < -1 || k > n - 1)
        throw std::invalid_argument("skeleton dimension " + std::to_string(k) + " outside -1.." +
                                    std::to_string(n - 1));
    std::vector<std::vector<VertexSet>> buckets;
    for (int size = 1; size <= k + 1; ++size)
        buckets.push_back(k_subsets(n, size));
    return SimplicialComplex(n, std::move(buckets));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& complex, VertexSet subset)
{
    std::vector<std::vector<VertexSet>> buckets;
    for (int k = 0; k <= complex.dim(); ++k) {
        std::vector<VertexSet> kept;
        for (VertexSet s : complex.faces(k))
            if (s.subset_of(subset))
                kept.push_back(s);
        if (kept.empty())
            break;
        buckets.push_back(std::move(kept));
    }
    return SimplicialComplex(complex.n(), std::move(buckets));
}

IntegerMatrix boundary_matrix(const SimplicialComplex& complex, int k)
{
    if (k < 0)
        throw std::invalid_argument("boundary_matrix needs k >= 0");
    auto columns = complex.faces(k);
    if (k == 0) {
        IntegerMatrix augmentation(1, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c)
            augmentation(0, c) = 1;
        return augmentation;
    }
    auto rows = complex.faces(k - 1);
    IntegerMatrix m(rows.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        std::int64_t sign = 1;
        for (int v : columns[c].labels()) {
            auto it = std::lower_bound(rows.begin(), rows.end(), columns[c].without(v), lex_less);
            m(static_cast<std::size_t>(it - rows.begin()), c) = sign;
            sign = -sign;
        }
    }
    return m;
}

std::vector<std::size_t> reduced_betti_numbers(const SimplicialComplex& complex,
                                               const FieldSpec& field)
{
    const int top = complex.dim();
    // ranks[k] = rank of boundary_matrix(k) for k = 0..top; rank of top+1 is zero.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int k = 0; k <= top; ++k)
        ranks[static_cast<std::size_t>(k)] = rank(boundary_matrix(complex, k), field);

    std::vector<std::size_t> betti(static_cast<std::size_t>(top + 2), 0);
    betti[0] = 1 - (top >= 0 ? ranks[0] : 0);
    for (int k = 0; k <= top; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        betti[idx + 1] = complex.face_count(k) - ranks[idx] - ranks[idx + 1];
    }
    return betti;
}

std::size_t reduced_betti(const SimplicialComplex& complex, int k, const FieldSpec& field)
{
    if (k < -1)
        throw std::invalid_argument("reduced_betti needs k >= -1");
    if (k > complex.dim())
        return 0;
    if (k == -1)
        return complex.dim() < 0 ? 1 : 0;
    const std::size_t below = rank(boundary_matrix(complex, k), field);
    const std::size_t above = k == complex.dim() ? 0 : rank(boundary_matrix(complex, k + 1), field);
    return complex.face_count(k) - below - above;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex)
{
    std::int64_t chi = -1;
    for (int k = 0; k <= complex.dim(); ++k) {
        const auto count = static_cast<std::int64_t>(complex.face_count(k));
        chi += (k % 2 == 0) ? count : -count;
    }
    return chi;
}

} // namespace rmac
