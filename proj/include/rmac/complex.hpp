#ifndef RMAC_COMPLEX_HPP
#define RMAC_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rmac/field.hpp"
#include "rmac/matrix.hpp"
#include "rmac/vertex_set.hpp"

namespace rmac {

/// Finite simplicial complex on the labels 1..n (n <= 64).
///
/// Simplices are stored per dimension, each bucket sorted lexicographically on
/// the sorted vertex tuples. That order fixes the row/column layout of every
/// boundary matrix. Vertices are labels, not automatically simplices: a label
/// with no 0-simplex is simply absent from the complex.
///
/// Instances are immutable once built.
class SimplicialComplex {
public:
    /// The empty complex (only the empty face) on n labels.
    explicit SimplicialComplex(int n);

    /// Trusted constructor from per-dimension face lists that are already
    /// downward closed; buckets are sorted here. Throws std::invalid_argument
    /// on out-of-range labels or misplaced faces (closure is not re-checked).
    SimplicialComplex(int n, std::vector<std::vector<VertexSet>> faces_by_dim);

    int n() const { return n_; }
    /// Largest k with a k-simplex, -1 for the empty complex.
    int dim() const { return static_cast<int>(faces_.size()) - 1; }

    /// k-simplices in lexicographic order; empty span for k outside 0..dim.
    std::span<const VertexSet> faces(int k) const;
    std::size_t face_count(int k) const { return faces(k).size(); }
    std::size_t simplex_count() const;

    bool contains(VertexSet simplex) const;
    /// Index of a k-simplex inside faces(k), or -1.
    std::ptrdiff_t index_of(VertexSet simplex) const;

    /// Labels that occur as 0-simplices.
    VertexSet vertex_set() const;

    /// Inclusion-maximal simplices, sorted lexicographically.
    std::vector<VertexSet> facets() const;

    bool is_downward_closed() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int n_;
    std::vector<std::vector<VertexSet>> faces_;
};

/// Downward closure of the given facets on n labels.
/// Throws std::invalid_argument for n outside 1..64, empty facets, labels out
/// of range, or repeated labels inside one facet.
SimplicialComplex build_complex(int n, const std::vector<std::vector<int>>& facets);

/// All subsets of {1..n} with at most k+1 elements; k = -1 gives the empty complex.
/// Throws std::invalid_argument unless -1 <= k <= n-1.
SimplicialComplex build_skeleton(int n, int k);

/// Simplices of K whose vertices all lie in J. Labels are preserved.
SimplicialComplex full_subcomplex(const SimplicialComplex& complex, VertexSet subset);

/// Boundary operator of the augmented chain complex from k-chains to (k-1)-chains.
/// For k = 0 this is the 1 x f_0 augmentation row of ones. Entries of column
/// sigma are (-1)^t at the row of the face omitting the t-th vertex of sigma.
IntegerMatrix boundary_matrix(const SimplicialComplex& complex, int k);

/// dim of the k-th reduced homology over the field, for k >= -1.
std::size_t reduced_betti(const SimplicialComplex& complex, int k, const FieldSpec& field);

/// All reduced Betti numbers: element t holds the value for degree t - 1,
/// covering degrees -1..dim.
std::vector<std::size_t> reduced_betti_numbers(const SimplicialComplex& complex,
                                               const FieldSpec& field);

/// sum_{k>=0} (-1)^k f_k - 1
std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex);

} // namespace rmac

#endif
