#ifndef RMAC_HOCHSTER_HPP
#define RMAC_HOCHSTER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rmac/complex.hpp"
#include "rmac/field.hpp"

namespace rmac {

/// Bidegree (i, j) of beta^{-i,2j}: homological index i, multidegree size j.
struct Bidegree {
    int i;
    int j;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Nonzero bigraded Betti numbers beta^{-i,2j} of the Stanley-Reisner ring.
/// Absent bidegrees are zero.
class BigradedTable {
public:
    BigradedTable(int n, FieldSpec field) : n_(n), field_(field) {}

    int n() const { return n_; }
    const FieldSpec& field() const { return field_; }

    std::uint64_t at(int i, int j) const;
    void add(int i, int j, std::uint64_t value);
    /// Entrywise sum; both tables must share n and field.
    void merge(const BigradedTable& other);

    /// Nonzero entries keyed by (j, i) so iteration follows output order.
    const std::map<std::pair<int, int>, std::uint64_t>& entries_by_j() const { return entries_; }
    std::uint64_t total() const;

    friend bool operator==(const BigradedTable&, const BigradedTable&) = default;

private:
    int n_;
    FieldSpec field_;
    std::map<std::pair<int, int>, std::uint64_t> entries_;
};

struct HochsterOptions {
    /// Restrict the computation to these bidegrees; only subsets of the
    /// requested sizes are enumerated.
    std::optional<std::set<Bidegree>> filter;
    bool override_guard = false;
    /// 0 means hardware concurrency.
    unsigned workers = 1;
};

/// Full tables enumerate 2^n subsets; refused above this n without override.
inline constexpr int kHochsterVertexGuard = 20;

/// beta^{-i,2j} = sum over |J| = j of dim H~_{j-i-1}(K_J).
/// Throws GuardError when the subset count exceeds 2^kHochsterVertexGuard
/// without override.
BigradedTable bigraded_betti(const SimplicialComplex& complex, const FieldSpec& field,
                             const HochsterOptions& options = {});

/// Betti numbers b_l of the moment-angle complex, l = 2j - i, with trailing
/// zeros removed (b_0 = 1 always survives).
std::vector<std::uint64_t> zk_betti_numbers(const BigradedTable& table);
std::vector<std::uint64_t> zk_betti_numbers(const SimplicialComplex& complex, const FieldSpec& field,
                                            const HochsterOptions& options = {});

/// Inclusion-minimal non-faces over the labels 1..n, in lexicographic order.
std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& complex);

inline constexpr int kTaylorGeneratorGuard = 16;

/// Tor ranks from the Taylor complex of the minimal non-face monomials, an
/// independent route to the same table as bigraded_betti.
/// Throws GuardError for more than kTaylorGeneratorGuard generators without override.
BigradedTable tor_via_taylor(const SimplicialComplex& complex, const FieldSpec& field,
                             bool override_guard = false);

} // namespace rmac

#endif
