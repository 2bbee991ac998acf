#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spreadlab/matrix.hpp"

namespace spreadlab {

enum class SearchSpace { All01, ZeroDiag01, WeightedBox };

std::string_view to_string(SearchSpace space) noexcept;
/// Parses "all-01" / "zero-diag-01" / "weighted-box"; throws InvalidArgument.
SearchSpace parse_search_space(std::string_view text);

struct SearchReport {
    std::size_t n = 0;
    SearchSpace search_space = SearchSpace::All01;
    bool zero_diag = false;
    double best_spread = 0.0;
    DenseMatrix best_matrix = DenseMatrix::zeros(1);
    bool is_symmetric = false; // entrywise within 1e-9
    bool is_01 = false;        // entries within 1e-6 of {0,1}
    std::uint64_t matrices_examined = 0;
    std::uint64_t ties = 0; // raw count of attainers within 1e-9 of the best
    std::optional<std::uint64_t> best_code; // exhaustive only
    std::optional<std::uint64_t> seed;      // local search only
    std::optional<std::size_t> restarts;    // local search only
};

/// P_π((1 1 1; 1 1 1; 1 1 0) ⊗ J_{n/3})P_πᵀ with (P_π X P_πᵀ)_ij = X_{π(i)π(j)}.
/// An empty `perm` means the identity. Throws NotDivisibleByThree.
[[nodiscard]] DenseMatrix construct_kron_extremal(std::size_t n, std::span<const std::size_t> perm = {});

/// Adjacency matrix of the join of a clique on ⌊2n/3⌋ vertices (listed first)
/// and an independent set on ⌈n/3⌉ vertices.
[[nodiscard]] DenseMatrix construct_join(std::size_t n);

struct CatalogEntry {
    DenseMatrix matrix;
    double expected_spread = 0.0;
    std::string label;
};

/// The four small-order matrices of spread √5, 2√3, √21 and √33 (orders 2–5).
[[nodiscard]] std::vector<CatalogEntry> small_spread_catalog();

/// Number of worker threads when none is requested: SPREADLAB_THREADS if set
/// to a positive integer, otherwise the hardware concurrency (at least 1).
[[nodiscard]] std::size_t default_thread_count();

/// Largest order accepted by exhaustive_search / local_search.
inline constexpr std::size_t kMaxExhaustiveOrder = 5;
inline constexpr std::size_t kMaxLocalOrder = 12;

/// Matrix for `code` in `space`: bit k is the k-th free position in row-major
/// order (every entry for all-01, off-diagonal entries for zero-diag-01).
[[nodiscard]] DenseMatrix decode_matrix(std::size_t n, SearchSpace space, std::uint64_t code);

/// Enumerates every 0-1 matrix of the space. The smallest code among the
/// attainers becomes best_matrix; the result does not depend on `threads`
/// (0 means default_thread_count()). Throws OrderTooLarge for n > 5.
[[nodiscard]] SearchReport exhaustive_search(std::size_t n, SearchSpace space, std::size_t threads = 0);

/// Projected coordinate ascent over [0,1]^{n×n} (diagonal pinned to 0 when
/// zero_diag). Restart r draws from a generator seeded by (seed, r); the best
/// restart wins with ties going to the lowest restart index.
[[nodiscard]] SearchReport local_search(std::size_t n, std::uint64_t seed, std::size_t restarts = 50,
                                        bool zero_diag = false, std::size_t threads = 0);

} // namespace spreadlab
