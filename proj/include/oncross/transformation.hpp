#pragma once

/// Total transformations of the chain {1 < 2 < ... < n}, acting on the right,
/// with left-to-right composition: x(ab) = (xa)b.  Points are 1-based
/// everywhere in the public interface.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "oncross/errors.hpp"

namespace oncross {

class SetPartition;
class ConvexPartition;

class Transformation {
  public:
    // images[x-1] is the image of point x; every entry must lie in 1..n.
    Transformation(int n, std::vector<int> images);

    static Transformation identity(int n);
    static Transformation constant(int n, int value);

    int n() const { return n_; }
    int apply(int x) const;
    int operator()(int x) const { return apply(x); }
    const std::vector<int>& images() const { return images_; }

    // Left-to-right composition: x(ab) = (xa)b.
    Transformation compose(const Transformation& other) const;

    bool is_order_preserving() const;
    bool is_constant() const;
    bool is_idempotent() const;

    std::vector<int> image() const;  // sorted, distinct
    int rank() const;

    SetPartition kernel() const;
    // Kernel as consecutive intervals; requires is_order_preserving().
    ConvexPartition convex_kernel() const;

    bool operator==(const Transformation&) const = default;
    auto operator<=>(const Transformation&) const = default;

  private:
    int n_;
    std::vector<int> images_;
};

Transformation compose(const Transformation& a, const Transformation& b);

std::ostream& operator<<(std::ostream& os, const Transformation& t);

// Partition of {1..n} into arbitrary blocks, canonically ordered by minimum.
class SetPartition {
  public:
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_index_of(int x) const;
    bool is_convex() const;

    // All set partitions of {1..n}, restricted-growth order.  Guarded.
    static std::vector<SetPartition> all(int n, int guard = 6);

    bool operator==(const SetPartition&) const = default;
    auto operator<=>(const SetPartition&) const = default;

  private:
    int n_;
    std::vector<std::vector<int>> blocks_;  // each sorted; ordered by min
};

// Ordered decomposition of {1..n} into consecutive intervals, stored as the
// strictly increasing sequence of block right-endpoints (last one is n).
class ConvexPartition {
  public:
    ConvexPartition(int n, std::vector<int> right_ends);

    static ConvexPartition singletons(int n);
    static ConvexPartition one_block(int n);
    // Blocks encoded as a bitmask over the n-1 possible cuts; bit i set
    // means there is a cut between points i+1 and i+2.
    static ConvexPartition from_cut_mask(int n, std::uint32_t mask);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(right_ends_.size()); }
    const std::vector<int>& right_ends() const { return right_ends_; }
    std::pair<int, int> block(int i) const;  // [lo, hi] of the i-th block (0-based)
    int block_index_of(int x) const;
    std::uint32_t cut_mask() const;
    SetPartition as_set_partition() const;

    // All 2^{n-1} convex partitions, ascending block count then
    // lexicographic right_ends.  This order is relied on by golden files.
    static std::vector<ConvexPartition> all(int n);

    bool operator==(const ConvexPartition&) const = default;
    auto operator<=>(const ConvexPartition&) const = default;

  private:
    int n_;
    std::vector<int> right_ends_;
};

std::ostream& operator<<(std::ostream& os, const ConvexPartition& p);

enum class Green { R, L, H, D };

// R: equal kernels; L: equal images; H: both; D (= J): equal rank.
bool green_related(const Transformation& a, const Transformation& b, Green rel);

struct EnumerationLimits {
    int max_on_n = 10;         // enumerate_On and brute-force scans over O_n
    int max_tn_partition_n = 6;  // anything walking all set partitions of T_n
};

// Stream over all of O_n in lexicographic image-sequence order.  Streams are
// independent and re-creatable; they hold no shared state.
class OnStream {
  public:
    explicit OnStream(int n, const EnumerationLimits& limits = {});
    // Writes the next map into `out`; returns false when exhausted.
    bool next(Transformation& out);

  private:
    int n_;
    std::vector<int> current_;
    bool done_;
};

// Every order-preserving map of {1..n}, lexicographic by image sequence.
std::vector<Transformation> enumerate_On(int n, const EnumerationLimits& limits = {});

// |O_n| by an independent route (monotone-sequence counting, no enumeration).
long long count_On(int n);

// Higgins embedding O_n -> O_{n+1}*: (ab)* = b*a*.  The case formula is
// driven by the per-block maxima k_1 < ... < k_t and their images r_i.
Transformation higgins_dual(const Transformation& a);

}  // namespace oncross
