#include "oncross/transformation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

namespace oncross {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw domain_error(msg);
}

}  // namespace

Transformation::Transformation(int n, std::vector<int> images) : n_(n), images_(std::move(images)) {
    require(n >= 1, "transformation: n must be positive");
    require(static_cast<int>(images_.size()) == n, "transformation: image sequence length != n");
    for (int v : images_) require(1 <= v && v <= n, "transformation: image entry outside 1..n");
}

Transformation Transformation::identity(int n) {
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Transformation(n, std::move(im));
}

Transformation Transformation::constant(int n, int value) {
    require(1 <= value && value <= n, "constant: value outside 1..n");
    return Transformation(n, std::vector<int>(static_cast<size_t>(n), value));
}

int Transformation::apply(int x) const {
    require(1 <= x && x <= n_, "apply: point outside 1..n");
    return images_[static_cast<size_t>(x - 1)];
}

Transformation Transformation::compose(const Transformation& other) const {
    require(n_ == other.n_, "compose: domain sizes differ");
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        im[i] = other.images_[static_cast<size_t>(images_[i] - 1)];
    return Transformation(n_, std::move(im));
}

Transformation compose(const Transformation& a, const Transformation& b) { return a.compose(b); }

bool Transformation::is_order_preserving() const {
    for (size_t i = 1; i < images_.size(); ++i)
        if (images_[i - 1] > images_[i]) return false;
    return true;
}

bool Transformation::is_constant() const {
    return std::all_of(images_.begin(), images_.end(), [&](int v) { return v == images_[0]; });
}

bool Transformation::is_idempotent() const { return compose(*this) == *this; }

std::vector<int> Transformation::image() const {
    std::vector<int> im = images_;
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
}

int Transformation::rank() const { return static_cast<int>(image().size()); }

SetPartition Transformation::kernel() const {
    std::vector<std::vector<int>> by_value(static_cast<size_t>(n_));
    for (int x = 1; x <= n_; ++x) by_value[static_cast<size_t>(apply(x) - 1)].push_back(x);
    std::vector<std::vector<int>> blocks;
    for (auto& b : by_value)
        if (!b.empty()) blocks.push_back(std::move(b));
    return SetPartition(n_, std::move(blocks));
}

ConvexPartition Transformation::convex_kernel() const {
    require(is_order_preserving(), "convex_kernel: map is not order-preserving");
    std::vector<int> right_ends;
    for (int x = 1; x < n_; ++x)
        if (apply(x) != apply(x + 1)) right_ends.push_back(x);
    right_ends.push_back(n_);
    return ConvexPartition(n_, std::move(right_ends));
}

std::ostream& operator<<(std::ostream& os, const Transformation& t) {
    os << '(';
    for (int x = 1; x <= t.n(); ++x) {
        if (x > 1) os << ',';
        os << t.apply(x);
    }
    return os << ')';
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    require(n >= 1, "set partition: n must be positive");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    int total = 0;
    for (auto& b : blocks_) {
        require(!b.empty(), "set partition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            require(1 <= x && x <= n, "set partition: point outside 1..n");
            require(!seen[static_cast<size_t>(x)], "set partition: point repeated");
            seen[static_cast<size_t>(x)] = 1;
            ++total;
        }
    }
    require(total == n, "set partition: blocks do not cover 1..n");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

int SetPartition::block_index_of(int x) const {
    require(1 <= x && x <= n_, "block_index_of: point outside 1..n");
    for (size_t i = 0; i < blocks_.size(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x))
            return static_cast<int>(i);
    throw domain_error("block_index_of: point not found");
}

bool SetPartition::is_convex() const {
    for (const auto& b : blocks_)
        if (b.back() - b.front() + 1 != static_cast<int>(b.size())) return false;
    return true;
}

std::vector<SetPartition> SetPartition::all(int n, int guard) {
    if (n > guard)
        throw guard_error("set partition enumeration refused: n=" + std::to_string(n) +
                          " exceeds guard " + std::to_string(guard));
    // Restricted growth strings: rgs[0]=0, rgs[i] <= max(rgs[0..i-1])+1.
    std::vector<SetPartition> out;
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    auto emit = [&] {
        int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
        for (int x = 1; x <= n; ++x) blocks[static_cast<size_t>(rgs[static_cast<size_t>(x - 1)])].push_back(x);
        out.emplace_back(n, std::move(blocks));
    };
    auto rec = [&](auto&& self, int i, int mx) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            rgs[static_cast<size_t>(i)] = v;
            self(self, i + 1, std::max(mx, v));
        }
    };
    rec(rec, 1, 0);
    return out;
}

ConvexPartition::ConvexPartition(int n, std::vector<int> right_ends)
    : n_(n), right_ends_(std::move(right_ends)) {
    require(n >= 1, "convex partition: n must be positive");
    require(!right_ends_.empty() && right_ends_.back() == n,
            "convex partition: right ends must end at n");
    for (size_t i = 1; i < right_ends_.size(); ++i)
        require(right_ends_[i - 1] < right_ends_[i],
                "convex partition: right ends must increase strictly");
    require(right_ends_.front() >= 1, "convex partition: right ends must start at >= 1");
}

ConvexPartition ConvexPartition::singletons(int n) {
    std::vector<int> re(static_cast<size_t>(n));
    std::iota(re.begin(), re.end(), 1);
    return ConvexPartition(n, std::move(re));
}

ConvexPartition ConvexPartition::one_block(int n) { return ConvexPartition(n, {n}); }

ConvexPartition ConvexPartition::from_cut_mask(int n, std::uint32_t mask) {
    std::vector<int> re;
    for (int i = 1; i < n; ++i)
        if (mask & (1u << (i - 1))) re.push_back(i);
    re.push_back(n);
    return ConvexPartition(n, std::move(re));
}

std::pair<int, int> ConvexPartition::block(int i) const {
    require(0 <= i && i < block_count(), "block: index out of range");
    int lo = i == 0 ? 1 : right_ends_[static_cast<size_t>(i - 1)] + 1;
    return {lo, right_ends_[static_cast<size_t>(i)]};
}

int ConvexPartition::block_index_of(int x) const {
    require(1 <= x && x <= n_, "block_index_of: point outside 1..n");
    auto it = std::lower_bound(right_ends_.begin(), right_ends_.end(), x);
    return static_cast<int>(it - right_ends_.begin());
}

std::uint32_t ConvexPartition::cut_mask() const {
    std::uint32_t mask = 0;
    for (int e : right_ends_)
        if (e < n_) mask |= 1u << (e - 1);
    return mask;
}

SetPartition ConvexPartition::as_set_partition() const {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < block_count(); ++i) {
        auto [lo, hi] = block(i);
        std::vector<int> b;
        for (int x = lo; x <= hi; ++x) b.push_back(x);
        blocks.push_back(std::move(b));
    }
    return SetPartition(n_, std::move(blocks));
}

std::vector<ConvexPartition> ConvexPartition::all(int n) {
    if (n > 30) throw guard_error("convex partition enumeration refused: n too large");
    std::vector<ConvexPartition> out;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask)
        out.push_back(from_cut_mask(n, mask));
    std::sort(out.begin(), out.end(), [](const ConvexPartition& a, const ConvexPartition& b) {
        if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
        return a.right_ends() < b.right_ends();
    });
    return out;
}

std::ostream& operator<<(std::ostream& os, const ConvexPartition& p) {
    for (int i = 0; i < p.block_count(); ++i) {
        auto [lo, hi] = p.block(i);
        os << '{';
        for (int x = lo; x <= hi; ++x) os << x;
        os << '}';
    }
    return os;
}

bool green_related(const Transformation& a, const Transformation& b, Green rel) {
    if (a.n() != b.n()) throw domain_error("green_related: domain sizes differ");
    switch (rel) {
        case Green::R: return a.kernel() == b.kernel();
        case Green::L: return a.image() == b.image();
        case Green::H: return a.kernel() == b.kernel() && a.image() == b.image();
        case Green::D: return a.rank() == b.rank();
    }
    throw domain_error("green_related: unknown relation");
}

OnStream::OnStream(int n, const EnumerationLimits& limits) : n_(n), done_(false) {
    if (n < 1 || n > limits.max_on_n)
        throw guard_error("enumerate_On refused: n=" + std::to_string(n) + " outside 1.." +
                          std::to_string(limits.max_on_n));
    current_.assign(static_cast<size_t>(n), 1);
}

bool OnStream::next(Transformation& out) {
    if (done_) return false;
    out = Transformation(n_, current_);
    // Advance to the next nondecreasing sequence in lexicographic order.
    int i = n_ - 1;
    while (i >= 0 && current_[static_cast<size_t>(i)] == n_) --i;
    if (i < 0) {
        done_ = true;
        return true;
    }
    int v = current_[static_cast<size_t>(i)] + 1;
    for (int j = i; j < n_; ++j) current_[static_cast<size_t>(j)] = v;
    return true;
}

std::vector<Transformation> enumerate_On(int n, const EnumerationLimits& limits) {
    OnStream stream(n, limits);
    std::vector<Transformation> out;
    Transformation t = Transformation::identity(n);
    while (stream.next(t)) out.push_back(t);
    return out;
}

long long count_On(int n) {
    // Nondecreasing sequences of length n over 1..n, counted by dynamic
    // programming over (position, last value).
    std::vector<long long> row(static_cast<size_t>(n), 1);  // length 1, last = v
    for (int len = 2; len <= n; ++len) {
        std::vector<long long> next(static_cast<size_t>(n), 0);
        long long prefix = 0;
        for (int v = 0; v < n; ++v) {
            prefix += row[static_cast<size_t>(v)];
            next[static_cast<size_t>(v)] = prefix;
        }
        row = std::move(next);
    }
    long long total = 0;
    for (long long c : row) total += c;
    return total;
}

Transformation higgins_dual(const Transformation& a) {
    if (!a.is_order_preserving()) throw domain_error("higgins_dual: map is not order-preserving");
    const int n = a.n();
    ConvexPartition ker = a.convex_kernel();
    const int t = ker.block_count();
    std::vector<int> k(static_cast<size_t>(t)), r(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) {
        k[static_cast<size_t>(i)] = ker.block(i).second;  // block maxima, ascending
        r[static_cast<size_t>(i)] = a.apply(k[static_cast<size_t>(i)]);
    }
    std::vector<int> im(static_cast<size_t>(n) + 1);
    for (int x = 1; x <= n + 1; ++x) {
        int y;
        if (x <= r[0]) {
            y = 1;
        } else if (x > r[static_cast<size_t>(t - 1)]) {
            y = n + 1;
        } else {
            y = 0;
            for (int i = 0; i + 1 < t; ++i) {
                if (r[static_cast<size_t>(i)] < x && x <= r[static_cast<size_t>(i + 1)]) {
                    y = k[static_cast<size_t>(i)] + 1;
                    break;
                }
            }
        }
        im[static_cast<size_t>(x - 1)] = y;
    }
    return Transformation(n + 1, std::move(im));
}

}  // namespace oncross
