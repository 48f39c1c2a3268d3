#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace quandle {

/// Element index in 0..n-1. Orders are small (the CLI caps at 64 by
/// default) but the type leaves headroom for library use.
using Elem = std::uint16_t;

/// A bijection on 0..n-1, stored as its image array.
class Perm {
public:
    /// Validates that `images` is a bijection; throws std::invalid_argument otherwise.
    explicit Perm(std::vector<Elem> images);

    static Perm identity(std::size_t n);

    std::size_t size() const { return images_.size(); }
    Elem operator()(std::size_t x) const { return images_[x]; }
    std::span<const Elem> images() const { return images_; }

    bool is_identity() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    /// Lexicographic order on image arrays (used for deterministic dedup).
    friend auto operator<=>(const Perm& a, const Perm& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<Elem> images_;
};

/// h(x) = f(g(x)): the right factor is applied first, so a product written
/// phi*lambda is realized as compose(phi, lambda).
Perm compose(const Perm& f, const Perm& g);

Perm inverse(const Perm& f);

}  // namespace quandle
