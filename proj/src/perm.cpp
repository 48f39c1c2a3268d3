#include "quandle/perm.hpp"

#include <stdexcept>

#include "quandle/errors.hpp"

namespace quandle {

Perm::Perm(std::vector<Elem> images) : images_(std::move(images)) {
    const std::size_t n = images_.size();
    std::vector<bool> seen(n, false);
    for (Elem v : images_) {
        if (v >= n || seen[v])
            throw std::invalid_argument("permutation image array is not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(std::size_t n) {
    std::vector<Elem> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Elem>(i);
    return Perm(std::move(m));
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Perm compose(const Perm& f, const Perm& g) {
    if (f.size() != g.size())
        throw size_mismatch_error("compose: permutation orders differ");
    std::vector<Elem> m(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) m[x] = f(g(x));
    return Perm(std::move(m));
}

Perm inverse(const Perm& f) {
    std::vector<Elem> m(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) m[f(x)] = static_cast<Elem>(x);
    return Perm(std::move(m));
}

}  // namespace quandle
