#include "quandle/constructions.hpp"

#include <string>

#include "quandle/errors.hpp"
#include "quandle/translations.hpp"

namespace quandle {
namespace {

void require_group(const Table& g, Elem e, const char* who) {
    const std::size_t n = g.order();
    if (e >= n) throw not_group_error(std::string(who) + ": identity out of range");
    if (!is_latin(g)) throw not_group_error(std::string(who) + ": table is not latin");
    for (std::size_t x = 0; x < n; ++x)
        if (g.at(e, x) != x || g.at(x, e) != x)
            throw not_group_error(std::string(who) + ": " + std::to_string(e) +
                                  " is not a two-sided identity");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (g.at(g.at(x, y), z) != g.at(x, g.at(y, z)))
                    throw not_group_error(std::string(who) + ": associativity fails");
}

std::vector<Elem> group_inverses(const Table& g, Elem e) {
    const std::size_t n = g.order();
    std::vector<Elem> inv(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (g.at(x, y) == e) inv[x] = static_cast<Elem>(y);
    return inv;
}

}  // namespace

Table cyclic_group(std::size_t n) {
    if (n == 0) throw precondition_error("cyclic_group: order must be at least 1");
    std::vector<Elem> cells(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            cells[x * n + y] = static_cast<Elem>((x + y) % n);
    return Table(n, std::move(cells));
}

Table elementary_abelian_3(std::size_t k) {
    if (k == 0) throw precondition_error("elementary_abelian_3: k must be at least 1");
    if (k > 6) throw too_large_error("elementary_abelian_3: 3^k exceeds cap of 729");
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) n *= 3;

    auto add = [k](std::size_t x, std::size_t y) {
        std::size_t out = 0, place = 1;
        for (std::size_t d = 0; d < k; ++d) {
            out += ((x % 3 + y % 3) % 3) * place;
            x /= 3; y /= 3; place *= 3;
        }
        return out;
    };
    std::vector<Elem> cells(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            cells[x * n + y] = static_cast<Elem>(add(x, y));
    return Table(n, std::move(cells));
}

Table core(const Table& g, Elem e, CoreSide side) {
    require_group(g, e, "core");
    const std::size_t n = g.order();
    const std::vector<Elem> inv = group_inverses(g, e);
    std::vector<Elem> cells(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            cells[x * n + y] = side == CoreSide::left
                                   ? g.at(g.at(x, inv[y]), x)    // x y^-1 x
                                   : g.at(g.at(y, inv[x]), y);   // y x^-1 y
    return Table(n, std::move(cells));
}

Table build_from_left_translations(const Table& g, Elem e) {
    require_group(g, e, "build_from_left_translations");
    const std::size_t n = g.order();
    const Perm L = left_translation(g, e);
    const Perm lam = left_middle(g, e);
    std::vector<Elem> cells(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            cells[x * n + y] = g.at(g.at(L(x), lam(y)), x);
    return Table(n, std::move(cells));
}

Table build_from_right_translations(const Table& g, Elem e) {
    require_group(g, e, "build_from_right_translations");
    const std::size_t n = g.order();
    const Perm R = right_translation(g, e);
    const Perm phi = right_middle(g, e);
    std::vector<Elem> cells(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            cells[x * n + y] = g.at(g.at(R(y), phi(x)), y);
    return Table(n, std::move(cells));
}

Table build_ipq(const Table& g, Elem e) {
    require_group(g, e, "build_ipq");
    const std::size_t n = g.order();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (g.at(x, y) != g.at(y, x))
                throw precondition_error("build_ipq: group is not commutative (" +
                                         std::to_string(x) + "*" + std::to_string(y) + ")");
    // order must be a power of 3
    std::size_t m = n;
    while (m % 3 == 0) m /= 3;
    if (m != 1)
        throw precondition_error("build_ipq: order " + std::to_string(n) +
                                 " is not a power of 3");
    // exponent 3: x*x*x = e for every x
    for (std::size_t x = 0; x < n; ++x)
        if (g.at(g.at(x, x), x) != e)
            throw precondition_error("build_ipq: element " + std::to_string(x) +
                                     " does not have order dividing 3 (exponent != 3)");

    const Perm L = left_translation(g, e);
    const Perm lam = left_middle(g, e);
    std::vector<Elem> cells(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            cells[x * n + y] = g.at(g.at(x, lam(y)), L(x));
    return Table(n, std::move(cells));
}

}  // namespace quandle
