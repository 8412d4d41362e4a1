#ifndef CCX_FOURIER_MOTZKIN_HPP
#define CCX_FOURIER_MOTZKIN_HPP

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccx/polyhedron.hpp"

namespace ccx {

/// Thrown when an intermediate Fourier-Motzkin system outgrows the cap set
/// by CCX_MAX_FM_CONSTRAINTS (default 4096). The CLI maps this to exit 3.
class FmCapExceeded : public std::runtime_error {
  public:
    explicit FmCapExceeded(std::size_t count, std::size_t cap)
        : std::runtime_error("fourier-motzkin: " + std::to_string(count) +
                             " constraints exceed cap " + std::to_string(cap)) {}
};

inline std::size_t fm_constraint_cap() {
    if (const char* env = std::getenv("CCX_MAX_FM_CONSTRAINTS")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 4096;
}

namespace detail {

/// One Fourier-Motzkin step: eliminates coordinate k exactly. A combined
/// row is strict iff any combined parent is strict. Redundancy is pruned
/// right away to keep the doubly exponential growth at desk scale.
inline HPolyhedron fm_eliminate_one(const HPolyhedron& P, std::size_t k) {
    const std::size_t cap = fm_constraint_cap();
    std::vector<const Constraint*> pos, neg;
    std::vector<Constraint> out;
    auto drop_coord = [&](const QVector& a) {
        QVector r;
        r.reserve(a.size() - 1);
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != k) r.push_back(a[j]);
        return r;
    };
    for (const auto& c : P.constraints()) {
        int s = sign(c.a[k]);
        if (s > 0)
            pos.push_back(&c);
        else if (s < 0)
            neg.push_back(&c);
        else
            out.push_back({drop_coord(c.a), c.b, c.strict});
    }
    for (const auto* p : pos) {
        for (const auto* n : neg) {
            const Rational cp = p->a[k];
            const Rational cn = n->a[k];
            QVector a(P.dim() - 1);
            QVector pa = drop_coord(p->a), na = drop_coord(n->a);
            for (std::size_t j = 0; j + 1 < P.dim(); ++j) a[j] = cp * na[j] - cn * pa[j];
            Rational b = cp * n->b - cn * p->b;
            out.push_back({std::move(a), b, p->strict || n->strict});
            if (out.size() > cap) throw FmCapExceeded(out.size(), cap);
        }
    }
    return irredundant(HPolyhedron(P.dim() - 1, std::move(out)));
}

} // namespace detail

/// Exact projection onto the coordinates outside `drop`; redundant rows are
/// removed via LP after every elimination step.
inline HPolyhedron eliminate_variables(const HPolyhedron& P, std::vector<std::size_t> drop) {
    std::sort(drop.begin(), drop.end());
    if (std::adjacent_find(drop.begin(), drop.end()) != drop.end())
        throw std::invalid_argument("eliminate_variables: duplicate index");
    if (!drop.empty() && drop.back() >= P.dim())
        throw std::invalid_argument("eliminate_variables: index out of range");
    if (drop.empty()) return irredundant(P);
    HPolyhedron cur = P;
    for (std::size_t i = drop.size(); i-- > 0;) cur = detail::fm_eliminate_one(cur, drop[i]);
    return cur;
}

/// Projection dropping a contiguous coordinate block [begin, begin+count).
inline HPolyhedron eliminate_block(const HPolyhedron& P, std::size_t begin, std::size_t count) {
    std::vector<std::size_t> drop(count);
    for (std::size_t i = 0; i < count; ++i) drop[i] = begin + i;
    return eliminate_variables(P, std::move(drop));
}

} // namespace ccx

#endif
