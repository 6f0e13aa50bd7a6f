#include "gring/lattice.hpp"

#include <stdexcept>

namespace gring {

IntMatrix group_action_matrix(const Lattice& lat, GroupElem g) {
    IntMatrix A = IntMatrix::identity(lat.ambient_dim());
    for (int i = 0; i < g.a; ++i) A = A * lat.act_x;
    for (int i = 0; i < g.b; ++i) A = A * lat.act_y;
    return A;
}

IntMatrix orbit_matrix(const Lattice& lat, const std::vector<Int>& v) {
    const GroupParams& P = lat.params;
    const std::size_t n = lat.ambient_dim();
    IntMatrix O(static_cast<std::size_t>(P.order()), n);
    // walk b-major, applying act_y between x-blocks
    std::vector<Int> vy = v;
    for (int b = 0; b < P.p - 1; ++b) {
        std::vector<Int> w = vy;
        for (int a = 0; a < P.p; ++a) {
            O.set_row(elem_index(P, {a, b}), w);
            w = w * lat.act_x;
        }
        vy = vy * lat.act_y;
    }
    return O;
}

IntMatrix orbit_span(const Lattice& lat, const std::vector<Int>& v) {
    return hnf_basis(orbit_matrix(lat, v));
}

bool generates_lattice(const Lattice& lat, const std::vector<Int>& v) {
    return lattice_equal(orbit_span(lat, v), lat.basis);
}

bool closed_under_action(const Lattice& lat) {
    return lattice_subset(lat.basis * lat.act_x, lat.basis) &&
           lattice_subset(lat.basis * lat.act_y, lat.basis);
}

Lattice regular_lattice(const GroupParams& P) {
    return {P, IntMatrix::identity(static_cast<std::size_t>(P.order())),
            right_mul_matrix(RingElem::x_pow(P, 1)), right_mul_matrix(RingElem::y_pow(P, 1))};
}

Lattice ideal_lattice(const std::vector<RingElem>& gens) {
    if (gens.empty()) throw std::invalid_argument("ideal_lattice: no generators");
    const GroupParams& P = gens.front().params();
    const std::size_t n = static_cast<std::size_t>(P.order());
    IntMatrix rows(n * gens.size(), n);
    std::size_t r = 0;
    for (const RingElem& gen : gens) {
        if (!(gen.params() == P)) throw std::invalid_argument("ideal_lattice: params mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            GroupElem g = elem_at(P, i);
            RingElem prod = ring_mul(gen, RingElem::monomial(P, g.a, g.b));
            for (std::size_t j = 0; j < n; ++j) rows(r, j) = prod[j];
            ++r;
        }
    }
    Lattice amb = regular_lattice(P);
    return {P, hnf_basis(rows), amb.act_x, amb.act_y};
}

} // namespace gring
