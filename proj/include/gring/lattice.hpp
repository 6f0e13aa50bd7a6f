#pragma once
#include "gring/group_ring.hpp"
#include "gring/normal_form.hpp"

#include <vector>

namespace gring {

/* Finitely generated Z-submodule of Z^n closed under a right Lambda-action.
 * Basis vectors are rows; act_x / act_y multiply ambient row vectors on the
 * right and satisfy act_y*act_x = act_x^m*act_y (they are the action of the
 * group generators, so g |-> act(g) is a homomorphism for the right action). */
struct Lattice {
    GroupParams params;
    IntMatrix basis;
    IntMatrix act_x, act_y;

    std::size_t ambient_dim() const { return act_x.rows(); }
    std::size_t rank() const { return basis.rows(); }

    Lattice with_basis(IntMatrix b) const { return {params, std::move(b), act_x, act_y}; }
};

/* Ambient action of the group element x^a y^b (row convention). */
IntMatrix group_action_matrix(const Lattice& lat, GroupElem g);

/* Rows v*act(g) for every g in G, in canonical index order. */
IntMatrix orbit_matrix(const Lattice& lat, const std::vector<Int>& v);

/* Z-span of the Lambda-orbit of v: the sublattice [v). */
IntMatrix orbit_span(const Lattice& lat, const std::vector<Int>& v);

/* Does v generate lat over Lambda? ([v) equals the lattice.) */
bool generates_lattice(const Lattice& lat, const std::vector<Int>& v);

/* basis*act_x and basis*act_y stay inside the row lattice of basis. */
bool closed_under_action(const Lattice& lat);

/* Lambda itself as a lattice: ambient Z^{p(p-1)}, right regular action. */
Lattice regular_lattice(const GroupParams& P);

/* Z-basis (HNF rows) of the right ideal sum gens*Lambda, with the regular
 * right action attached; computed as the span of {gen*g : g in G}. */
Lattice ideal_lattice(const std::vector<RingElem>& gens);

} // namespace gring
