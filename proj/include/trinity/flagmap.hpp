#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "trinity/psl2.hpp"

namespace trinity {

/// A regular map presented on its flag set: three involutory fixed-point-free
/// flag permutations with perm_x and perm_y commuting, acting connectedly.
/// Flags of a map built from a group are the group elements themselves and
/// the permutations are right multiplications by x, y, z.
struct RegularMap {
    std::vector<std::uint32_t> perm_x, perm_y, perm_z;
    std::uint32_t base_flag = 0;
    /// True when regularity is guaranteed by construction (right regular
    /// action of a group on itself); otherwise is_isomorphic_pointed runs the
    /// all-basepoint regularity scan first.
    bool regular_certified = false;

    std::size_t size() const { return perm_x.size(); }
};

struct MapInvariants {
    std::uint64_t V = 0, E = 0, F = 0;
    std::int64_t chi = 0;
    std::uint64_t type_k = 0, type_l = 0;
    std::uint64_t petrie_len = 0;
    bool orientable = false;

    bool operator==(const MapInvariants&) const = default;
};

/// Validates the flag axioms (involutory, fixed-point-free, commuting x/y,
/// connected, |flags| divisible by 4) and returns the map.  `certified`
/// records that the permutations come from a group acting on itself.
RegularMap map_from_perms(std::vector<std::uint32_t> px, std::vector<std::uint32_t> py,
                          std::vector<std::uint32_t> pz, std::uint32_t base, bool certified);

/// Flags = group elements of the enumerated table; permutations are right
/// multiplication by x, y, z (which must lie in the group).  The permutation
/// build is the data-parallel kernel; the serial flavor is the reference.
RegularMap from_group_triple(const GroupTable& table, const InvolutionTriple& t);
RegularMap from_group_triple_serial(const GroupTable& table, const InvolutionTriple& t);

/// Orbit counts of the three dihedral subgroups (vertices, edges, faces),
/// Euler characteristic, type, Petrie length, orientability.
MapInvariants invariants(const RegularMap& m);

/// Swaps the roles of vertices and faces: triple (y, x, z).
RegularMap dual(const RegularMap& m);

/// Re-embeds along zig-zag walks: triple (xy, y, z).
RegularMap petrie(const RegularMap& m);

/// Exact decision for regular maps: propagates base_flag -> base_flag along
/// the three colors; regularity makes the single trial conclusive.
/// Throws input_error when an input map is not regular.
bool is_isomorphic_pointed(const RegularMap& m1, const RegularMap& m2);

/// (self_dual, self_petrie).
std::pair<bool, bool> trinity_check(const RegularMap& m);

/// All-basepoint scan certifying that the automorphism group is transitive
/// on flags.  Parallel over basepoints; serial flavor kept as reference.
bool verify_regularity(const RegularMap& m);
bool verify_regularity_serial(const RegularMap& m);

/// DOT export of the 3-edge-colored flag graph (edge attribute color=x|y|z).
void write_flag_graph_dot(const RegularMap& m, std::ostream& os);

} // namespace trinity
