#pragma once

#include <string>
#include <vector>

#include "sw/group.hpp"

namespace sw {

// stabilizer of a quadratic form polarizing to the standard symplectic form;
// type +1 (Witt index n) or -1
Group orthogonal_subgroup(const Group& G, int type);

// stabilizer of the nondegenerate subspace spanned by the first k hyperbolic
// pairs: Sp_{2k}(q) x Sp_{2n-2k}(q)
Group nondegenerate_stabilizer(const Group& G, int k);

// Sp_2(q) wr S_n: the stabilizer of the standard hyperbolic-pair
// decomposition, built from explicit generators
Group sp2_wreath(const Group& G);

// matrix of a permutation of 6 points acting on the 4-dimensional
// even-weight-mod-diagonal module of S_6, in the standard symplectic basis
// of Sp_4(2); the map is an isomorphism S_6 -> Sp_4(2)
Mat s6_perm_matrix(const Group& sp42, const std::vector<int>& perm);

// search for a subgroup of the given order generated by one element of
// order o1 and one of order o2 (deterministic scan; used for G_2(2))
std::vector<Mat> find_subgroup_generators(const Group& G, uint64_t target_order, uint32_t o1,
                                          uint32_t o2);

// SL_2(8).3 inside Sp_6(2) through the GF(8)-structure of F_2^6
std::vector<Mat> l2_8_3_generators(const Group& sp62);

// named construction registry; file-backed names load from data_dir()/gens
Group build_named_subgroup(const Group& G, const std::string& name);
std::vector<std::string> known_subgroup_names(const Group& G);

}  // namespace sw
