#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wl/cfi.hpp"
#include "wl/fp.hpp"
#include "wl/mekler.hpp"

namespace wl {

/// A CFI graph pair over one 3-regular base together with the groups built
/// on both sides and the free group on the shared vertex set. The two edge
/// sets differ exactly in the designated link.
struct CfiGroupPair {
  Graph base;
  std::uint32_t p = 3;
  int designated_edge = 0;  // index into base.edges()
  CfiGraph cfi1, cfi2;      // untwisted / twisted at the designated edge
  MeklerGroup group1, group2;
  MeklerGroup free_group;  // edgeless graph on the CFI vertex set

  static CfiGroupPair build(const Graph& base, std::uint32_t p, int designated_edge = 0);
};

/// The coordinate involution induced by twisting one base edge (V,W),
/// V < W: in every normal form the commutator coordinates [a_V,a_W] and
/// [a_V,b_W] swap, as do [b_V,b_W] and [b_V,a_W]. Generator exponents are
/// untouched.
MeklerElement twist_map(const CfiGroupPair& pair, const MeklerElement& x, int base_edge);
std::vector<MeklerElement> twist_map(const CfiGroupPair& pair,
                                     const std::vector<MeklerElement>& tuple, int base_edge);

/// An element of the gadget-automorphism group A: a permutation of the CFI
/// vertex set fixing every gadget setwise.
struct GadgetTwist {
  std::vector<int> perm;
};

/// Generator of A at one gadget: swaps the a/b sides of two incident links
/// and flips the matching internal bits.
GadgetTwist link_twist_generator(const CfiGraph& cfi, int base_vertex, int edge1, int edge2);

GadgetTwist compose(const GadgetTwist& f, const GadgetTwist& g);  // f after g

/// Composite of link-twist generators along a breadth-first base-graph path
/// carrying the twist from base_edge to the pair's designated edge; maps the
/// base_edge-twisted edge set onto the pair's twisted side.
GadgetTwist sigma_for_edge(const CfiGroupPair& pair, int base_edge);

/// Permutes generator coordinates by sigma and commutator coordinates by the
/// induced pair permutation with sign flips where the pair order reverses.
MeklerElement apply_gadget_twist(const MeklerGroup& free_group, const GadgetTwist& sigma,
                                 const MeklerElement& x);
std::vector<MeklerElement> apply_gadget_twist(const MeklerGroup& free_group,
                                              const GadgetTwist& sigma,
                                              const std::vector<MeklerElement>& tuple);

/// (k, rank, canonical row kernel) of the tuple's exterior-square matrix with
/// the given columns zeroed. Equal certificates mean the quotient subgroups
/// have identical presentations.
struct SubgroupCertificate {
  int k = 0;
  std::size_t rank = 0;
  FpMatrix kernel;
  bool operator==(const SubgroupCertificate&) const = default;
};

SubgroupCertificate subgroup_certificate(const MeklerGroup& free_group,
                                         const std::vector<MeklerElement>& tuple,
                                         const std::vector<std::pair<int, int>>& edges_to_zero);

/// First base edge e for which zeroing the untwisted edge set and zeroing the
/// e-twisted edge set give the same column space on the tuple's
/// exterior-square matrix.
std::optional<int> twist_edge_search(const CfiGroupPair& pair,
                                     const std::vector<MeklerElement>& tuple);

/// End-to-end check of the subgroup transfer: search an edge, carry the tuple
/// through the twist and the gadget adjustment, and compare certificates
/// against both sides' edge sets.
struct PipelineCheck {
  bool edge_found = false;
  int edge = -1;
  bool certificates_equal = false;
};
PipelineCheck phi_pipeline_check(const CfiGroupPair& pair, const std::vector<MeklerElement>& tuple);

/// Centralizer-cardinality checks in a group over a 3-regular CFI graph:
/// every vertex generator must have |C(v)|/|Z| = p^4, and sampled elements
/// with support >= 2 must have ratio at most p^3.
struct CentralizerProfileReport {
  int vertices_checked = 0;
  int vertex_violations = 0;
  int samples_checked = 0;
  int sample_violations = 0;
  bool ok() const { return vertex_violations == 0 && sample_violations == 0; }
};
CentralizerProfileReport centralizer_profile_check(const MeklerGroup& g, int samples,
                                                   std::uint64_t seed = 0x5eed);

/// The parity discriminator: evaluates the invariant on both sides (any
/// internal choice; it is choice-independent) and reports the witness bits.
struct CfiGroupVerdict {
  bool distinguished = false;
  int bit1 = 0, bit2 = 0;
};
CfiGroupVerdict distinguish_cfi_groups(const CfiGroupPair& pair);

}  // namespace wl
