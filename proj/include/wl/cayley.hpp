#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wl/hash.hpp"

namespace wl {

/// Finite group as an explicit multiplication table. Construction validates
/// the axioms (Light's test for associativity), so a constructed value is
/// always a group.
class CayleyGroup {
 public:
  static CayleyGroup from_table(int n, std::vector<int> table);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int identity() const { return id_; }
  int inverse(int a) const { return inv_[a]; }
  int conjugate(int a, int x) const { return mul(mul(x, a), inv_[x]); }  // x a x^-1
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv_[a], inv_[b])); }
  int element_order(int a) const;
  int power(int a, long long e) const;
  const std::vector<int>& table() const { return table_; }

 private:
  CayleyGroup() = default;
  int n_ = 0;
  std::vector<int> table_;
  int id_ = 0;
  std::vector<int> inv_;
};

// --- constructors for the test corpus ---
CayleyGroup cyclic_group(int n);
CayleyGroup direct_product(const CayleyGroup& g, const CayleyGroup& h);
CayleyGroup dihedral_group(int n);   // order 2n, n >= 1
CayleyGroup quaternion8();
/// Extraspecial group of order p^3 and exponent p (p an odd prime):
/// triples (a,b,c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
CayleyGroup heisenberg_group(std::uint32_t p);

// --- structural invariants, all by direct table computation ---
std::vector<int> center(const CayleyGroup& g);
std::vector<int> centralizer(const CayleyGroup& g, int x);
std::vector<int> derived_subgroup(const CayleyGroup& g);
std::vector<int> conjugacy_class_sizes(const CayleyGroup& g);  // sorted ascending
int exponent(const CayleyGroup& g);
/// Nilpotency class via the lower central series; nullopt if not nilpotent.
std::optional<int> nilpotency_class(const CayleyGroup& g);

/// Least subset containing the tuple and the identity, closed under products.
std::vector<int> subgroup_closure(const CayleyGroup& g, const std::vector<int>& tuple);

/// Smallest generating tuple found by greedy closure growth (deterministic).
std::vector<int> greedy_generating_tuple(const CayleyGroup& g);

/// Certificate of the marked isomorphism type of <tuple>: the multiplication
/// table of the generated subgroup re-indexed by a breadth-first discovery
/// order (identity, then g_1..g_k, then products in scan order, each
/// left-multiplied by the generators in tuple order). Two tuples get equal
/// certificates exactly when g_i -> h_i extends to an isomorphism of the
/// generated subgroups.
struct MarkedCertificate {
  int k = 0;
  int order = 0;
  std::vector<int> gen_pos;
  std::vector<int> table;
  auto operator<=>(const MarkedCertificate&) const = default;
  Digest128 digest() const;
};

MarkedCertificate marked_certificate(const CayleyGroup& g, const std::vector<int>& tuple);

/// The discovery order underlying marked_certificate (element ids of g).
std::vector<int> certificate_discovery_order(const CayleyGroup& g, const std::vector<int>& tuple);

enum class OracleStatus { found, none, budget };

struct GroupIsoResult {
  OracleStatus status = OracleStatus::none;
  std::vector<int> mapping;  // element of g -> element of h, valid iff found
};

/// Backtracking isomorphism search: greedy generating tuple for g, candidate
/// images in h pruned by element invariants and partial marked certificates.
/// Returned maps are verified multiplicative on all pairs.
GroupIsoResult group_iso_oracle(const CayleyGroup& g, const CayleyGroup& h,
                                std::uint64_t budget = 2'000'000);

struct ProfileResult {
  OracleStatus status = OracleStatus::none;
  /// One canonical certificate per distinct k-generated subgroup (the minimum
  /// marked certificate over its generating k-tuples), sorted; a multiset
  /// over subgroups.
  std::vector<MarkedCertificate> certificates;
};

ProfileResult profile(const CayleyGroup& g, int k, std::uint64_t tuple_budget = 40'000'000);

/// Table text format: first line n, then n rows of n indices; element 0 is
/// the identity (writer relabels if needed, reader rejects violations).
CayleyGroup read_cayley(std::istream& in);
void write_cayley(std::ostream& out, const CayleyGroup& g);
CayleyGroup read_cayley_file(const std::string& path);

std::string group_invariants_json(const CayleyGroup& g);

}  // namespace wl
