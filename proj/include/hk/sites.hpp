#pragma once

#include <map>
#include <memory>

#include "hk/homotopy.hpp"

namespace hk {

// ---------------------------------------------------------------------------------------------
// Finite skeletons of Noy(a).

/// A finite table category whose objects are chosen Noy objects f: X0 -> X1, with homs Noy(f, g)
/// in the representative bases of noy_hom.
struct NoySkeleton {
  std::unique_ptr<TableCategory> category;
  std::vector<Morphism> objects;
  std::vector<bool> n_image;  // f = N A, i.e. f has zero target
  std::map<std::pair<ObjectId, ObjectId>, NoyHom> homs;
  /// Representative α of basis element i of hom(s, t).
  Morphism representative(ObjectId s, ObjectId t, std::size_t i) const;
};

/// Basis names default to "S>T#i"; names[(s, t)] overrides them.
NoySkeleton build_noy_skeleton(const Category& c, const std::vector<std::pair<std::string, Morphism>>& objects,
                               const std::map<std::pair<ObjectId, ObjectId>, std::vector<std::string>>& names = {});
/// The skeleton {P = N R, L = (x: R -> R)} of Noy(R-free) for the dual numbers, with bases
/// id_P, x (End P), ι (L -> P), π (P -> L), id_L.
NoySkeleton dual_number_noy_skeleton(const TableCategory& dual_numbers);

/// vec θ on a skeleton: f ↦ ker θ(f), morphisms by the induced maps.
std::unique_ptr<TableFunctor> vec_theta_functor(const Functor& th, const NoySkeleton& s);

// ---------------------------------------------------------------------------------------------
// Sieves: for each object Y a subspace of hom(Y, X) closed under precomposition.

struct Sieve {
  ObjectId root = 0;
  std::vector<Matrix> components;  // canonical column bases in hom(Y, root), indexed by Y
  std::size_t total_dim() const;
  std::vector<std::size_t> dims() const;
  std::string key() const;
};

Sieve zero_sieve(const Category& c, ObjectId x);
Sieve maximal_sieve(const Category& c, ObjectId x);
bool is_sieve(const Category& c, const Sieve& s);
bool sieve_less_equal(const Sieve& a, const Sieve& b);
bool sieve_equal(const Sieve& a, const Sieve& b);
/// Smallest sieve containing the generators (morphisms into x from any direct sum).
Sieve sieve_closure(const Category& c, ObjectId x, const std::vector<Morphism>& generators);
/// h^*S on Y for h: Y -> X: component at Z is {g : h∘g ∈ S(Z)}.
Sieve pullback_sieve(const Category& c, const Sieve& s, const Morphism& h);
/// Sieve components written with basis names.
std::string describe_sieve(const Category& c, const Sieve& s);

/// All sieves on every object, ordered by total dimension then key. The skeleton must consist of
/// pairwise non-isomorphic objects with split local endomorphism rings. Over Q a layer with an
/// infinite family of sieves is an error; over F_p all lines are enumerated.
struct SieveLattice {
  std::vector<std::vector<Sieve>> sieves;  // per object
  std::size_t find(const Sieve& s) const;  // index in sieves[s.root]; throws if absent
  std::optional<std::size_t> lookup(const Sieve& s) const;
  std::vector<std::map<std::string, std::size_t>> index;
};
SieveLattice enumerate_sieves(const Category& c, std::size_t limit = 4096);

/// Covering sieves per object, as indices into the lattice.
struct TopologyTable {
  std::vector<std::vector<std::size_t>> covering;
  std::string label;
  /// Minimal covering sieve on each object.
  std::vector<std::size_t> minimal(const SieveLattice& l) const;
};
bool operator==(const TopologyTable& a, const TopologyTable& b);

/// Maximality, pullback stability and local character; the first failure goes to why.
bool is_topology(const Category& c, const SieveLattice& l, const TopologyTable& t, std::string* why = nullptr);

struct TopologyCensus {
  SieveLattice lattice;
  std::size_t candidates = 0;
  std::vector<TopologyTable> topologies;  // labelled R0, R1, ... in order
};
/// Upward-closed families containing the maximal sieves, filtered by the axioms, ordered by the
/// total dimensions of the minimal covering sieves (object by object) and labelled R0, R1, ...
TopologyCensus enumerate_topologies(const Category& c, std::size_t limit = 4096);
/// Index of the topology with the same covering families.
std::optional<std::size_t> match_topology(const TopologyCensus& census, const TopologyTable& t);

/// T_θ: a sieve covers X iff the images θ(s) for s in the sieve jointly span θ(X).
TopologyTable topology_of_functor(const Functor& th, const SieveLattice& l);

/// HT_θ = T_{vec θ} on a Noy skeleton, located in the census.
struct HomologicalTopology {
  TopologyTable table;
  std::optional<std::size_t> index;
  std::string label;  // census label or "not a topology"
};
HomologicalTopology homological_topology(const Functor& th, const NoySkeleton& s, const TopologyCensus& census);

/// R_f: the sieve on f generated by all morphisms N Y -> f from N-image objects.
Sieve canonical_sieve_Rf(const NoySkeleton& s, ObjectId f);
/// R_f covers f in t for every skeleton object f.
bool iota_image_test(const NoySkeleton& s, const SieveLattice& l, const TopologyTable& t);

}  // namespace hk
