#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace umbra {

// Multiplication table of a finite group; element 0 is the identity.
struct GroupTable {
  std::vector<std::vector<int>> mult;
  int order() const { return int(mult.size()); }
  int inverse(int g) const;

  static GroupTable trivial();
  static GroupTable cyclic(int n);
  static GroupTable klein4();
  static GroupTable symmetric3();
};

// All group homomorphisms G → H, each as the vector of images.
std::vector<std::vector<int>> group_homs(const GroupTable& g, const GroupTable& h);

struct ValidationReport {
  bool ok = true;
  std::string reason;
};

// Finite groupoid with explicit tables. Morphisms are indexed; composition
// comp(g, f) = g∘f is stored sparsely for the composable pairs.
struct FiniteGroupoid {
  int n_objects = 0;
  std::vector<int> mor_src, mor_dst;
  std::vector<int> identity_mor;  // per object
  std::vector<int> inverse_mor;   // per morphism, -1 when absent
  std::unordered_map<uint64_t, int> comp_table;

  int n_mor() const { return int(mor_src.size()); }
  static uint64_t key(int g, int f) { return (uint64_t(uint32_t(g)) << 32) | uint32_t(f); }

  bool composable(int g, int f) const { return mor_dst[f] == mor_src[g]; }
  int compose(int g, int f) const;  // g∘f, f first
  int inv(int m) const;
  int id(int obj) const { return identity_mor[obj]; }
  std::vector<int> hom(int a, int b) const;

  void add_object();
  int add_morphism(int src, int dst);
  void set_comp(int g, int f, int gf) { comp_table[key(g, f)] = gf; }

  ValidationReport validate() const;

  uint64_t signature() const;
  bool connected_to(int a, int b) const { return !hom(a, b).empty(); }
  std::vector<int> component_of(int obj) const;  // objects in the same component
};

using Gpd = std::shared_ptr<const FiniteGroupoid>;

// Same groupoid up to identical tables (pointer equality short-circuits).
bool same_gpd(const Gpd& a, const Gpd& b);

Gpd point();
Gpd discrete(int n);
// One component: objects 0..n-1, morphisms (a→b, g ∈ G).
Gpd connected_groupoid(int n_objects, const GroupTable& g);
inline Gpd group_groupoid(const GroupTable& g) { return connected_groupoid(1, g); }
Gpd cyclic_groupoid(int n);  // BC_n

Gpd disjoint_union(const Gpd& a, const Gpd& b);
Gpd product(const Gpd& a, const Gpd& b);

// Morphism encoding helpers for connected_groupoid.
int conn_mor(const FiniteGroupoid& g, int group_order, int a, int b, int elt);
void conn_decode(const FiniteGroupoid& g, int group_order, int mor, int& a, int& b, int& elt);

// Functor between finite groupoids, given by object and morphism tables.
struct GroupoidMap {
  Gpd src, dst;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  ValidationReport validate() const;
  int on_obj(int a) const { return obj_map[a]; }
  int on_mor(int m) const { return mor_map[m]; }
};

GroupoidMap identity_map(const Gpd& g);
GroupoidMap compose(const GroupoidMap& g, const GroupoidMap& f);  // g∘f
GroupoidMap to_point(const Gpd& g);
GroupoidMap product_proj(const Gpd& a, const Gpd& b, int which);
// The map A → A×B (resp. B) pairing with a constant object of the other
// factor is not needed; diagonal is.
GroupoidMap diagonal_map(const Gpd& a);  // A → A×A
GroupoidMap pair_map(const GroupoidMap& f, const GroupoidMap& g);  // C → A×B
GroupoidMap product_map(const GroupoidMap& f, const GroupoidMap& g);  // A×B → A'×B'
// Inclusion of the object `obj` (with trivial automorphisms) as pt → G.
GroupoidMap object_inclusion(const Gpd& g, int obj);
// Functor conn(nA, G) → conn(nB, H): (a,b,g) ↦ (σa, σb, gauge_b·φ(g)·gauge_a⁻¹).
GroupoidMap connected_functor(const Gpd& a, int orderG, const Gpd& b, int orderH,
                              const std::vector<int>& sigma, const std::vector<int>& hom,
                              const std::vector<int>& gauge);

// Natural isomorphism F ⇒ G between maps A → B: a morphism of B per object.
struct NaturalIso {
  GroupoidMap f, g;
  std::vector<int> component;  // component[a] : F(a) → G(a)
  ValidationReport validate() const;
};

NaturalIso identity_iso(const GroupoidMap& f);

// Square  P --q--> B
//         |        |
//         p        g      with filler: f∘p ⇒ g∘q.
//         v        v
//         A --f--> C
struct GroupoidSquare {
  GroupoidMap p, q, f, g;
  NaturalIso filler;
  ValidationReport validate() const;
};

// Iso-comma of A --f--> C <--g-- B: objects (a, b, γ: f a → g b).
struct IsoComma {
  Gpd gpd;
  struct Obj {
    int a, b, gamma;
  };
  std::vector<Obj> objects;
  GroupoidMap proj_a, proj_b;
  NaturalIso filler;  // f∘proj_a ⇒ g∘proj_b

  int obj_index(int a, int b, int gamma) const;
  // morphism data: underlying pair (u, v)
  std::vector<std::pair<int, int>> mor_pair;
  int mor_index(int src_obj, int u, int v) const;

 private:
  friend IsoComma iso_comma(const GroupoidMap& f, const GroupoidMap& g);
  std::unordered_map<uint64_t, int> obj_lookup_;
  std::unordered_map<uint64_t, int> mor_lookup_;
};

IsoComma iso_comma(const GroupoidMap& f, const GroupoidMap& g);

bool is_equivalence(const GroupoidMap& f);

// Comparison functor P → iso_comma(f, g) of a square, and the induced test.
GroupoidMap comparison_map(const GroupoidSquare& sq, const IsoComma& ic);
bool is_homotopy_cartesian(const GroupoidSquare& sq);

// The canonical iso-comma square of the cospan (f, g), with its filler.
GroupoidSquare iso_comma_square(const GroupoidMap& f, const GroupoidMap& g);

// Whisker a natural isomorphism with maps on both sides: h∘η∘k-style
// composites used when pasting squares.
NaturalIso whisker_left(const GroupoidMap& h, const NaturalIso& eta);   // h∘F ⇒ h∘G
NaturalIso whisker_right(const NaturalIso& eta, const GroupoidMap& k);  // F∘k ⇒ G∘k
NaturalIso vcompose(const NaturalIso& later, const NaturalIso& first);  // F⇒G⇒H

}  // namespace umbra
