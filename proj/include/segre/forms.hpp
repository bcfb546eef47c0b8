#pragma once

// Forms of the Segre cubic as Galois twists. A form is described by the image
// H <= S6 of the Galois group acting on the configuration of nodes and planes;
// its automorphism group is the centralizer of H and its rational nodes and
// planes are those fixed by H.

#include "segre/cubic.hpp"
#include "segre/permgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace segre {

enum class FormLabel { I, II, III, IV };

std::string to_string(FormLabel label);

struct RealFormType {
  FormLabel label;
  Perm representative;  // (), (1 2), (1 2)(3 4), (1 2)(3 4)(5 6)
};

/// The Galois image as a subgroup of S6.
struct GaloisImage {
  PermGroup subgroup;

  static GaloisImage generated_by(const std::vector<Perm>& generators);
};

/// One real form per conjugacy class of elements of order <= 2 in S6.
std::vector<RealFormType> classify_real_forms();
/// The form type whose representative is conjugate to `sigma` (sigma^2 = 1).
FormLabel real_form_label(const Perm& sigma);

PermGroup form_automorphism_group(const GaloisImage& h);
FixedCounts rational_counts(const RealFormType& t);

/// Isomorphism-type name for the groups that occur as automorphism groups
/// of real forms; falls back to "order N".
std::string structure_name(const PermGroup& g);

struct FormReport {
  std::optional<FormLabel> label;  // set when H is cyclic of order <= 2
  std::size_t automorphism_order;
  std::string structure;
  int rational_points;
  int rational_planes;
};

FormReport twist_report(const GaloisImage& h);

/// Model groups built independently of any centralizer computation.
PermGroup model_c2_x_s4();   // C2 on {1,2} times S4 on {3..6}
PermGroup model_c2_x_d8();   // C2 on {1,2} times the symmetries of a square on {3..6}
PermGroup model_c2cubed_s3();  // signed permutations of three letters on {+-1,+-2,+-3}

/// Evidence that `g` splits as N : K with N elementary abelian of order 2^k
/// normal in g and K a complement.
struct SemidirectWitness {
  PermGroup normal;
  PermGroup complement;
};
std::optional<SemidirectWitness> find_semidirect_split(const PermGroup& g, std::size_t normal_order,
                                                       std::size_t complement_order);

struct BlowupRow {
  Perm conjugation_on_five;  // action on the five blown-up points
  int fixed_pairs;           // fixed lines through pairs of points
  Perm twisted_image;        // psi(conjugation) in S6
  std::string twisted_cycle_type;
  FormLabel label;
  FixedCounts counts;
};

struct BlowupCrosscheck {
  GroupHom psi;                            // S5 -> S6, outer automorphism after the standard inclusion
  bool psi_injective;
  bool psi_image_transitive;
  std::vector<int> pair_to_node;           // pair index (sorted pairs of {1..5}) -> node index
  bool bijection_equivariant;
  std::vector<BlowupRow> rows;             // identity, (4 5), (2 3)(4 5)
  bool type_ii_obstructed;                 // no involution of S5 lands in the transposition class
};

/// Matches the five-point blow-up picture with the node configuration: S5
/// acts on the ten pairs of points exactly as the twisted S5 acts on nodes.
BlowupCrosscheck blowup_model_crosscheck();

}  // namespace segre
