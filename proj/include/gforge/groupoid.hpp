#pragma once

#include <map>

#include "gforge/propositional.hpp"

namespace gforge {

// A frame homomorphism between presented frames, given by its action on
// generators and extended by preserving meets and joins.
struct GeneratorMap {
  Provenance domain = Provenance::Objects;
  Provenance codomain = Provenance::Arrows;
  std::map<Generator, Open> images;

  const Open& image(const Generator& g) const;
};

Open apply_map(const GeneratorMap& m, const Open& o);

// The groupoid presentation: object, arrow and composition-domain frames
// plus the five structure maps (and the two pullback projections).
//   s_star, t_star : objects -> arrows      tag copy 1 resp. copy 2
//   e_star         : arrows  -> objects     merge copies, alpha -> per
//   i_star         : arrows  -> arrows      swap copies, transpose alpha
//   m_star         : arrows  -> comp        copy 1 -> 1, copy 2 -> 3,
//                                           alpha -> relational composite of beta, gamma
//   pi1_star       : arrows  -> comp        copies (1,2) -> (1,2), alpha -> beta
//   pi2_star       : arrows  -> comp        copies (1,2) -> (2,3), alpha -> gamma
struct GroupoidPresentation {
  Theory theory;         // the input theory T
  Theory arrows_theory;  // T_iso
  Theory comp_theory;    // T_iso,iso
  IndexSet idx{1};

  FramePresentation objects;
  FramePresentation arrows;
  FramePresentation comp_domain;

  GeneratorMap s_star, t_star, e_star, i_star, m_star, pi1_star, pi2_star;
};

GroupoidPresentation build_groupoid(const Theory& t, IndexSet idx);

// The left adjoint of s*, computed on a basic open of the arrow frame.
// Copy-1 atoms keep their indices with tags stripped; each distinct
// (index, sort) pair occurring in a copy-2 position or as an alpha value
// becomes a fresh variable joined over the index set; alpha atoms
// [alpha^X(c)=d] turn into [c ~^X y_d].
Open source_lower(const GroupoidPresentation& g, const BasicOpen& b);
Open source_lower(const GroupoidPresentation& g, const Open& o);

// t_! = s_! after inversion.
Open target_lower(const GroupoidPresentation& g, const BasicOpen& b);
Open target_lower(const GroupoidPresentation& g, const Open& o);

// The closure operator s_! t* on the object frame: every generator index is
// replaced by a fresh joined variable, respecting index sharing. Its fixed
// points are the sentences of the theory at this truncation.
Open closure(const GroupoidPresentation& g, const Open& o);

}  // namespace gforge
