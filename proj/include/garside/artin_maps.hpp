#pragma once

#include "garside/normal_form.hpp"

namespace garside {

// t(i) written as a word in t(0), t(1) and their inverses:
// t(i+1) = t(1) t(0) t(i)^{-1}, t(i-1) = t(i)^{-1} t(1) t(0).
Word cll_t_as_shi_word(Exp i);

// Images of the type-B Artin generators q_1 .. q_{n-1} inside the monoid:
// q_1 -> t(k) t(0), q_m -> s(m+1) for m >= 2.
std::vector<PositiveWord> phi_images(const IntervalCtx& ctx);

// phi of a positive word over q_1 .. q_{n-1} (given by indices), normalized.
GroupElement phi(const std::vector<int>& q_word, const IntervalCtx& ctx);

// Checks that the q-images satisfy the type-B braid relations and that phi
// carries Coxeter lcms of generator pairs to lattice joins; the image table is
// injectable so a corrupted map can be exercised.
RelationReport verify_phi(const IntervalCtx& ctx);
RelationReport verify_phi(const IntervalCtx& ctx, const std::vector<PositiveWord>& images);

// Garside element of the type-B Artin monoid as a positive q-word:
// q_1 (q_2 q_1 q_2) (q_3 q_2 q_1 q_2 q_3) ...
std::vector<int> btype_garside_word(int rank);

// Transport of defining relations between k = -1 and k = 1 along
// t(i) -> t(-i), s(j) -> s(j), checked in both directions.
RelationReport verify_k_iso(int n, Exp index_bound);

// Evaluates the t-pair relations t(i) t(i-k_source) = t(j) t(j-k_source) in
// the monoid with parameter k_target; ok() only when k_source = k_target.
RelationReport check_t_relations_under(int n, Exp k_source, Exp k_target, Exp index_bound);

// Projections of the presentations' defining relations to matrix identities
// in G(inf,inf,n), quadratic relations included.
RelationReport verify_cll_projection(int n, Exp k, Exp index_bound);
RelationReport verify_shi_projection(int n, Exp index_bound);

}  // namespace garside
