#pragma once

#include <vector>

#include "monopot/algebra.hpp"
#include "monopot/distributions.hpp"
#include "monopot/term_algebra.hpp"

// The doubly infinite potential chain.  Downstream (k <= -1) the elements are
// derivatives of the Cauchy kernel, C_{-k-1} = Dbar^k C_{-1}, held as exact
// term sums.  Upstream (k = 0, 1, 2) the conjugate harmonic pairs (A_k, B_k)
// have closed forms built on the profile integrals F_m; C_k = (A_k + bar(e0)
// B_k)/2.  A_1 needs m > 2 and A_2, B_2 need m > 3: below that the defining
// integrals diverge and the ids are rejected rather than regularized.

namespace monopot {

enum class Component { A, B, C };

struct PotentialId {
  Component comp = Component::C;
  int k = -1;
};

inline constexpr int kMaxChainDepth = 8;  // deepest cached Dbar application

bool evaluable(int m, PotentialId id);

// C_{-kk} = Dbar^{kk-1} C_{-1} for kk >= 1, without the 1/sigma_{m+1} factor
// (cached, thread-safe).
const TermSum& cauchy_chain(int m, int kk);

Multivector eval_potential(int m, PotentialId id, const PointUpperLower& p);

// Pointwise (classical) limit of the potential as x0 -> 0± at fixed xvec != 0.
Multivector pointwise_limit(int m, PotentialId id, const std::vector<double>& xs, Side side);

std::vector<Multivector> eval_potential_many(int m, PotentialId id,
                                             const std::vector<PointUpperLower>& pts,
                                             int threads);

// "A:-1", "B:0", "C:2" <-> PotentialId
PotentialId parse_potential_id(const std::string& s);
std::string to_string(PotentialId id);

}  // namespace monopot
