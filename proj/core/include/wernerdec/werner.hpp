#pragma once

#include "wernerdec/dense.hpp"
#include "wernerdec/rational.hpp"

namespace wernerdec {

struct WernerParam {
  int d;
  Rational p;

  WernerParam(int d_, Rational p_);  // validates d >= 2 and 0 <= p <= 1

  Rational d_sym() const { return Rational(d) * (d + 1) / 2; }
  Rational d_asym() const { return Rational(d) * (d - 1) / 2; }
};

struct PairProjectors {
  DenseSymmetric p_sym;   // (I + F)/2
  DenseSymmetric p_asym;  // (I - F)/2
  DenseSymmetric flip;
  DenseSymmetric omega;   // unnormalized maximally entangled projector, trace d
};

PairProjectors projectors(int d);

/// p P_sym/d_sym + (1-p) P_asym/d_asym; unit trace, positive semidefinite.
DenseSymmetric werner_state(const WernerParam& wp);

/// Analytic UU-twirl: Tr[X P_sym] P_sym/d_sym + Tr[X P_asym] P_asym/d_asym.
DenseSymmetric twirl(const DenseSymmetric& x, int d);

/// Transposes the second tensor factor of a da (x) db bipartite matrix.
DenseSymmetric partial_transpose(const DenseSymmetric& x, int da, int db);

/// t = (d+1-2pd)/(d+1-2p); the trace-minus-transpose parametrization.
Rational p_to_t(const WernerParam& wp);
/// Inverse map, p = (d+1)(1-t)/(2(d-t)); requires t in [-1, 1].
Rational t_to_p(int d, const Rational& t);

}  // namespace wernerdec
