#pragma once

#include "wittsuper/env.hpp"
#include "wittsuper/kgl.hpp"

namespace wittsuper {

// The homomorphism W_{m,n} -> K_{m,n} ox U(gl_{m,n}):
//   t^a xi_I d_i  |->  t^a xi_I d_i ox 1
//                     + sum_s (-1)^{|t_s|(|I|-1)} d_s(t^a xi_I) ox E_{s,i}.
// The sign convention was pinned by enforcing pi([x,y]) = [pi(x),pi(y)]
// exhaustively at small signatures; the s-th term carries |t_s|, not |t_i|.
KGlElement pi_w(const VectorField& x);

// The second homomorphism Ubar -> K_{q,n} ox U(gl_{q,n}) ox U(k), on letters:
//   t^a xi_I            |-> t^a xi_I ox 1 ox 1
//   t^a xi_I d_i        |-> t^a xi_I d_i ox 1 ox 1
//                          + sum_{s<=q} d_s(t^a xi_I) ox E_{s,i'} ox 1
//                          + (-1)^{|I|-1} sum_l d_{q+l}(t^a xi_I) ox E_{q+l,i'} ox 1
//   x ox t^a xi_I       |-> t^a xi_I ox 1 ox x
// with i' the gl_{q,n} column index of the (local) direction i.
KGlElement pi_second(const EnvAlphabet& alph, const EnvLetter& letter);
KGlElement pi_second(const EnvElement& e);

// shapes of the target tensor algebra for a given alphabet
inline Signature pi2_ksig(const EnvAlphabet& alph) { return Signature{alph.q, alph.n}; }
inline Signature pi2_glsig(const EnvAlphabet& alph) { return Signature{alph.q, alph.n}; }
inline Signature pi2_kksig(const EnvAlphabet& alph) { return Signature{alph.m, 0}; }

}  // namespace wittsuper
