#pragma once

#include <set>

#include "serre/characters.hpp"
#include "serre/lattice.hpp"
#include "serre/tametypes.hpp"

namespace serre {

// The W x W matrix det(tau) ch W(-eps'_{w0 sigma} + eps'_tau - rho') together
// with its inverse gamma', and an ordering of W in which it is triangular.
struct HulsurkarData {
  int n;
  int p;
  std::vector<WeylPerm> elems;                       // row/column index -> W
  std::vector<std::vector<FormalCharacter>> matrix;  // entries
  std::vector<std::vector<FormalCharacter>> gamma;   // inverse
  std::vector<int> order;                            // triangular ordering

  bool gamma_is_diagonal() const;
};

HulsurkarData hulsurkar(const RootCtx& ctx);

// matrix * gamma == identity, exactly.
bool verify_hulsurkar_identity(const HulsurkarData& h);

// Reduction mod p of the Deligne-Lusztig class attached to (w, lambda),
// lambda = mu + rho', as a normalized virtual sum of Weyl modules with
// labels canonical mod (q-1)X^0.  The output depends on the representative
// pair, not just its orbit; only the underlying GL_n(F_q)-class is an
// orbit invariant.
VirtualWeylSum jantzen_virtual(const WeylPerm& w, const Weight& lambda,
                               const RootCtx& ctx, long long q,
                               const HulsurkarData* cached = nullptr);

// dim R_w(mu) = prod_i (q^i - 1) / prod_orbits (q^{d_j} - 1)
long long dl_dimension(const WeylPerm& w, int n, long long q);

// Constituent highest weights of the reduction for mu deep in its alcove:
// restricted lambda admitting sigma, nu with sigma.(mu + (w - p)nu) dominant
// and above-linked to w0.(lambda - p rho').  Canonical restricted labels.
std::set<Weight> generic_jh(const WeylPerm& w, const Weight& mu, const RootCtx& ctx);

}  // namespace serre
