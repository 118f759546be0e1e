#include "pn/homology.hpp"

#include "pn/errors.hpp"
#include "pn/smith.hpp"

namespace pn {

namespace {

AbelianGroup assemble(std::size_t chain_rank, std::size_t out_rank, const std::vector<BigInt>& in_factors) {
  std::vector<BigInt> torsion;
  for (const auto& d : in_factors) {
    if (d > 1) torsion.push_back(d);
  }
  const std::size_t used = out_rank + in_factors.size();
  if (used > chain_rank) throw_invariant("homology: boundary ranks exceed chain rank");
  return AbelianGroup::from_cyclic_orders(chain_rank - used, torsion);
}

struct Maps {
  std::size_t chain_rank = 0;
  const SparseIntMatrix* outgoing = nullptr;
  const SparseIntMatrix* incoming = nullptr;
};

// `storage` keeps the augmentation or the (-1)-degree map alive.
Maps maps_for(const EquivariantComplex& c, int k, bool reduced, std::vector<SparseIntMatrix>& storage) {
  if (k < -1) throw_invalid("homology degree must be >= -1");
  Maps m;
  storage.reserve(2);
  if (k == -1) {
    if (!reduced) return m;
    m.chain_rank = 1;
    if (c.count(0) > 0) {
      storage.push_back(c.augmentation());
      m.incoming = &storage.back();
    }
    return m;
  }
  m.chain_rank = c.count(k);
  if (k == 0) {
    if (reduced && c.count(0) > 0) {
      storage.push_back(c.augmentation());
      m.outgoing = &storage.back();
    }
  } else if (k <= c.dimension()) {
    m.outgoing = &c.boundary(k);
  }
  if (k + 1 <= c.dimension()) m.incoming = &c.boundary(k + 1);
  return m;
}

}  // namespace

AbelianGroup homology_at(std::size_t chain_rank, const SparseIntMatrix* outgoing, const SparseIntMatrix* incoming,
                         const Budget& budget) {
  std::size_t out_rank = 0;
  if (outgoing != nullptr) {
    if (outgoing->cols() != chain_rank) throw_invalid("homology: outgoing map has the wrong width");
    out_rank = smith_normal_form(*outgoing, false, budget).rank();
  }
  std::vector<BigInt> factors;
  if (incoming != nullptr) {
    if (incoming->rows() != chain_rank) throw_invalid("homology: incoming map has the wrong height");
    factors = smith_normal_form(*incoming, false, budget).invariant_factors;
  }
  return assemble(chain_rank, out_rank, factors);
}

std::size_t homology_at_mod_p(std::size_t chain_rank, const SparseIntMatrix* outgoing,
                              const SparseIntMatrix* incoming, std::uint64_t p, const Budget& budget) {
  if (!is_prime(p)) throw_invalid("coefficient modulus must be prime");
  std::size_t used = 0;
  if (outgoing != nullptr) used += rank_mod_p(*outgoing, p, budget);
  if (incoming != nullptr) used += rank_mod_p(*incoming, p, budget);
  if (used > chain_rank) throw_invariant("homology: boundary ranks exceed chain rank");
  return chain_rank - used;
}

AbelianGroup homology(const EquivariantComplex& c, int k, bool reduced, const Budget& budget) {
  std::vector<SparseIntMatrix> storage;
  auto m = maps_for(c, k, reduced, storage);
  return homology_at(m.chain_rank, m.outgoing, m.incoming, budget);
}

std::size_t homology_mod_p(const EquivariantComplex& c, int k, std::uint64_t p, bool reduced,
                           const Budget& budget) {
  std::vector<SparseIntMatrix> storage;
  auto m = maps_for(c, k, reduced, storage);
  return homology_at_mod_p(m.chain_rank, m.outgoing, m.incoming, p, budget);
}

std::vector<AbelianGroup> homology_all(const EquivariantComplex& c, bool reduced, const Budget& budget) {
  const int dim = c.dimension();
  if (dim < 0) return {};
  // factors[d] for boundary d (d = 0 is the augmentation when reduced).
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(dim + 1));
  if (reduced) factors[0] = smith_normal_form(c.augmentation(), false, budget).invariant_factors;
  for (int d = 1; d <= dim; ++d) {
    factors[static_cast<std::size_t>(d)] = smith_normal_form(c.boundary(d), false, budget).invariant_factors;
  }
  std::vector<AbelianGroup> out;
  for (int k = 0; k <= dim; ++k) {
    static const std::vector<BigInt> none;
    const auto& in = k < dim ? factors[static_cast<std::size_t>(k + 1)] : none;
    out.push_back(assemble(c.count(k), factors[static_cast<std::size_t>(k)].size(), in));
  }
  return out;
}

}  // namespace pn
