#pragma once

#include "pn/abelian_group.hpp"
#include "pn/budget.hpp"
#include "pn/complexes.hpp"
#include "pn/sparse_matrix.hpp"

#include <cstdint>
#include <vector>

namespace pn {

/// H = ker(outgoing) / im(incoming) for a chain group of rank `chain_rank`.
/// Either map may be null (zero map).
AbelianGroup homology_at(std::size_t chain_rank, const SparseIntMatrix* outgoing, const SparseIntMatrix* incoming,
                         const Budget& budget = {});
/// Same over F_p; returns the dimension.
std::size_t homology_at_mod_p(std::size_t chain_rank, const SparseIntMatrix* outgoing,
                              const SparseIntMatrix* incoming, std::uint64_t p, const Budget& budget = {});

/// Integral homology H_k of the complex. With `reduced`, degree 0 uses the
/// augmentation and degree -1 is Z exactly for the empty complex. Degrees
/// above the dimension give the trivial group; k < -1 is invalid.
AbelianGroup homology(const EquivariantComplex& c, int k, bool reduced = true, const Budget& budget = {});
std::size_t homology_mod_p(const EquivariantComplex& c, int k, std::uint64_t p, bool reduced = true,
                           const Budget& budget = {});

/// All groups H_0 .. H_dim (reduced: H_-1 is omitted; it is nonzero only for
/// the empty complex), computing each boundary's Smith form once.
std::vector<AbelianGroup> homology_all(const EquivariantComplex& c, bool reduced = true, const Budget& budget = {});

}  // namespace pn
