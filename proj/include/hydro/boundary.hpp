#pragma once

#include "hydro/fields.hpp"

namespace hydro {

enum class BoundaryKind { periodic, outflow };

// Fills all ghost layers of a single patch in place: periodic wrap or
// outflow copy-out of the adjacent boundary zone. Multi-patch ghost
// exchange lives in transfer.hpp; these fill from the patch's own data.
void apply_boundary(SkinnyState& skinny, const PatchGeometry& g, BoundaryKind kind);

// Same fill applied to mode 0 of a modal state.
void apply_boundary(ModalState& modal, const PatchGeometry& g, BoundaryKind kind);

}  // namespace hydro
