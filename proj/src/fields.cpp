#include "hydro/fields.hpp"

#include <stdexcept>

namespace hydro {

void require_compatible(const SkinnyState& s, const ModalState& m) {
    if (s.mx != m.mx || s.my != m.my || s.mz != m.mz)
        throw std::invalid_argument("skinny/modal shape mismatch");
}

void skinny_to_modal(const SkinnyState& skinny, ModalState& modal) {
    require_compatible(skinny, modal);
    const int mz = modal.mz, my = modal.my, mx = modal.mx, modes = modal.modes;
#pragma omp parallel for collapse(3)
    for (int k = 0; k < mz; ++k)
        for (int j = 0; j < my; ++j)
            for (int i = 0; i < mx; ++i) {
                const double* src = skinny.zone(k, j, i);
                double* dst = modal.zone(k, j, i);
                for (int q = 0; q < NVAR; ++q) dst[q * modes] = src[q];
            }
}

void modal_to_skinny(const ModalState& modal, const PatchGeometry& g, SkinnyState& skinny) {
    require_compatible(skinny, modal);
    const int gh = g.ghost, modes = modal.modes;
#pragma omp parallel for collapse(3)
    for (int k = gh; k < gh + g.nz; ++k)
        for (int j = gh; j < gh + g.ny; ++j)
            for (int i = gh; i < gh + g.nx; ++i) {
                const double* src = modal.zone(k, j, i);
                double* dst = skinny.zone(k, j, i);
                for (int q = 0; q < NVAR; ++q) dst[q] = src[q * modes];
            }
}

}  // namespace hydro
