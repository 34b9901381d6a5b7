#pragma once

#include <string>
#include <vector>

#include "hpfold/fold.hpp"
#include "hpfold/multichain.hpp"
#include "hpfold/topology.hpp"

namespace hpfold {

// All SVG output is deterministic byte-for-byte for identical inputs: fixed
// 24-unit lattice pitch, two-decimal coordinates, stable element order.
// Letters are drawn at sites ('0'/'2' in red tones, '1' in blue); bonds are
// solid lines and contacts, when requested, dashed ones. 3D folds use a fixed
// isometric projection.
std::string render_fold_svg(const Fold& f, const Word& w, bool show_contacts);

// Text rendering for rect2d (grid) and hex (brick wall); other lattices throw.
std::string render_fold_ascii(const Fold& f, const Word& w);

std::string render_embedding_svg(const Embedding& e);

// Knot/link diagram with gap-style under-crossings.
std::string render_diagram_svg(const std::vector<ClosedCurve>& curves);

}  // namespace hpfold
