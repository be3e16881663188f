#pragma once

#include "catbench/catfile.hpp"
#include "catbench/dispcat.hpp"
#include "catbench/pathcat.hpp"

namespace catbench {

// ===== FILE -> STRUCTURE =====
//
// Defaults when a file omits a class: display = every morphism (the cofree
// reading), fibration = the closure of the display class, equivalence = the
// isomorphisms (the trivial path structure).

MapClass class_or(const Input& in, const std::string& name, MapClass fallback);

DispCat dispcat_from(const Input& in);
MapClass equivalence_class_from(const Input& in);
PathCat pathcat_from(const Input& in);

}  // namespace catbench
