#pragma once

#include <string>

#include "gainflow/paft.hpp"
#include "gainflow/reductions.hpp"

namespace gainflow {

// Directed DOT graph; edge labels are capacity/cost/gain. With origins, the
// vertices of each source vertex's gadget ("v:<id>" elements) are drawn as one
// cluster. Output order follows the canonical vertex and edge order.
std::string export_dot(const AdditiveNetwork& network, const OriginMap* origins = nullptr);

// Undirected DOT graph labelled by edge id; forbidden pairs become comments.
std::string export_dot(const PaftInstance& instance);

}  // namespace gainflow
