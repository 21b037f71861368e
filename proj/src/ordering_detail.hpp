#pragma once

#include <vector>

#include "link_context.hpp"
#include "simplexpaths/ordering.hpp"

namespace simplexpaths::detail {

// Cached variants used by the path machinery; lc must be rooted at the
// complex the facets live in.

DistanceVector distance_vector_cached(LinkCache& lc, const OrderedFacet& F, const VertexSet& S);

bool is_admissible_cached(LinkCache& lc, const OrderedFacet& F, const VertexSet& S);

std::vector<OrderedFacet> admissible_orderings_cached(LinkCache& lc, const Face& facet,
                                                      const VertexSet& S);

std::vector<OrderedFacet> max_index_reorder_cached(LinkCache& lc, const Face& F_new_set,
                                                   const VertexSet& S,
                                                   const OrderedFacet& F_prev);

}  // namespace simplexpaths::detail
