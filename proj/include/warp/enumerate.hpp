#pragma once

#include <cstddef>
#include <vector>

#include "warp/correspond.hpp"

namespace warp {

struct EnumerationLimits {
  // Raw candidates examined by a single enumeration before refusing.
  std::size_t max_candidates = 1'000'000;
};

template <class T>
struct Enumeration {
  std::vector<T> instances;
  std::size_t candidates = 0;
};

// All endofunctions of the object set.
std::vector<FinFunction> all_object_maps(const FinSet& objects);

// Every valid mw-monad with the given object map: ext maps and units range
// over all functions.
Enumeration<MwMonad> enumerate_mw_monads(const CategoryPtr& c, const FinFunction& T,
                                         const EnumerationLimits& limits = {});
// Every valid warping (t, k) over (base, A), by search over 2-cells.
Enumeration<Warping> enumerate_warpings(const SpanMonad& base, const SpanPtr& endo,
                                        const EnumerationLimits& limits = {});
// Every valid wreath (d, q, j) over (base, A), by search over 2-cells.
Enumeration<Wreath> enumerate_wreaths(const SpanMonad& base, const SpanPtr& endo,
                                      const EnumerationLimits& limits = {});
// Every monad structure on AB meeting the side condition.
Enumeration<MonadOnAB> enumerate_monads_on_ab(const SpanMonad& base, const SpanPtr& endo, SideCondition level,
                                              const EnumerationLimits& limits = {});
// Every valid E-family at object a.
Enumeration<EFamily> enumerate_e_families(const MwMonad& m, std::size_t a, const EnumerationLimits& limits = {});
// Every Eilenberg-Moore action at object a.
Enumeration<EmAlgebra> enumerate_em_algebras(const ClassicalMonad& m, std::size_t a);

}  // namespace warp
