#pragma once

#include "plumpwork/names.hpp"

namespace plumpwork {

// Plump ordinal arithmetic: the step operation is the plump successor, so
// these differ from classical ordinal arithmetic on non-Boolean algebras and
// collapse to it over bool2. All three are memoized per context.
NameRef pl_add(Ctx& ctx, NameRef alpha, NameRef beta);
NameRef pl_mul(Ctx& ctx, NameRef alpha, NameRef beta);
NameRef pl_pow(Ctx& ctx, NameRef alpha, NameRef beta);

// The injective pair code alpha * delta + gamma.
NameRef pair_code(Ctx& ctx, NameRef alpha, NameRef gamma, NameRef delta);

}  // namespace plumpwork
