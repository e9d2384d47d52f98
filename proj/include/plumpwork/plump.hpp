#pragma once

#include "plumpwork/logic.hpp"
#include "plumpwork/names.hpp"

namespace plumpwork {

// Ordinals are hereditarily transitive names.
TruthValue is_ord_value(Ctx& ctx, NameRef x);

// Thin: subset between members implies membership or equality.
TruthValue is_thin_value(Ctx& ctx, NameRef x);

// Direct evaluation of the plump-ordinal matrix.
TruthValue plord_value(Ctx& ctx, NameRef x);

// Independent route: members plump, closed under plump subsets of members.
// Recurses through plord_value on strictly smaller rank.
TruthValue plord_crit_value(Ctx& ctx, NameRef x);

// Taylor-style recursion; the value depends on beta only, alpha is kept for
// the two-parameter surface.
TruthValue vartheta(Ctx& ctx, NameRef alpha, NameRef beta);

// All subsets of alpha weighted by their relative plumpness. Total on any
// name; meaningful when alpha is plump at top.
NameRef plump_successor(Ctx& ctx, NameRef alpha);

// alpha union {alpha}.
NameRef thin_successor(Ctx& ctx, NameRef alpha);

// Rank-recursive closure into the plump ordinals: the union over members beta
// of the plump successor of beta's image.
NameRef plump_op(Ctx& ctx, NameRef alpha);

}  // namespace plumpwork
