/** Umbrella header. */

#ifndef HOMCALC_HOMCALC_HPP
#define HOMCALC_HOMCALC_HPP

#include "abelian_group.hpp"
#include "chain_complex.hpp"
#include "group_hom.hpp"
#include "integer_matrix.hpp"
#include "mv_solver.hpp"
#include "oracle_term.hpp"
#include "realize.hpp"
#include "smith.hpp"
#include "space_expr.hpp"
#include "space_homology.hpp"

#endif  // HOMCALC_HOMCALC_HPP
