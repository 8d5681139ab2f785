#pragma once

#include <cstddef>
#include <map>

#include "tilesum/geometry.hpp"
#include "tilesum/module_element.hpp"
#include "tilesum/ring.hpp"
#include "tilesum/word.hpp"

namespace tilesum {

/// Signed traversal counts of the edges of the Z x Z grid, zeros pruned.
using Flow = std::map<EdgeId, Integer>;

/// Coefficients on unit cells, keyed by the lower-left corner.
using CellMap = std::map<Point, Integer>;

/// Element of the free metabelian group of rank 2: the endpoint of a path
/// from the origin and its net edge flow. Equality is equality in the
/// group.
struct MetabelianElement {
  Point ab;
  Flow flow;

  friend bool operator==(const MetabelianElement&, const MetabelianElement&) = default;
};

void flow_add(Flow& f, const EdgeId& e, const Integer& v);
Flow translate_flow(const Flow& f, Point shift);

/// Out-degree minus in-degree at each vertex, zeros pruned. A path from
/// the origin to p has boundary delta_0 - delta_p.
std::map<Point, Integer> flow_boundary(const Flow& f);

MetabelianElement metabelian_id();
/// Traces the word over x, X, y, Y. Throws UnboundSymbol for other letters.
MetabelianElement metabelian_eval(const Word& w);
MetabelianElement metabelian_mul(const MetabelianElement& a, const MetabelianElement& b);
MetabelianElement metabelian_inv(const MetabelianElement& g);

/// Flow of the commutator [x,y] = xyXY around the cell at the origin.
Flow unit_cycle();

/// Sum of phi(a,b) times the unit cycle moved to (a,b).
Flow cell_boundary(const CellMap& phi);

/// The unique cell coefficients whose boundary is `f`:
/// phi(a,b) = sum over j <= b of f((a,j),H). Throws NotACycle.
CellMap flow_decompose(const Flow& f);

/// Cell (a,b) becomes coordinate i = a mod m at position ((a-i)/m, b) of a
/// rank-m module over Z: coordinates in the basis {c + (i,0)}.
ModuleElement regroup_cells(const CellMap& phi, std::size_t m);
CellMap ungroup_cells(const ModuleElement& e);

/// Per position: b' = a_{m-1} stored at index m-1, b_i = a_i - a_{m-1}.
/// The new basis is {c + (i,0) : i <= m-2} plus c' = sum of all c + (i,0).
ModuleElement to_split_basis(const ModuleElement& a);
/// Inverse: a_i = b_i + b', a_{m-1} = b'.
ModuleElement from_split_basis(const ModuleElement& b);

/// Product over cells in row-major order of x^a y^b [x,y]^phi y^-b x^-a,
/// freely reduced. Evaluates to (origin, f). Throws NotACycle.
Word flow_to_word(const Flow& f);

}  // namespace tilesum
