"""Tree-like Jacobi diagrams of degree 1-3 and their tensor expansions.

Trees are planar caterpillars with counterclockwise vertex orientation,
given by their ordered leaf labels (3, 4 or 5 HVectors).  The expansion
eta sends a tree to the cyclicization of a bracket reading:

    degree 1, leaves (a,b,c):     N( a [c,b] )
    degree 2, leaves (a,b,c,d):   N( [a,b] [c,d] )
    degree 3, leaves (a,b,c,d,e): N( [a,b] [c,[d,e]] )

and a (.) b ("odot", half of the symmetric degree-2 tree) to
(1/2) N( [a,b] [a,b] ).
"""

from __future__ import annotations

from fractions import Fraction

from . import tensor as T
from .surface import omega


class TreeDiagram:
    """A labeled caterpillar tree; degree = number of trivalent vertices."""

    __slots__ = ("labels",)

    def __init__(self, labels):
        labels = tuple(labels)
        if len(labels) not in (3, 4, 5):
            raise T.DomainError("trees carry 3, 4 or 5 leaves")
        lengths = {len(v) for v in labels}
        if len(lengths) != 1 or next(iter(lengths)) % 2 != 0:
            raise T.DomainError("leaf labels must share an even length")
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("TreeDiagram is immutable")

    @property
    def degree(self):
        return len(self.labels) - 2

    def __eq__(self, other):
        if not isinstance(other, TreeDiagram):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)


class OdotSymbol:
    """The half-symmetric degree-2 element u (.) v."""

    __slots__ = ("u", "v")

    def __init__(self, u, v):
        if len(u) != len(v):
            raise T.DomainError("odot labels must share a length")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError("OdotSymbol is immutable")

    degree = 2

    def __eq__(self, other):
        if not isinstance(other, OdotSymbol):
            return NotImplemented
        return (self.u, self.v) == (other.u, other.v)

    def __hash__(self):
        return hash((self.u, self.v))


class DiagramSum:
    """Finitely supported rational combination of trees and odot symbols."""

    __slots__ = ("items",)

    def __init__(self, items=None):
        clean = {}
        if items:
            for node, coeff in dict(items).items():
                c = Fraction(coeff)
                if c != 0:
                    clean[node] = c
        object.__setattr__(self, "items", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DiagramSum is immutable")

    def __add__(self, other):
        items = dict(self.items)
        for node, coeff in other.items.items():
            c = items.get(node, Fraction(0)) + coeff
            if c == 0:
                items.pop(node, None)
            else:
                items[node] = c
        return DiagramSum(items)

    def __neg__(self):
        return DiagramSum({n: -c for n, c in self.items.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        s = Fraction(scalar)
        return DiagramSum({n: c * s for n, c in self.items.items()} if s else {})

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __eq__(self, other):
        if not isinstance(other, DiagramSum):
            return NotImplemented
        return self.items == other.items


def tree(*labels):
    """A single tree as a DiagramSum."""
    return DiagramSum({TreeDiagram(labels): 1})


def odot(u, v):
    """u (.) v as a DiagramSum."""
    return DiagramSum({OdotSymbol(u, v): 1})


def _hv_tensor(v, g, trunc):
    terms = {}
    for i, c in enumerate(v.coords):
        if c:
            terms[(i + 1,)] = c
    return T.Tensor(g, trunc, terms)


def _eta_node(node, g, trunc):
    if isinstance(node, OdotSymbol):
        u = _hv_tensor(node.u, g, trunc)
        v = _hv_tensor(node.v, g, trunc)
        uv = T.bracket(u, v)
        return T.cyclicize(T.product(uv, uv)).scale(Fraction(1, 2))
    labels = [_hv_tensor(v, g, trunc) for v in node.labels]
    if node.degree == 1:
        # Rooting at the first leaf, the remaining two read bracketed in
        # reversed order; this sign choice is what balances the published
        # bracket decomposition end to end.
        a, b, c = labels
        return T.cyclicize(T.product(a, T.bracket(c, b)))
    if node.degree == 2:
        a, b, c, d = labels
        return T.cyclicize(T.product(T.bracket(a, b), T.bracket(c, d)))
    a, b, c, d, e = labels
    return T.cyclicize(T.product(T.bracket(a, b), T.bracket(c, T.bracket(d, e))))


def eta(d, trunc=5, g=None):
    """Expand a DiagramSum into the tensor algebra."""
    some = next(iter(d.items), None)
    if some is None:
        if g is None:
            raise T.DomainError("cannot infer the genus of an empty DiagramSum")
    else:
        g = _node_genus(some)
    res = T.Tensor.zero(g, trunc)
    for node, coeff in d.items.items():
        res = res + _eta_node(node, g, trunc).scale(coeff)
    return res


def _node_genus(node):
    if isinstance(node, OdotSymbol):
        return len(node.u) // 2
    return len(node.labels[0]) // 2


def morita_tau2(pairs):
    """tau_2 of a twist along a BSCC with the given symplectic spine pairs.

    Equals sum_i u_i (.) v_i + sum_{i<j} T(u_i, v_i, u_j, v_j); requires
    omega(u_i, v_i) = 1 and all cross pairings zero.
    """
    pairs = [tuple(p) for p in pairs]
    for i, (u, v) in enumerate(pairs):
        if omega(u, v) != 1:
            raise T.DomainError("pair %d is not symplectically normalized" % i)
        for j in range(i):
            w, x = pairs[j]
            if any(omega(p, q) != 0 for p in (u, v) for q in (w, x)):
                raise T.DomainError("pairs %d and %d are not orthogonal" % (j, i))
    res = DiagramSum()
    for u, v in pairs:
        res = res + odot(u, v)
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            res = res + tree(pairs[i][0], pairs[i][1], pairs[j][0], pairs[j][1])
    return res


# -- the mod-3 map kappa ------------------------------------------------


def _wedge4(vectors):
    """Multilinear expansion of v1 ^ v2 ^ v3 ^ v4 over Z/3, keyed by index 4-sets."""
    n = len(vectors[0])
    out = {}

    # Sum over ordered choices of one basis index per vector; fold each
    # choice into its sorted key with the permutation sign.
    def rec(pos, chosen, coeff):
        if coeff % 3 == 0:
            return
        if pos == 4:
            order = sorted(range(4), key=lambda t: chosen[t])
            key = tuple(chosen[t] for t in order)
            if len(set(key)) != 4:
                return
            sign = _perm_sign(order)
            out[key] = (out.get(key, 0) + sign * coeff) % 3
            if out[key] == 0:
                del out[key]
            return
        for idx in range(n):
            c = vectors[pos].coords[idx]
            if c % 3:
                rec(pos + 1, chosen + (idx,), coeff * c)

    rec(0, (), 1)
    return out


def _perm_sign(order):
    sign = 1
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if order[i] > order[j]:
                sign = -sign
    return sign


def kappa(d):
    """The map to Lambda^4(H/3H): odot symbols go to 0, trees to the wedge of labels.

    Defined on degree-2 DiagramSums only; returns a dict keyed by sorted
    index 4-tuples with values in {1, 2} mod 3 (empty dict for zero).
    """
    out = {}
    for node, coeff in d.items.items():
        if node.degree != 2:
            raise T.DomainError("kappa is defined on degree-2 diagrams only")
        if isinstance(node, OdotSymbol):
            continue
        if coeff.denominator % 3 == 0:
            raise T.DomainError("coefficient not reducible mod 3")
        c = (coeff.numerator * pow(coeff.denominator, -1, 3)) % 3
        if c == 0:
            continue
        for key, val in _wedge4(node.labels).items():
            total = (out.get(key, 0) + c * val) % 3
            if total == 0:
                out.pop(key, None)
            else:
                out[key] = total
    return out
