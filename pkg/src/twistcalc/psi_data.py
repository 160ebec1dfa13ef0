"""The embedded genus-2 dataset: the 16-twist element psi and its expected values.

Each twist is a signed Dehn twist along a bounding simple closed curve,
encoded by a barcode built from commutator/conjugation words; the spine
field records the two sub-words whose homology classes give a symplectic
basis of the bounded subsurface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import diagrams as D
from .diagrams import odot, tree
from .johnson import TwistEntry, as_derivation, derivation_bracket
from .surface import HVector, barcode_homology, commutator_barcode, omega
from .tensor import DomainError, extract

GENUS = 2


@dataclass(frozen=True)
class PsiTwist:
    name: str
    coeff: int
    genus: int
    barcode: tuple
    spine: tuple  # pairs of sub-barcodes spanning the bounded subsurface

    def entry(self):
        return TwistEntry(self.coeff, self.genus, self.barcode)


def _brack(a, b):
    return commutator_barcode(a, b)


def _bra(a, b):
    return commutator_barcode(a, b)


def _twists():
    gamma2 = _brack([3], [-4]) + _brack([1], [-2])
    t1 = _bra(_brack([-2], [1]) + (-4, 1), [-2])
    t2 = _bra([1], [-4, 3, 4, -2])
    t3 = _bra([1], (-4, -3, 4) + _brack([1], [-2]) + (-2,))
    t4 = _bra([3], [-1, -4])
    t5 = _bra([1], [-4, -3, -2])
    t6 = _bra([3], [-2, -1, -4])
    t7 = _bra((-3, 4) + _brack([1], [-2]) + (-2, -1, -4), [4])
    t8 = _bra([3, 4, 1], [-2])
    t9 = _bra([1], [-4, -2])
    t10 = _bra((-4, -3, 4) + _brack([1], [-2]) + (-2,), [4])
    t11 = _bra(_brack([-2], [1]) + (-4, 3, 4, 1), [-2])
    t12 = _bra(
        (1, -4, -3, 4)
        + _brack([1], [-2])
        + (4, 1)
        + _brack([-2], [1])
        + (-4, 3, 4),
        (-4, -3, 4) + _brack([1], [-2]) + (-2,),
    )
    t13 = _bra((-4, -3, 4) + _brack([1], [-2]) + (-2, -1), [1, 2, 4])
    s1 = _brack([1], [-2])
    s2 = _brack([3], [-4])

    spines = {
        "gamma2": (((3,), (-4,)), ((1,), (-2,))),
        "t1": ((_brack([-2], [1]) + (-4, 1), (-2,)),),
        "t2": (((1,), (-4, 3, 4, -2)),),
        "t3": (((1,), (-4, -3, 4) + _brack([1], [-2]) + (-2,)),),
        "t4": (((3,), (-1, -4)),),
        "t5": (((1,), (-4, -3, -2)),),
        "t6": (((3,), (-2, -1, -4)),),
        "t7": (((-3, 4) + _brack([1], [-2]) + (-2, -1, -4), (4,)),),
        "t8": (((3, 4, 1), (-2,)),),
        "t9": (((1,), (-4, -2)),),
        "t10": (((-4, -3, 4) + _brack([1], [-2]) + (-2,), (4,)),),
        "t11": ((_brack([-2], [1]) + (-4, 3, 4, 1), (-2,)),),
        "t12": (
            (
                (1, -4, -3, 4)
                + _brack([1], [-2])
                + (4, 1)
                + _brack([-2], [1])
                + (-4, 3, 4),
                (-4, -3, 4) + _brack([1], [-2]) + (-2,),
            ),
        ),
        "t13": (((-4, -3, 4) + _brack([1], [-2]) + (-2, -1), (1, 2, 4)),),
        "s1": (((1,), (-2,)),),
        "s2": (((3,), (-4,)),),
    }
    barcodes = {
        "gamma2": gamma2,
        "t1": t1, "t2": t2, "t3": t3, "t4": t4, "t5": t5, "t6": t6, "t7": t7,
        "t8": t8, "t9": t9, "t10": t10, "t11": t11, "t12": t12, "t13": t13,
        "s1": s1, "s2": s2,
    }
    coeffs = {
        "gamma2": -3,
        "t1": -1, "t2": -1, "t3": 2, "t4": 2, "t5": 1, "t6": -1, "t7": -1,
        "t8": 1, "t9": -1, "t10": 1, "t11": -1, "t12": -1, "t13": 1,
        "s1": 7, "s2": 2,
    }
    order = ["gamma2"] + ["t%d" % i for i in range(1, 14)] + ["s1", "s2"]
    return tuple(
        PsiTwist(
            name=name,
            coeff=coeffs[name],
            genus=2 if name == "gamma2" else 1,
            barcode=barcodes[name],
            spine=spines[name],
        )
        for name in order
    )


# The simpler alternative barcode for the t7 curve (same free-group element
# up to conjugation, so the same L_k values).
T7_ALTERNATIVE_BARCODE = (-3, 4, 1, -2, -1, -1, 4, 1, 1, 2, -1, -4, 3, -4)


def _hv(*coords):
    return HVector(coords)


A1 = _hv(1, 0, 0, 0)
A2 = _hv(0, 1, 0, 0)
B1 = _hv(0, 0, 1, 0)
B2 = _hv(0, 0, 0, 1)


def expected_tau3():
    """The 15-term degree-3 tree combination equal to tau_3(psi)."""
    terms = [
        (-1, (A2, A1, A1, B1, A1)),
        (-1, (A2, B1, A1, A2, A1)),
        (-1, (B2, A1, A1, B1, A1)),
        (-1, (B2, B1, A1, B1, A1)),
        (1, (B2, A2, A1, B1, A1)),
        (1, (B2, A2, A1, A2, A1)),
        (1, (B2, A2, A1, B2, A1)),
        (1, (B2, A2, B1, B2, A1)),
        (3, (B2, A2, A2, B1, A1)),
        (1, (B2, A2, A2, A2, A1)),
        (1, (B2, A2, B2, B1, A1)),
        (-1, (B2, A1, A2, B1, A1)),
        (1, (B2, B1, A2, B1, A1)),
        (1, (B2, A2, B2, A2, A1)),
        (-1, (B2, A2, B2, A2, B1)),
    ]
    res = D.DiagramSum()
    for c, labels in terms:
        res = res + tree(*labels).scale(c)
    return res


def expected_tau3_compact():
    """The 4-term compact form of tau_3(psi)."""
    terms = [
        (1, (B1 + A2, A1, A1 + A2 + B2, A2, A1 + B2)),
        (1, (A2 - A1, B2, A1 + B1, A1, B1 + B2)),
        (-1, (A2 - A1, B1, B2, A2, B1 + B2)),
        (1, (B2, A2, 2 * A2 - 2 * A1 + B2, B1, A1)),
    ]
    res = D.DiagramSum()
    for c, labels in terms:
        res = res + tree(*labels).scale(c)
    return res


def identity_lhs():
    """Three times the genus-2 twist image: the left side of the 3 tau_2 identity."""
    return (
        tree(A1, B1, A1, B1).scale(Fraction(1, 2))
        + tree(A1, B1, A2, B2)
        + tree(A2, B2, A2, B2).scale(Fraction(1, 2))
    ).scale(3)


def identity_rhs():
    """The odot combination equal to 3 tau_2(T_gamma2)."""
    terms = [
        (7, A1, B1),
        (2, A2, B2),
        (-1, A1, B1 + B2),
        (1, B1 + A2, B2),
        (-1, A1 + A2, B1),
        (-1, A1 + B1 + A2, B2),
        (1, A1 + A2 + B2, B1),
        (1, A1, B1 + A2 + B2),
        (-1, A2, A1 + B1 + B2),
        (2, A1, B1 + A2),
        (2, A2, A1 + B2),
        (-1, A1 - B2, B1),
        (-1, A1, B1 - A2),
        (-1, 2 * A1 + B2, B1 + A2),
        (1, A1 + B1 + A2, A1 + B1 + B2),
    ]
    res = D.DiagramSum()
    for c, u, v in terms:
        res = res + odot(u, v).scale(c)
    return res


def lemma_tree():
    """The degree-2 tree T(a2, b1, a1, a2) of the odot-decomposition lemma."""
    return tree(A2, B1, A1, A2)


def lemma_odot_combination():
    """Its 4-term odot decomposition."""
    return (
        odot(A1, B1)
        - odot(A1, B1 + A2)
        - odot(A1 + A2, B1)
        + odot(A1 + A2, B1 + A2)
    )


def bracket_decomposition_value(trunc=5):
    """Evaluate the bracket decomposition of tau_3(psi) as a tensor.

    Degree-1 and degree-2 trees are expanded by eta and bracketed as
    derivations; the five summands follow the published decomposition.
    """
    def d1(ds):
        return as_derivation(extract(D.eta(ds, trunc), 3), 1)

    def d2(ds):
        return as_derivation(extract(D.eta(ds, trunc), 4), 2)

    def br(x, y):
        return derivation_bracket(x, y)

    term1 = br(
        d1(tree(A1, B1, A2).scale(3) + tree(B2, A2, A1) + tree(A1, B1, B2)),
        d2(tree(A1, B1, A2, B2)),
    )
    term2 = br(d1(tree(B1, A1, A2 - B2)), d2(tree(A1, A2, B2, A1)))
    term3 = br(d1(tree(A2, B2, A1)), d2(tree(A2, B1, A1, A2)))
    term4 = br(
        d1(tree(A1, B1, A2)),
        br(d1(tree(A1, B1, B2)), d1(tree(A1 - B1, A2, B2))),
    )
    term5 = br(
        d1(tree(B1, A2, B2)),
        br(d1(tree(A1, B2, A2)), d1(tree(A1, B1, B2))),
    )
    return (
        term1.tensor + term2.tensor + term3.tensor + term4.tensor + term5.tensor
    )


def spine_pairs(twist):
    """Normalized homology pairs of a twist's spine, for the Morita formula."""
    pairs = []
    for a_bc, b_bc in twist.spine:
        u = barcode_homology(a_bc, GENUS)
        v = barcode_homology(b_bc, GENUS)
        w = omega(u, v)
        if w == -1:
            u, v = v, u
        elif w != 1:
            raise DomainError("spine pair of %s is not unimodular" % twist.name)
        pairs.append((u, v))
    return pairs


def load_psi():
    """The 16 twists defining psi, in the published order."""
    return _twists()


def psi_twist_entries():
    return [t.entry() for t in load_psi()]
