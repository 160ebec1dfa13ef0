"""Genus-g surface data: the symplectic form, and barcodes for words in pi_1.

A barcode is a sequence of nonzero integers k with |k| <= 2g; the entry
+-(2i-1) stands for alpha_i^{+-1} and +-2i for beta_i^{+-1}.
"""

from __future__ import annotations

from .tensor import DomainError


class BarcodeError(ValueError):
    """Raised for barcode entries outside the allowed range."""


class HVector:
    """Integer vector of length 2g in the homology basis (a_1..a_g, b_1..b_g)."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(int(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError("HVector is immutable")

    @classmethod
    def zero(cls, g):
        return cls((0,) * (2 * g))

    @classmethod
    def basis(cls, g, idx):
        """The basis vector for generator index idx in 1..2g."""
        coords = [0] * (2 * g)
        coords[idx - 1] = 1
        return cls(coords)

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        if not isinstance(other, HVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other):
        if len(self.coords) != len(other.coords):
            raise DomainError("HVector length mismatch")
        return HVector(u + v for u, v in zip(self.coords, other.coords))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HVector(-c for c in self.coords)

    def __rmul__(self, n):
        return HVector(n * c for c in self.coords)

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __repr__(self):
        return "HVector(%r)" % (self.coords,)


def omega(u, v):
    """The symplectic form with omega(a_i, b_i) = 1 on the standard basis."""
    if len(u) != len(v):
        raise DomainError("omega requires vectors of equal length")
    if len(u) % 2 != 0:
        raise DomainError("omega requires even-length vectors")
    g = len(u) // 2
    uc, vc = u.coords, v.coords
    return sum(uc[i] * vc[g + i] - uc[g + i] * vc[i] for i in range(g))


# -- barcodes ----------------------------------------------------------


def validate_barcode(bc, g=None):
    """Check entries are nonzero and, if g is given, within [-2g, 2g]."""
    for k in bc:
        if k == 0:
            raise BarcodeError("barcode entries must be nonzero")
        if g is not None and abs(k) > 2 * g:
            raise BarcodeError("barcode entry %d out of range for genus %d" % (k, g))
    return tuple(bc)


def barcode_to_word(bc, g=None):
    """Decode a barcode to a list of (generator name, sign) pairs.

    Entry +-(2i-1) maps to ('a<i>', +-1) for alpha_i, entry +-2i to
    ('b<i>', +-1) for beta_i.
    """
    bc = validate_barcode(bc, g)
    word = []
    for k in bc:
        sign = 1 if k > 0 else -1
        m = abs(k)
        name = "a%d" % ((m + 1) // 2) if m % 2 == 1 else "b%d" % (m // 2)
        word.append((name, sign))
    return word


def barcode_letters(bc, g):
    """Decode a barcode to (tensor generator index, sign) pairs for genus g."""
    bc = validate_barcode(bc, g)
    letters = []
    for k in bc:
        sign = 1 if k > 0 else -1
        m = abs(k)
        if m % 2 == 1:
            letters.append(((m + 1) // 2, sign))
        else:
            letters.append((g + m // 2, sign))
    return letters


def barcode_string(bc):
    """Render a barcode as 'a1+b1-...' matching the alpha/beta naming."""
    out = []
    for k in validate_barcode(bc):
        m = abs(k)
        name = "a%d" % ((m + 1) // 2) if m % 2 == 1 else "b%d" % (m // 2)
        out.append(name + ("+" if k > 0 else "-"))
    return "".join(out)


def inverse_barcode(bc):
    """The reversed, negated barcode, representing the inverse word."""
    return tuple(-k for k in reversed(bc))


def commutator_barcode(u, v):
    """u v u^-1 v^-1 with inverses as reversed, negated sequences."""
    u = validate_barcode(u)
    v = validate_barcode(v)
    return u + v + inverse_barcode(u) + inverse_barcode(v)


def conjugate_barcode(u, v):
    """u v ubar vbar where xbar is x reversed and negated."""
    return commutator_barcode(u, v)


def boundary_barcode(g):
    """The boundary word zeta as a barcode: product of beta_i^-1 alpha_i beta_i alpha_i^-1."""
    if g < 1:
        raise DomainError("genus must be >= 1")
    bc = []
    for i in range(1, g + 1):
        bc.extend([-2 * i, 2 * i - 1, 2 * i, -(2 * i - 1)])
    return tuple(bc)


def free_reduce(bc):
    """Cancel adjacent inverse pairs (k, -k) until none remain."""
    bc = validate_barcode(bc)
    out = []
    for k in bc:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


def barcode_homology(bc, g):
    """The homology class of the word encoded by a barcode."""
    coords = [0] * (2 * g)
    for idx, sign in barcode_letters(bc, g):
        coords[idx - 1] += sign
    return HVector(coords)


def parse_barcode(text):
    """Parse the text form: space-separated signed decimal integers."""
    entries = tuple(int(tok) for tok in text.split())
    return validate_barcode(entries)


def format_barcode(bc):
    return " ".join(str(k) for k in bc)
