"""Casson-core homomorphisms on twist lists and degree-2 diagram sums.

d takes the value 4h(h-1) on a genus-h BSCC twist and d' the value
h(2h+1); d' factors through tau_2 via the linear map dbar_prime.  On a
J_3-certified list (tau_2 = 0) the Casson invariant is -d/24.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import tensor as T
from .diagrams import OdotSymbol
from .johnson import tau2
from .surface import omega


@dataclass(frozen=True)
class CassonReport:
    d_value: int
    d_prime_value: int
    n_genus1: Fraction
    n_genus2: Fraction
    lambda_value: Fraction | None = None

    def render(self):
        lines = [
            "d %d" % self.d_value,
            "d_prime %d" % self.d_prime_value,
            "n_genus1 %s" % self.n_genus1,
            "n_genus2 %s" % self.n_genus2,
        ]
        if self.lambda_value is not None:
            lines.append("lambda %s" % self.lambda_value)
        return "\n".join(lines)


def d_core(twists):
    """Signed sum of 4h(h-1) over the twist list."""
    return sum(e.coeff * 4 * e.genus * (e.genus - 1) for e in twists)


def d_prime(twists):
    """Signed sum of h(2h+1) over the twist list."""
    return sum(e.coeff * e.genus * (2 * e.genus + 1) for e in twists)


def dbar_prime(d2):
    """The factored map on degree-2 diagram sums.

    dbar'(a (.) b) = 3 omega(a,b)^2 and
    dbar'(T(a,b,c,d)) = 4 w(a,b) w(c,d) - 2 w(a,d) w(b,c) + 2 w(a,c) w(b,d).
    """
    total = Fraction(0)
    for node, coeff in d2.items.items():
        if node.degree != 2:
            raise T.DomainError("dbar_prime is defined on degree-2 diagrams only")
        if isinstance(node, OdotSymbol):
            val = 3 * omega(node.u, node.v) ** 2
        else:
            a, b, c, d = node.labels
            val = (
                4 * omega(a, b) * omega(c, d)
                - 2 * omega(a, d) * omega(b, c)
                + 2 * omega(a, c) * omega(b, d)
            )
        total += coeff * val
    return total


class CertificateError(ValueError):
    """Raised when a J_3 certificate (tau_2 = 0) is required but fails."""

    def __init__(self, tau2_value):
        self.tau2_value = tau2_value
        super().__init__("tau_2 of the twist list is nonzero: %s" % T.render(tau2_value))


def lambda_J3(exp, twists):
    """The Casson homomorphism -d/24 on a J_3-certified twist list."""
    t2 = tau2(exp, twists)
    if not t2.is_zero():
        raise CertificateError(t2)
    return Fraction(-d_core(twists), 24)


def twist_audit(twists, exp=None):
    """Separate the signed genus-1 and genus-2 twist counts from d and d'.

    n_genus2 = d/8 and n_genus1 = (4d' - 5d)/12.  If an expansion is given
    and the list is J_3-certified, the lambda value is included.
    """
    d = d_core(twists)
    dp = d_prime(twists)
    lam = None
    if exp is not None:
        try:
            lam = lambda_J3(exp, twists)
        except CertificateError:
            lam = None
    return CassonReport(
        d_value=d,
        d_prime_value=dp,
        n_genus1=Fraction(4 * dp - 5 * d, 12),
        n_genus2=Fraction(d, 8),
        lambda_value=lam,
    )
