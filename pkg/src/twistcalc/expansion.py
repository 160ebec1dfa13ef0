"""The symplectic Magnus expansion: log-values on generators and evaluation.

The default expansion is pinned in degree <= 3; its evaluation theta is a
monoid map from words in pi_1 (given as barcodes) to the truncated tensor
algebra.
"""

from __future__ import annotations

from fractions import Fraction

from . import tensor as T
from .surface import barcode_letters, boundary_barcode


class SymplecticExpansion:
    """Log-values l(alpha_i), l(beta_i) of a symplectic expansion, 1-indexed.

    Immutable; exponentials of the log-values are cached for evaluation.
    """

    def __init__(self, g, trunc, log_alpha, log_beta):
        self.g = g
        self.trunc = trunc
        self.log_alpha = list(log_alpha)
        self.log_beta = list(log_beta)
        self._theta_pos = {}
        self._theta_neg = {}
        for i in range(1, g + 1):
            self._theta_pos[(i, "a")] = T.exp_series(self.log_alpha[i - 1])
            self._theta_neg[(i, "a")] = T.exp_series(-self.log_alpha[i - 1])
            self._theta_pos[(i, "b")] = T.exp_series(self.log_beta[i - 1])
            self._theta_neg[(i, "b")] = T.exp_series(-self.log_beta[i - 1])

    def log_value(self, idx):
        """Log-value for tensor generator index idx in 1..2g."""
        if idx <= self.g:
            return self.log_alpha[idx - 1]
        return self.log_beta[idx - self.g - 1]

    def letter_value(self, idx, sign):
        key = (idx, "a") if idx <= self.g else (idx - self.g, "b")
        return self._theta_pos[key] if sign > 0 else self._theta_neg[key]


def default_expansion(g, trunc=5):
    """The symplectic expansion with the pinned degree <= 3 log-values.

    l(alpha_i) = a_i - 1/2 [a_i,b_i] + 1/12 [[a_i,b_i],b_i]
                 - 1/2 [sum_{j<i} [a_j,b_j], a_i]
    l(beta_i)  = b_i - 1/2 [a_i,b_i] + 1/4 [[a_i,b_i],b_i]
                 + 1/12 [a_i,[a_i,b_i]] + 1/2 [b_i, sum_{j<i} [a_j,b_j]]
    """
    if g < 1:
        raise T.DomainError("genus must be >= 1")
    if trunc < 2:
        raise T.DomainError("truncation degree must be >= 2")
    half = Fraction(1, 2)
    twelfth = Fraction(1, 12)
    quarter = Fraction(1, 4)
    a = [T.Tensor.generator(g, trunc, i) for i in range(1, g + 1)]
    b = [T.Tensor.generator(g, trunc, g + i) for i in range(1, g + 1)]
    log_alpha = []
    log_beta = []
    for i in range(g):
        ab = T.bracket(a[i], b[i])
        lower = T.Tensor.zero(g, trunc)
        for j in range(i):
            lower = lower + T.bracket(a[j], b[j])
        log_alpha.append(
            a[i]
            - half * ab
            + twelfth * T.bracket(ab, b[i])
            - half * T.bracket(lower, a[i])
        )
        log_beta.append(
            b[i]
            - half * ab
            + quarter * T.bracket(ab, b[i])
            + twelfth * T.bracket(a[i], ab)
            + half * T.bracket(b[i], lower)
        )
    return SymplecticExpansion(g, trunc, log_alpha, log_beta)


def theta(exp, bc):
    """Evaluate the expansion on a barcode: truncated product over letters."""
    res = T.Tensor.one(exp.g, exp.trunc)
    for idx, sign in barcode_letters(bc, exp.g):
        res = T.product(res, exp.letter_value(idx, sign))
    return res


def log_theta(exp, bc):
    """log of theta; zero constant term."""
    return T.log_series(theta(exp, bc))


def symplectic_defect(exp):
    """Degrees k <= trunc where theta(boundary) differs from exp(sum [a_i,b_i]).

    Returns a list of (degree, nonzero homogeneous part) pairs.
    """
    g, trunc = exp.g, exp.trunc
    omega_sum = T.Tensor.zero(g, trunc)
    for i in range(1, g + 1):
        omega_sum = omega_sum + T.bracket(
            T.Tensor.generator(g, trunc, i), T.Tensor.generator(g, trunc, g + i)
        )
    diff = theta(exp, boundary_barcode(g)) - T.exp_series(omega_sum)
    defects = []
    for k in range(trunc + 1):
        part = T.extract(diff, k)
        if not part.is_zero():
            defects.append((k, part))
    return defects
