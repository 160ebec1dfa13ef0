from fractions import Fraction

import pytest

from conftest import rng_for
from twistcalc.diagrams import DiagramSum, eta, kappa, morita_tau2, odot, tree
from twistcalc.surface import HVector
from twistcalc.tensor import DomainError

G = 2
N = 5
A1 = HVector.basis(G, 1)
A2 = HVector.basis(G, 2)
B1 = HVector.basis(G, 3)
B2 = HVector.basis(G, 4)


def random_hv(rng, lo=-2, hi=2):
    return HVector(rng.randint(lo, hi) for _ in range(2 * G))


def ihx_combination(a, b, c, d):
    return tree(a, b, c, d) - tree(a, c, b, d) - tree(a, d, c, b)


# -- eta ---------------------------------------------------------------


def test_eta_multilinear():
    rng = rng_for("multilinear")
    for _ in range(10):
        u, v, w, x, y = (random_hv(rng) for _ in range(5))
        lhs = eta(tree(u + v, w, x, y), N)
        rhs = eta(tree(u, w, x, y), N) + eta(tree(v, w, x, y), N)
        assert lhs == rhs
        lhs3 = eta(tree(u, v + w, x), N)
        rhs3 = eta(tree(u, v, x), N) + eta(tree(u, w, x), N)
        assert lhs3 == rhs3


def test_eta_antisymmetry_degree_one():
    # AS at the single trivalent vertex: swapping two adjacent subtrees negates.
    assert eta(tree(A1, B1, A2), N) == -eta(tree(A1, A2, B1), N)


def test_eta_antisymmetry_degree_two():
    assert eta(tree(A1, B1, A2, B2), N) == -eta(tree(B1, A1, A2, B2), N)
    assert eta(tree(A1, B1, A2, B2), N) == -eta(tree(A1, B1, B2, A2), N)


def test_eta_ihx_vanishes():
    rng = rng_for("ihx")
    for _ in range(15):
        a, b, c, d = (random_hv(rng) for _ in range(4))
        assert eta(ihx_combination(a, b, c, d), N).is_zero()


def test_eta_degree_one_reading():
    # eta(T(x,y,z)) = x (x) [z,y] + y (x) [x,z] + z (x) [y,x]
    from twistcalc.tensor import Tensor, bracket, product, cyclicize

    a1 = Tensor.generator(G, N, 1)
    b1 = Tensor.generator(G, N, 3)
    a2 = Tensor.generator(G, N, 2)
    expected = (
        product(a1, bracket(a2, b1))
        + product(b1, bracket(a1, a2))
        + product(a2, bracket(b1, a1))
    )
    assert eta(tree(A1, B1, A2), N) == expected


# -- odot ----------------------------------------------------------------


def test_odot_is_half_symmetric_tree():
    assert eta(odot(A1, B1), N) == eta(tree(A1, B1, A1, B1), N).scale(Fraction(1, 2))


def test_odot_symmetric():
    rng = rng_for("odotsym")
    for _ in range(10):
        u, v = random_hv(rng), random_hv(rng)
        assert eta(odot(u, v), N) == eta(odot(v, u), N)


def test_odot_bilinearity_defect_is_tree_sum():
    lhs = eta(odot(A1, B1 + A2), N) - eta(odot(A1, B1), N) - eta(odot(A1, A2), N)
    rhs = (eta(tree(A1, B1, A1, A2), N) + eta(tree(A1, A2, A1, B1), N)).scale(
        Fraction(1, 2)
    )
    assert lhs == rhs


# -- morita formula ---------------------------------------------------------


def test_morita_tau2_genus_one():
    assert morita_tau2([(A1, B1)]) == odot(A1, B1)


def test_morita_tau2_genus_two():
    expected = odot(A1, B1) + odot(A2, B2) + tree(A1, B1, A2, B2)
    assert morita_tau2([(A1, B1), (A2, B2)]) == expected


def test_morita_tau2_rejects_non_symplectic():
    with pytest.raises(DomainError):
        morita_tau2([(A1, A2)])
    with pytest.raises(DomainError):
        morita_tau2([(A1, B1), (A1 + A2, B2)])


# -- kappa -------------------------------------------------------------------


def test_kappa_kills_odot():
    assert kappa(odot(A1, B1)) == {}
    assert kappa(odot(A1 + B2, B1 - A2)) == {}


def test_kappa_of_basis_tree():
    # a1 ^ b1 ^ a2 ^ b2 sorted to indices (0,1,2,3) picks up one transposition.
    assert kappa(tree(A1, B1, A2, B2)) == {(0, 1, 2, 3): 2}
    assert kappa(tree(A1, A2, B1, B2)) == {(0, 1, 2, 3): 1}


def test_kappa_kills_ihx_mod_three():
    rng = rng_for("kappa-ihx")
    for _ in range(50):
        a, b, c, d = (random_hv(rng) for _ in range(4))
        assert kappa(ihx_combination(a, b, c, d)) == {}


def test_kappa_linear_in_labels_mod_three():
    rng = rng_for("kappa-lin")
    for _ in range(20):
        u, v, w, x, y = (random_hv(rng) for _ in range(5))
        lhs = kappa(tree(u + v, w, x, y))
        rhs = kappa(tree(u, w, x, y) + tree(v, w, x, y))
        assert lhs == rhs


def test_kappa_rejects_wrong_degree():
    with pytest.raises(DomainError):
        kappa(tree(A1, B1, A2))
