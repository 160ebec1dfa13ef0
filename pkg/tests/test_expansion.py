from pathlib import Path

import pytest

from conftest import random_barcode, random_null_homologous_barcode, rng_for
from twistcalc.expansion import default_expansion, log_theta, symplectic_defect, theta
from twistcalc.surface import commutator_barcode, free_reduce
from twistcalc.tensor import (
    DomainError,
    Tensor,
    bracket,
    dynkin_defect,
    extract,
    product,
    render,
    truncate,
)

GOLDEN = Path(__file__).parent / "golden_defect_g2_N5.txt"


def gens(g, trunc):
    a = [Tensor.generator(g, trunc, i) for i in range(1, g + 1)]
    b = [Tensor.generator(g, trunc, g + i) for i in range(1, g + 1)]
    return a, b


# -- default expansion log-values -----------------------------------------


def test_log_alpha_degree_two():
    exp = default_expansion(1, 5)
    a, b = gens(1, 5)
    assert truncate(exp.log_alpha[0], 2) == a[0] - bracket(a[0], b[0]).scale("1/2")


def test_log_beta_degree_two():
    exp = default_expansion(1, 5)
    a, b = gens(1, 5)
    assert truncate(exp.log_beta[0], 2) == b[0] - bracket(a[0], b[0]).scale("1/2")


def test_log_alpha2_lower_genus_term():
    exp = default_expansion(2, 5)
    a, b = gens(2, 5)
    expected = (
        a[1]
        - bracket(a[1], b[1]).scale("1/2")
        + bracket(bracket(a[1], b[1]), b[1]).scale("1/12")
        - bracket(bracket(a[0], b[0]), a[1]).scale("1/2")
    )
    assert exp.log_alpha[1] == expected


def test_log_values_are_lie_series():
    exp = default_expansion(2, 5)
    for t in exp.log_alpha + exp.log_beta:
        assert dynkin_defect(t).is_zero()


def test_expansion_rejects_bad_arguments():
    with pytest.raises(DomainError):
        default_expansion(0, 5)
    with pytest.raises(DomainError):
        default_expansion(2, 1)


# -- theta ------------------------------------------------------------------


def test_theta_of_empty_word(exp_g2):
    assert theta(exp_g2, ()) == Tensor.one(2, 5)


def test_theta_degree_one_part(exp_g2):
    t = theta(exp_g2, (1,))
    assert truncate(t, 1) == Tensor.one(2, 5) + Tensor.generator(2, 5, 1)


def test_theta_of_inverse_pair(exp_g2):
    assert theta(exp_g2, (1, -1)) == Tensor.one(2, 5)


def test_theta_monoid_morphism(exp_g2):
    rng = rng_for("monoid")
    for _ in range(20):
        u = random_barcode(rng, 2, max_len=4)
        v = random_barcode(rng, 2, max_len=4)
        assert theta(exp_g2, u + v) == product(theta(exp_g2, u), theta(exp_g2, v))


def test_theta_free_reduce_invariance(exp_g2):
    rng = rng_for("theta-reduce")
    for _ in range(20):
        bc = random_barcode(rng, 2, max_len=8)
        assert theta(exp_g2, bc) == theta(exp_g2, free_reduce(bc))


# -- log_theta ---------------------------------------------------------------


def test_log_theta_of_generator(exp_g2):
    assert log_theta(exp_g2, (1,)) == exp_g2.log_alpha[0]


def test_log_theta_commutator_degree_two(exp_g2):
    # [alpha_1, beta_1^-1]: the degree-2 part is [u, v] with u=a1, v=-b1.
    a1 = Tensor.generator(2, 5, 1)
    b1 = Tensor.generator(2, 5, 3)
    l = log_theta(exp_g2, commutator_barcode([1], [-2]))
    assert extract(l, 2) == bracket(b1, a1)


def test_log_theta_is_primitive(exp_g2):
    rng = rng_for("primitive")
    for _ in range(15):
        bc = random_barcode(rng, 2, max_len=5)
        assert dynkin_defect(log_theta(exp_g2, bc)).is_zero()


def test_log_theta_null_homologous_starts_degree_two(exp_g2):
    rng = rng_for("nullh")
    for _ in range(10):
        bc = random_null_homologous_barcode(rng, 2)
        l = log_theta(exp_g2, bc)
        assert extract(l, 1).is_zero()


# -- symplectic defect ---------------------------------------------------------


@pytest.mark.parametrize("g", [1, 2, 3])
def test_defect_vanishes_through_degree_three(g):
    exp = default_expansion(g, 5)
    assert all(k > 3 for k, _ in symplectic_defect(exp))


def test_defect_golden_g2():
    defects = symplectic_defect(default_expansion(2, 5))
    assert [k for k, _ in defects] == [5]
    assert render(defects[0][1]) == GOLDEN.read_text().strip()
