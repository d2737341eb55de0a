import itertools
import math
import random
from fractions import Fraction

import pytest

from braidtiles.linalg import (
    ExactMatrix,
    SymplecticForm,
    format_scalar,
    invariant_factors,
    is_symplectic,
    parse_scalar,
    smith_normal_form,
)


def _int_det(rows):
    """Laplace expansion over Python ints; independent of ExactMatrix."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        total += (-1) ** j * rows[0][j] * _int_det(minor)
    return total


def _determinantal_divisors(rows):
    """gcd of all k-by-k minors, for k = 1..min shape."""
    r, c = len(rows), len(rows[0]) if rows else 0
    out = []
    for k in range(1, min(r, c) + 1):
        g = 0
        for rsel in itertools.combinations(range(r), k):
            for csel in itertools.combinations(range(c), k):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                g = math.gcd(g, _int_det(sub))
        out.append(g)
    return out


def _factors_from_divisors(divs):
    factors = []
    prev = 1
    for d in divs:
        if d == 0:
            break
        factors.append(d // prev)
        prev = d
    return factors


def test_constructor_normalizes_fractions():
    m = ExactMatrix.from_rows([[Fraction(4, 2), Fraction(1, 3)]], cols=2)
    assert m.entries[0][0] == 2
    assert isinstance(m.entries[0][0], int)
    assert m.entries[0][1] == Fraction(1, 3)


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        ExactMatrix.from_rows([[1, 2], [3]])


def test_identity_and_zeros():
    assert ExactMatrix.identity(3).is_identity()
    assert ExactMatrix.zeros(2, 3).is_zero()
    assert not ExactMatrix.zeros(2, 2).is_identity()


def test_product_and_shape_errors():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    b = ExactMatrix.from_rows([[0, 1], [1, 0]])
    assert (a * b).entries == ((2, 1), (4, 3))
    with pytest.raises(ValueError):
        a * ExactMatrix.zeros(3, 2)
    with pytest.raises(ValueError):
        a + ExactMatrix.zeros(2, 3)


def test_pow_and_inverse():
    a = ExactMatrix.from_rows([[1, 1], [0, 1]])
    assert (a ** 5).entries == ((1, 5), (0, 1))
    assert (a ** -2).entries == ((1, -2), (0, 1))
    assert (a ** 0).is_identity()
    assert (a.inverse() * a).is_identity()
    with pytest.raises(ValueError):
        ExactMatrix.zeros(2, 2).inverse()


def test_inverse_has_exact_fractions():
    a = ExactMatrix.from_rows([[2, 0], [0, 3]])
    inv = a.inverse()
    assert inv.entries == ((Fraction(1, 2), 0), (0, Fraction(1, 3)))


def test_det_frozen_values():
    assert ExactMatrix.from_rows([[1, 2], [3, 4]]).det() == -2
    assert ExactMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]).det() == 624
    assert ExactMatrix.identity(0).det() == 1
    with pytest.raises(ValueError):
        ExactMatrix.zeros(2, 3).det()


def test_det_matches_expansion_oracle():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 4)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert ExactMatrix.from_rows(rows).det() == _int_det(rows)


def test_block_diagonal():
    a = ExactMatrix.from_rows([[1, 2]], cols=2)
    b = ExactMatrix.from_rows([[3], [4]], cols=1)
    m = ExactMatrix.block_diagonal([a, b])
    assert m.entries == ((1, 2, 0), (0, 0, 3), (0, 0, 4))
    assert ExactMatrix.block_diagonal([]).rows == 0


def test_degenerate_shapes():
    e = ExactMatrix.zeros(0, 3)
    assert (e * ExactMatrix.zeros(3, 2)).cols == 2
    assert e.transpose().rows == 3 and e.transpose().cols == 0
    assert ExactMatrix.identity(0).is_identity()


def test_scalar_text_round_trip():
    for x in (0, -7, Fraction(3, 4), Fraction(-1, 2)):
        assert parse_scalar(format_scalar(x)) == x
    with pytest.raises(ValueError):
        parse_scalar("1.5")


def test_json_round_trip():
    m = ExactMatrix.from_rows([[Fraction(1, 2), -3], [0, Fraction(7, 5)]])
    assert m.to_json_obj() == [["1/2", "-3"], ["0", "7/5"]]
    assert ExactMatrix.from_json_obj(m.to_json_obj()) == m


def test_str_rendering():
    m = ExactMatrix.from_rows([[1, -10], [0, 2]])
    assert str(m) == "[  1  -10]\n[  0    2]"


# -- Smith normal form -------------------------------------------------------

# expected diagonals cross-checked against an independent implementation
SNF_CASES = [
    ([[2, 0], [0, 3]], [1, 6]),
    ([[2, 4, 4], [-6, 6, 12], [10, 4, 16]], [2, 2, 156]),
    ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], [1, 3, 0]),
    ([[0, 0], [0, 0]], [0, 0]),
]


@pytest.mark.parametrize("rows,diag", SNF_CASES)
def test_smith_frozen_diagonals(rows, diag):
    m = ExactMatrix.from_rows(rows)
    d, u, v = smith_normal_form(m)
    assert [d.entries[i][i] for i in range(len(diag))] == diag
    assert u * m * v == d


def test_smith_rejects_non_integer():
    with pytest.raises(ValueError):
        smith_normal_form(ExactMatrix.from_rows([[Fraction(1, 2)]]))


def test_smith_random_properties():
    rng = random.Random(7)
    for _ in range(60):
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        m = ExactMatrix.from_rows(rows, cols=c)
        d, u, v = smith_normal_form(m)
        assert u * m * v == d
        assert abs(u.det()) == 1 and abs(v.det()) == 1
        diag = [d.entries[i][i] for i in range(min(r, c))]
        assert all(
            d.entries[i][j] == 0 for i in range(r) for j in range(c) if i != j
        )
        assert all(x >= 0 for x in diag)
        nonzero = [x for x in diag if x]
        assert all(nonzero[i + 1] % nonzero[i] == 0 for i in range(len(nonzero) - 1))
        # invariant factors agree with the gcd-of-minors definition
        assert list(invariant_factors(m)) == _factors_from_divisors(
            _determinantal_divisors(rows)
        )


def test_invariant_factors_frozen():
    assert invariant_factors(ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])) == (1, 3)
    assert invariant_factors(ExactMatrix.zeros(2, 2)) == ()


# -- symplectic form ----------------------------------------------------------

def test_form_matrix_genus_one():
    f = SymplecticForm(1)
    assert f.dim == 2
    assert f.matrix.entries == ((0, 1), (-1, 0))


def test_pairing_is_alternating():
    f = SymplecticForm(2)
    u, v = (1, 2, 0, -1), (0, 1, 1, 3)
    assert f.pairing(u, v) == -f.pairing(v, u)
    assert f.pairing(u, u) == 0


def test_pairing_basis_values():
    # x_i pairs with y_i to 1 and with everything else to 0
    f = SymplecticForm(2)
    basis = [tuple(1 if k == j else 0 for k in range(4)) for j in range(4)]
    x1, y1, x2, y2 = basis
    assert f.pairing(x1, y1) == 1
    assert f.pairing(y1, x1) == -1
    assert f.pairing(x1, x2) == 0
    assert f.pairing(x1, y2) == 0


def test_is_symplectic():
    f = SymplecticForm(1)
    assert is_symplectic(ExactMatrix.identity(2), f)
    assert is_symplectic(ExactMatrix.from_rows([[1, 1], [0, 1]]), f)
    assert not is_symplectic(ExactMatrix.from_rows([[2, 0], [0, 1]]), f)
    with pytest.raises(ValueError):
        is_symplectic(ExactMatrix.zeros(3, 3), f)
