import os
from fractions import Fraction
from pathlib import Path

import pytest

import freenil

DATA = Path(os.environ.get("FREENIL_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return freenil.Algebra.from_file(str(DATA / name))


def test_hall_basis_and_witt():
    words = freenil.hall_basis(2, 4)
    assert words[:3] == ["x2", "x1", "[x1,x2]"]
    assert len(words) == 8
    assert [freenil.witt_dimension(2, s) for s in range(1, 7)] == [2, 1, 2, 3, 6, 9]


def test_bracket_normalizes():
    a = freenil.FreeLieAlgebra(2, 4)
    assert a.dim == 8
    assert a.bracket("x2", "[x1,x2]") == "-[[x1,x2],x2]"
    assert a.normalize("[x2,x1]") == "-[x1,x2]"
    assert a.coordinates("1/2*x1")[1] == Fraction(1, 2)


def test_parse_error():
    a = freenil.FreeLieAlgebra(2, 3)
    with pytest.raises(freenil.ParseError):
        a.bracket("x1", "x3")
    with pytest.raises(freenil.FreenilError):
        freenil.FreeLieAlgebra(1, 3)


def test_extend_maps():
    a = freenil.FreeLieAlgebra(2, 3)
    d = a.extend_derivation(["x1", "x2"])
    assert [d[i][i] for i in range(a.dim)] == [1, 1, 2, 3, 3]
    assert a.is_automorphism_map(["x1 + [x1,x2]", "x2"])
    assert not a.is_automorphism_map(["x1", "[x1,x2]"])


def test_fixture_classification():
    n1, n2, n3 = load("n1.alg"), load("n2.alg"), load("n3.alg")
    assert n1.validate() and n2.validate() and n3.validate()
    assert n3.lower_central_series() == [5, 3, 2, 1, 0]
    assert (n1.type, n1.nilindex) == (4, 3)
    assert n1.is_characteristically_nilpotent()
    assert not n2.is_characteristically_nilpotent()
    assert len(n3.derivations()) == 8


def test_diagonal_maps_on_n2():
    n2 = load("n2.alg")
    for lam in (0, 1, 5):
        diag = [[lam if i == j else 0 for j in range(5)] for i in range(5)]
        diag[4][4] = 2 * lam
        assert n2.is_derivation(diag)
    assert n2.is_automorphism("2,0,0,0,0;0,2,0,0,0;0,0,2,0,0;0,0,0,2,0;0,0,0,0,4")


def test_presentation_of_n3():
    n3 = load("n3.alg")
    p = freenil.present(freenil.FreeLieAlgebra(2, 4), n3)
    assert p.kernel_dim == 3
    assert not p.homogeneous
    assert (p.der_preserving_dim, p.der_into_dim) == (14, 6)
    assert len(p.induced_derivations()) == 8
    assert p.representatives() == ["x2", "x1", "[x1,x2]", "[[x1,x2],x2]", "[[x1,x2],x1]"]

    hat = [[Fraction(0)] * 5 for _ in range(5)]
    for i in range(5):
        hat[i][i] = Fraction(2) ** (i + 1)
    phi = p.lift(hat)
    assert len(phi) == 8
    check = p.aut_check(phi)
    assert check["is_automorphism"] and check["preserves_ideal"] and not check["in_circ"]


def test_presentation_of_n2_with_msg():
    p = freenil.present(freenil.FreeLieAlgebra(4, 2), load("n2.alg"), ["u1", "u2", "u3", "u4"])
    assert p.kernel_dim == 5
    assert p.homogeneous
    with pytest.raises(freenil.PreconditionError):
        freenil.present(freenil.FreeLieAlgebra(2, 3), load("n3.alg"))
