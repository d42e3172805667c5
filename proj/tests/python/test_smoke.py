"""Smoke tests for the python bindings.

Runs against the extension on PYTHONPATH (built by CMake into
build/python_ext) through the kdecomp package wrapper.
"""

import pytest

import kdecomp as k

BOOLEAN = "semiring b\norder 2\nadd\n0 1\n1 1\nmul\n0 0\n0 1\n"

Z4 = (
    "semiring z4\norder 4\n"
    "add\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n"
    "mul\n0 0 0 0\n0 1 2 3\n0 2 0 2\n0 3 2 1\n"
)

BXB = (
    "semiring bxb\norder 4\n"
    "add\n0 1 2 3\n1 1 1 1\n2 1 2 1\n3 1 1 3\n"
    "mul\n0 0 0 0\n0 1 2 3\n0 2 2 0\n0 3 0 3\n"
)

# Max-chain addition 0<3<2<1; the zero ideal is k-irreducible but has no
# primary decomposition, so verification reports findings.
CHAIN4 = (
    "semiring chain4\norder 4\n"
    "add\n0 1 2 3\n1 1 1 1\n2 1 2 2\n3 1 2 3\n"
    "mul\n0 0 0 0\n0 1 2 3\n0 2 2 0\n0 3 0 0\n"
)


def test_parse_and_accessors():
    s = k.parse(BOOLEAN)
    assert s.name == "b"
    assert s.order == 2
    assert s.add(1, 1) == 1
    assert s.mul(1, 1) == 1
    assert s.pow(1, 3) == 1
    assert s.flags == {
        "cancellative": False,
        "yoked": True,
        "zerosumfree": True,
        "ring": False,
    }
    assert len(s.structure_hash) == 16
    assert k.parse(s.to_srs()).to_srs() == s.to_srs()
    assert "Semiring b" in repr(s)


def test_validate_builds_tables():
    s = k.validate("z2", [[0, 1], [1, 0]], [[0, 0], [0, 1]])
    assert s.flags["ring"] is True


def test_invalid_table_raises():
    with pytest.raises(k.KdecompError):
        k.validate("broken", [[0, 1], [1, 1]], [[0, 0], [0, 0]])


def test_load_missing_file_raises(tmp_path):
    with pytest.raises(k.KdecompError):
        k.load(str(tmp_path / "missing.srs"))


def test_load_roundtrip(tmp_path):
    path = tmp_path / "z4.srs"
    path.write_text(Z4)
    s = k.load(str(path))
    assert s.order == 4
    assert s.flags["ring"] is True


def test_ideal_lattice():
    s = k.parse(BXB)
    assert k.ideals(s) == [[0], [0, 2], [0, 3], [0, 1, 2, 3]]
    assert k.ideals(s, k_only=True) == [[0], [0, 2], [0, 3], [0, 1, 2, 3]]
    assert k.is_ideal(s, [0, 2])
    assert k.is_k_ideal(s, [0, 2])
    assert not k.is_ideal(s, [0, 1])


def test_closure_radical_colon():
    s = k.parse(Z4)
    assert k.k_closure(s, [0]) == [0]
    assert k.radical(s, [0]) == [0, 2]
    assert k.colon(s, [0], 2) == [0, 2]


def test_classify():
    s = k.parse(Z4)
    verdict = k.classify(s, [0])
    assert verdict == {
        "proper": True,
        "is_k": True,
        "prime": False,
        "primary": True,
        "radical": [0, 2],
        "k_irreducible": True,
    }


def test_decompose():
    s = k.parse(BXB)
    result = k.decompose(s, [0])
    assert result["components"] == [[0, 2], [0, 3]]
    assert result["radicals"] == [[0, 2], [0, 3]]
    assert result["reduced"] is True
    assert result["associated_primes"] == [
        {"prime": [0, 2], "witness": 3},
        {"prime": [0, 3], "witness": 2},
    ]


def test_decompose_counterexample_raises():
    s = k.parse(CHAIN4)
    with pytest.raises(k.KdecompError, match="not primary"):
        k.decompose(s, [0])


def test_verify_clean_and_finding_paths():
    clean = k.verify(k.parse(BOOLEAN))
    assert clean["passed"] is True
    assert clean["findings"] == []
    assert clean["counts"]["k_ideals"] == 2

    flawed = k.verify(k.parse(CHAIN4))
    assert flawed["passed"] is False
    assert any(
        f["id"] == "irreducible-not-primary" for f in flawed["findings"]
    )


def test_enumerate_semirings():
    census = k.enumerate_semirings(2)
    assert [s.name for s in census] == ["2_0", "2_1"]
    assert len(k.enumerate_semirings(4, iso=True)) == 36
    assert len(k.enumerate_semirings(4, iso=False)) == 69


def test_natpoly_surface():
    assert k.poly_to_string([1, 2, 1]) == "1 + 2x + x^2"
    assert k.principal_membership([1, 3, 3, 1], [1, 1]) == [1, 2, 1]
    assert k.principal_membership([1, 0, 0, 1], [1, 1]) is None
    assert k.yoked_difference([2, 9, 5], [5, 3, 11]) is None
    assert k.yoked_difference([1, 2], [4, 2]) == [3]

    cert = k.golan_certificate()
    assert cert["valid"] is True
    assert cert["u"] == "1 + 3x + 3x^2 + x^3"

    witness = k.sum_witness()
    assert (witness["x"], witness["y"], witness["valid"]) == (2, 1, True)

    report = k.principal_k_check(7, 500)
    assert report["passed"] is True
    assert report["pairs_checked"] == 501 * 501
