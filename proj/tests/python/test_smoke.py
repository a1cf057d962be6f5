from fractions import Fraction

import pytest

import shadowlab as sl


def test_series():
    t = sl.theta_e8(25)
    assert t.coeff(8) == 240
    assert t.coeff(24) == 6720
    assert sl.theta_z(17).terms() == {0: 1, 4: 2, 16: 2}
    assert sl.theta_z_shadow(10).coeff(1) == 2
    assert (sl.theta_z(30) ** 8).coeff(4) == 16


def test_decomposition():
    assert sl.decompose(23, [1, 0, 0]) == [1, Fraction(-23, 8), 0]
    assert sl.decompose(16, [1, 0, 480]) == [1, -2, 1]
    assert sl.evaluate(12, [1, Fraction(-3, 2)], 13).coeff(8) == 264
    assert sl.shadow_series(23, sl.extremal_theta(23), 16).coeff(15) == 94208
    assert sl.predict_shadow_defect(16, 480) == 1
    assert sl.check_congruence(16, 480, even=True)
    assert not sl.check_congruence(16, 480)
    with pytest.raises(ArithmeticError):
        sl.predict_shadow_defect(20, 100)


def test_lattices():
    e8 = sl.catalog("E8")
    assert e8.rank == 8 and e8.determinant() == 1 and e8.is_even()
    assert sl.enumerate_norms(e8, 2) == {0: 1, 2: 240}
    o23 = sl.catalog("O23")
    assert sl.min_characteristic_norm(o23) == 15
    assert sl.shadow_norm_counts(o23, 15)[15] == 94208
    r, core = sl.reduce(sl.direct_sum(e8, sl.integer_lattice(2)))
    assert r == 2 and core.rank == 8
    assert sl.root_system(sl.catalog("A7^2D5")) == "A7^2 D5"
    assert sl.Lattice([[1, 0], [0, 1]]).is_unimodular()
    with pytest.raises(ValueError):
        sl.catalog("nope")


def test_codes():
    z = sl.BinaryCode(2, ["11"])
    assert sl.is_self_dual(z)
    assert sl.shadow_enumerator_string(z) == "2*x*y"
    e8 = sl.code_catalog("e8")
    assert sl.weight_enumerator(e8)[4] == 14
    assert sl.gleason_decompose(e8) == [1, -1]
    g22 = sl.code_catalog("g22")
    assert sl.shadow_enumerator(g22)[7] == 352
    r, core = sl.split_z(sl.code_direct_sum(e8, sl.repetition_power(1)))
    assert r == 1 and core.length == 8
    assert sl.predict_code_defect(16, 28) == 1


def test_construction_a():
    lat = sl.construction_a(sl.code_catalog("d12"))
    assert sl.enumerate_norms(lat, 2)[2] == 264
    report = sl.verify_theta_identity(sl.code_catalog("e8"), 40)
    assert report["ok"] and report["theta_agrees"]
    shadow = sl.verify_shadow_identity(sl.code_catalog("d12"))
    assert shadow["char_count"] == 24 and shadow["lift_multiplicity"] == 4


def test_verify_report():
    report = sl.verify("congruence")
    assert report["pass"]
    assert report["summary"]["passed"] == report["summary"]["total"]
