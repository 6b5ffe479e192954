"""Python smoke tests for the compiled module."""

import json
import math

import pytest

import echreeb


def test_base_profile_values():
    p = echreeb.FormProfile.taubes()
    a1, a2 = p.evaluate(0.0)
    assert a1 == pytest.approx(2.0)
    assert a2 == pytest.approx(0.0)
    a1, a2 = p.evaluate(math.pi / 2)
    assert a1 == pytest.approx(-1.0)
    assert abs(a2) < 1e-15
    cert = echreeb.contact_certificate(p)
    assert cert.pass_
    assert cert.worst_margin == pytest.approx(-math.sqrt(6.0), rel=1e-6)


def test_exceptional_rotation_exact():
    p = echreeb.FormProfile.taubes()
    exc = echreeb.exceptional_rotation(p, echreeb.Pole.north)
    assert float(exc.rotation) == pytest.approx(math.sqrt(1.5) - 1.0, abs=1e-15)
    assert exc.rotation == echreeb.Surd((-2, 2, 1, 2))
    assert exc.action == pytest.approx(4 * math.pi)

    q = echreeb.FormProfile.modified((1, 4), 2)
    assert echreeb.exceptional_rotation(q, echreeb.Pole.south).rotation == echreeb.Surd((1, 4))


def test_catalog_and_oracle():
    p = echreeb.FormProfile.taubes()
    mb = echreeb.morse_bott_catalog(p, 10.0)
    assert len(mb.families) == 5
    equator = min(mb.families, key=lambda f: abs(f.theta0 - math.pi / 2))
    assert equator.homology_class == 1
    assert equator.action == pytest.approx(2 * math.pi)
    assert echreeb.measure_period(p, equator) == pytest.approx(equator.action, abs=1e-8)
    rep = echreeb.linearized_return(p, equator)
    assert rep.classification == echreeb.OrbitClass.degenerate_shear
    assert rep.shear == pytest.approx(2 * math.pi * math.sqrt(6.0), abs=1e-4)


def test_split_catalog_roundtrip():
    p = echreeb.FormProfile.taubes()
    cat = echreeb.bourgeois_split(p, 10.0, 1e-3)
    assert len(cat.orbits) == 12
    doc = json.loads(cat.to_json())
    assert doc["boundary_type"] == "untwisted"
    names = {o["name"] for o in doc["orbits"]}
    assert "e@pole0#0" in names and "e@polepi#0" in names
    back = echreeb.OrbitCatalog.from_json(cat.to_json())
    assert back.to_json() == cat.to_json()


def test_index_calculus():
    rot = echreeb.Surd((-2, 2, 1, 2))  # sqrt6/2 - 1
    orbit = echreeb.elliptic_orbit("e0", rot, 4 * math.pi)
    assert echreeb.cz(orbit, 5) == 3
    plane = echreeb.special_plane(orbit)
    assert [echreeb.ech_index(plane, d) for d in range(1, 7)] == [0, 0, 0, 0, -2, -4]
    sphere = echreeb.exceptional_sphere()
    assert [echreeb.ech_index(sphere, d) for d in range(1, 7)] == [
        -d * (d - 1) for d in range(1, 7)
    ]
    assert echreeb.fredholm_index(plane) == 0
    cover = echreeb.plane_cover(echreeb.special_plane(echreeb.elliptic_orbit("e", (1, 32))), 3, 0, [1, 1, 1])
    assert echreeb.cover_index(cover).index == 4
    cert = echreeb.super_rigidity_certificate(cover)
    assert cert.status == echreeb.CertStatus.granted


def test_enumeration():
    p = echreeb.FormProfile.taubes()
    cat = echreeb.bourgeois_split(p, 10.0, 1e-3)
    out = echreeb.enumerate_generators(cat, 0, 6.0)
    assert any(len(g.pairs) == 0 for g in out.generators)
    for g in out.generators:
        assert g.total_class == 0
        assert g.action_hi < 6.0


def test_manifold_layer():
    assert echreeb.spin_c_dimension(3, 1, 9) == 0
    assert echreeb.gate_check([-1, 0]) == echreeb.GateResult.proceed
    assert echreeb.gate_check([-2]) == echreeb.GateResult.vanish
    assert echreeb.tensor_ordering_sign([1, 0], [1, 1]) == -1
    assert echreeb.CONTACT_STRUCTURE_EULER_NUMBER == -2
