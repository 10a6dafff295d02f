"""Pipeline gates, artifacts, and exactness claims."""

import pytest

from confn.certificates import LOWER, UPPER
from confn.descriptors import complete_intersection, del_pezzo7, hirzebruch1
from confn.engine import verify_certificate
from confn.lattice import DivisibilityAnnotation, FullLattice, IntersectionForm, PicardLattice
from confn.cones import Cone
from confn.descriptors import custom
from confn.pipelines import (
    PipelineError,
    pipeline_n2k1,
    pipeline_n3k1,
    pipeline_simple_surface,
    pipeline_simple_variety,
    synthetic_mod24_surface,
)


# ------------------------------------------------------------- mod-24 blow-up


def test_n2k1_resolves_to_one_with_verified_certificate():
    result = pipeline_n2k1(synthetic_mod24_surface())
    assert (result.interval.lo, result.interval.hi) == (1, 1)
    assert result.descriptor.provenance.constructor == "blowup_point"
    cert = next(
        c
        for c in result.interval.certificates
        if c.rule == "blowup-reider-mod24"
    )
    assert cert.kind == UPPER and cert.value == 1
    assert verify_certificate(result.descriptor, cert)
    # the lower bound is the non-nef canonical class of the blow-up
    assert any(
        c.rule == "not-nef-witness" and c.kind == LOWER
        for c in result.interval.certificates
    )


def test_n2k1_residue_sets_recomputed():
    result = pipeline_n2k1(synthetic_mod24_surface())
    cert = next(
        c
        for c in result.interval.certificates
        if c.rule == "blowup-reider-mod24"
    )
    data = cert.witness_data()
    assert data["squares_mod_24"] == sorted({(a * a) % 24 for a in range(24)})
    assert data["squares_mod_24"] == [0, 1, 4, 9, 12, 16]
    assert data["negated_square_residues"] == [0, 8, 12, 15, 20, 23]
    assert data["min_positive_self_intersection"] == 8
    assert data["square_zero_multiplicities"] == [0, 12]
    assert data["multiplicity_divisor"] == 12


def test_n2k1_requires_modulus_24():
    lat = PicardLattice(("H",))
    wrong = custom(
        dimension=2,
        lattice=lat,
        form=IntersectionForm.rank_one(lat, 2, 25),
        canonical=lat.make([1]),
        nef=Cone(lat, ((1,),)),
        annotations=(DivisibilityAnnotation(25, FullLattice()),),
    )
    with pytest.raises(PipelineError) as err:
        pipeline_n2k1(wrong)
    assert "24" in str(err.value)
    with pytest.raises(PipelineError):
        pipeline_n2k1(complete_intersection(3, (5,)))  # not a surface


def test_n2k1_tampered_certificate_rejected():
    from confn.certificates import make_certificate

    result = pipeline_n2k1(synthetic_mod24_surface())
    cert = next(
        c
        for c in result.interval.certificates
        if c.rule == "blowup-reider-mod24"
    )
    data = cert.witness_data()
    data["multiplicity_divisor"] = 1
    bad = make_certificate(cert.kind, cert.rule, cert.value, cert.citation,
                           premises=cert.premises, witness=data)
    assert not verify_certificate(result.descriptor, bad)
    # and against a descriptor that is not a blow-up at all
    assert not verify_certificate(synthetic_mod24_surface(), cert)


# ------------------------------------------------------------- double cover


def test_n3k1_from_del_pezzo():
    dp = del_pezzo7()
    result = pipeline_n3k1(dp, dp.lattice.make([3, -1, -1]))
    assert (result.interval.lo, result.interval.hi) == (1, 1)
    assert result.descriptor.provenance.constructor == "cyclic_cover"
    assert result.descriptor.dimension == 3
    rules = {c.rule for c in result.interval.certificates}
    assert "cover-degree" in rules
    assert "h0-vanishing" in rules
    for cert in result.interval.certificates:
        assert verify_certificate(result.descriptor, cert)
    assert any("Noether-Lefschetz" in note for note in result.notes)


def test_n3k1_from_hirzebruch():
    f1 = hirzebruch1()
    result = pipeline_n3k1(f1, f1.lattice.make([1, 2]))
    assert (result.interval.lo, result.interval.hi) == (1, 1)
    trace_cert = next(
        c for c in result.interval.certificates if c.rule == "h0-vanishing"
    )
    # the canonical sections split over the double cover and die on the
    # P^1 component, degree -1 and -2 respectively
    assert any("splits as the sum" in line for line in trace_cert.witness_data()["trace"])


def test_n3k1_gates():
    dp = del_pezzo7()
    # boundary class: nef but not strictly interior
    with pytest.raises(PipelineError) as err:
        pipeline_n3k1(dp, dp.lattice.make([1, 0, 0]))
    assert "strictly interior" in str(err.value)
    other = PicardLattice(("G",))
    with pytest.raises(PipelineError) as err2:
        pipeline_n3k1(dp, other.make([1]))
    assert "off the surface lattice" in str(err2.value)


def test_n3k1_rejects_weak_surface():
    # rank 2, odd form, odd canonical, unknown nef cone: every clause
    # that would improve on the plain surface bound of 3 is unavailable
    lat = PicardLattice(("A", "B"))
    opaque = custom(
        dimension=2,
        lattice=lat,
        form=IntersectionForm.from_gram(lat, [[1, 0], [0, 1]]),
        canonical=lat.make([1, 1]),
    )
    with pytest.raises(PipelineError) as err:
        pipeline_n3k1(opaque, lat.make([1, 1]))
    assert "at most 2" in str(err.value)


# ------------------------------------------------------------- section


def test_simple_surface_is_exactly_zero():
    y = complete_intersection(3, (2,))
    result = pipeline_simple_surface(y, y.lattice.make([1]), 6)
    assert (result.interval.lo, result.interval.hi) == (0, 0)
    rules = {c.rule for c in result.interval.certificates}
    assert "reider-divisible" in rules
    assert "canonical-gg" in rules
    for cert in result.interval.certificates:
        assert verify_certificate(result.descriptor, cert)


def test_simple_surface_propagates_gate_errors():
    from confn.descriptors import DescriptorError

    y = complete_intersection(3, (2,))
    with pytest.raises(DescriptorError) as err:
        pipeline_simple_surface(y, y.lattice.make([1]), 3)
    assert "p >=" in str(err.value)


# ------------------------------------------------------------- cover


def test_simple_variety_exact_zero_with_omega_note():
    y = complete_intersection(3, (2,))  # resolves to 3
    result = pipeline_simple_variety(y, y.lattice.make([1]), 5)
    assert (result.interval.lo, result.interval.hi) == (0, 0)
    assert any("ample and globally generated" in n for n in result.notes)
    cert = next(
        c for c in result.interval.certificates if c.rule == "cover-degree"
    )
    assert cert.witness_data()["omega_ample_and_globally_generated"] is True
    for c in result.interval.certificates:
        assert verify_certificate(result.descriptor, c)


def test_simple_variety_small_degree_reports_interval_without_claim():
    y = complete_intersection(3, (2,))  # resolves to 3
    result = pipeline_simple_variety(y, y.lattice.make([1]), 4, assume=("large_d",))
    # bound: max(0, 3 + 1 - 4) = 0 at the cover level, still exact here
    cert = next(
        c for c in result.interval.certificates if c.rule == "cover-degree"
    )
    assert cert.witness_data()["omega_ample_and_globally_generated"] is False
    assert any("not certified ample" in n for n in result.notes)


def test_simple_variety_on_higher_dimension_parent():
    from confn.descriptors import projective_space

    y = projective_space(4)
    result = pipeline_simple_variety(y, y.lattice.make([1]), 7)
    assert (result.interval.lo, result.interval.hi) == (0, 0)
    assert result.descriptor.dimension == 4
