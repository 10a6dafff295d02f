"""Construction correctness: products, blow-ups, sections, covers."""

import math
import random

import pytest

from confn.constructions import (
    blowup_point,
    box_sum,
    cover_data,
    cyclic_cover,
    hypersurface_section,
    product,
    product_blocks,
    split_product_class,
)
from confn.descriptors import (
    DescriptorError,
    ExactEqualsNef,
    UnderApprox,
    UnknownGG,
    abelian,
    complete_intersection,
    custom,
    del_pezzo7,
    hirzebruch1,
    projective_space,
)
from confn.lattice import (
    DivisibilityAnnotation,
    FullLattice,
    IntersectionForm,
    PicardLattice,
    Sublattice,
)


# ---------------------------------------------------------------- product


def test_product_form_against_binomial_oracle():
    # on X x Y the top power of a box-sum factors:
    # (A + B)^(p+q) = C(p+q, p) * (A^p)_X * (B^q)_Y
    rng = random.Random(20240517)
    f1 = hirzebruch1()
    p1 = projective_space(1)
    prod = product(f1, p1)
    for _ in range(60):
        a = f1.lattice.make([rng.randint(-3, 3), rng.randint(-3, 3)])
        b = p1.lattice.make([rng.randint(-3, 3)])
        total = box_sum(prod, a, b)
        lhs = prod.form.evaluate(total, total, total)
        rhs = math.comb(3, 2) * f1.form.evaluate(a, a) * b.coeffs[0]
        assert lhs == rhs


def test_product_mixed_monomials_vanish():
    # a pure first-factor triple cannot meet the fiber direction
    f1 = hirzebruch1()
    p1 = projective_space(1)
    prod = product(f1, p1)
    s = prod.lattice.make([1, 0, 0])
    assert prod.form.evaluate(s, s, s) == 0
    h = prod.lattice.make([0, 0, 1])
    assert prod.form.evaluate(h, h, h) == 0
    f = prod.lattice.make([0, 1, 0])
    assert prod.form.evaluate(s, f, h) == 1


def test_product_split_and_box_sum_round_trip():
    dp = del_pezzo7()
    p1 = projective_space(1)
    prod = product(dp, p1)
    cls_ = prod.lattice.make([3, -1, -2, 4])
    parts = split_product_class(prod, cls_)
    assert [p.coeffs for p in parts] == [(3, -1, -2), (4,)]
    assert box_sum(prod, *parts).coeffs == cls_.coeffs
    blocks = product_blocks(prod)
    assert [(off, p.rank) for off, p in blocks] == [(0, 3), (3, 1)]


def test_product_blocks_requires_product():
    with pytest.raises(DescriptorError):
        product_blocks(hirzebruch1())


def test_product_canonical_and_nef():
    f1 = hirzebruch1()
    p1 = projective_space(1)
    prod = product(f1, p1)
    assert prod.canonical.coeffs == (-2, -3, -2)
    assert prod.nef is not None
    assert prod.nef.contains(prod.lattice.make([1, 1, 1]))
    assert not prod.nef.contains(prod.lattice.make([1, 1, -1]))
    assert isinstance(prod.gg, ExactEqualsNef)
    assert prod.has_flag("toric")


def test_product_flag_and_gg_degradation():
    ab = abelian(1)
    p1 = projective_space(1)
    prod = product(ab, p1)
    assert not prod.has_flag("toric")
    assert not prod.has_flag("irregularity_zero")
    # the abelian factor contributes no certified classes
    assert isinstance(prod.gg, UnknownGG)


def test_product_basis_collision_renamed():
    a = projective_space(2)
    b = projective_space(3)
    prod = product(a, b)
    assert prod.lattice.basis == ("H_1", "H_2")


def test_product_isogeny_assertion_recorded():
    a = abelian(1)
    b = abelian(1)
    plain = product(a, b)
    assert plain.provenance.assertions == ()
    asserted = product(a, b, no_common_isogeny_factor=True)
    assert [x.name for x in asserted.provenance.assertions] == [
        "no_common_isogeny_factor"
    ]


# ---------------------------------------------------------------- blow-up


def test_blowup_exceptional_numbers():
    dp = del_pezzo7()
    up = blowup_point(dp)
    assert up.rank == 4
    e = up.lattice.make([0, 0, 0, 1])
    assert up.form.evaluate(e, e) == -1
    assert up.form.evaluate(up.canonical, e) == -1
    # (K'^2) = (K^2) - 1
    assert up.form.evaluate(up.canonical, up.canonical) == 6
    # pullbacks pair as before and miss E
    h = up.lattice.make([1, 0, 0, 0])
    assert up.form.evaluate(h, h) == 1
    assert up.form.evaluate(h, e) == 0
    assert up.nef is None
    assert isinstance(up.gg, UnknownGG)
    assert [cls_.coeffs for cls_, _ in up.known_effective] == [(0, 0, 0, 1)]


def test_blowup_annotation_demoted_to_pullback_sublattice():
    quartic = complete_intersection(2, (4,), very_general=True)
    assert quartic.annotation_moduli(full_only=True) == (4,)
    up = blowup_point(quartic)
    assert up.annotation_moduli(full_only=True) == ()
    assert up.annotation_moduli() == (4,)
    scope = up.annotations[0].scope
    assert isinstance(scope, Sublattice)
    assert [g.coeffs for g in scope.generators] == [(1, 0)]
    # E genuinely breaks full-lattice divisibility: (E^2) = -1
    e = up.lattice.make([0, 1])
    assert up.form.evaluate(e, e) == -1


def test_blowup_exceptional_name_avoids_collision():
    first = blowup_point(hirzebruch1())
    assert first.lattice.basis[-1] == "E"
    second = blowup_point(first)
    assert second.lattice.basis[-1] not in first.lattice.basis
    assert second.rank == 4


def test_blowup_rejects_non_surface():
    with pytest.raises(DescriptorError):
        blowup_point(projective_space(3))


# ------------------------------------------------------- section


def test_section_numbers_on_quadric():
    y = complete_intersection(3, (2,))
    h = y.lattice.make([1])
    s = hypersurface_section(y, h, 5)
    assert s.dimension == 2
    hh = s.lattice.make([1])
    # (H^2) on the section = (H.H.5H) on the quadric = 5 * 2
    assert s.form.evaluate(hh, hh) == 10
    # adjunction: K_S = (K_Y + 5H)|_S = 2H
    assert s.canonical.coeffs == (2,)
    assert s.annotation_moduli(full_only=True) == (5,)
    assert isinstance(s.gg, UnderApprox)
    assert [c.coeffs for c in s.gg.classes] == [(2,)]
    assert s.has_flag("very_general_nl")
    assert s.has_flag("irregularity_zero")


def test_section_degree_gate():
    y = complete_intersection(3, (2,))
    h = y.lattice.make([1])
    with pytest.raises(DescriptorError) as err:
        hypersurface_section(y, h, 4)
    assert "p >= 5" in str(err.value)


def test_section_requires_threefold_and_ample():
    h2 = projective_space(2)
    with pytest.raises(DescriptorError):
        hypersurface_section(h2, h2.lattice.make([1]), 6)
    y = complete_intersection(3, (2,))
    with pytest.raises(DescriptorError):
        hypersurface_section(y, y.lattice.zero(), 6)
    other = PicardLattice(("G",))
    with pytest.raises(DescriptorError):
        hypersurface_section(y, other.make([1]), 6)


# ------------------------------------------------------- cover


def test_cover_scales_form_and_shifts_canonical():
    p4 = projective_space(4)
    h = p4.lattice.make([1])
    x = cyclic_cover(p4, h, 7)
    assert x.dimension == 4
    hh = x.lattice.make([1])
    assert x.form.evaluate(hh, hh, hh, hh) == 7
    # K_X = K_Y + (d-1) L = -5H + 6H = H
    assert x.canonical.coeffs == (1,)
    # dimension >= 4: the Picard identification needs no extra assumption
    assert [a.name for a in x.provenance.assertions] == ["pic_pullback_iso"]
    assert x.nef is not None
    assert x.nef.contains(hh)
    assert x.has_flag("irregularity_zero")


def test_cover_data_round_trip():
    p4 = projective_space(4)
    h = p4.lattice.make([1])
    x = cyclic_cover(p4, h, 3)
    parent, branch, degree = cover_data(x)
    assert parent is p4
    assert branch.coeffs == (1,)
    assert degree == 3
    with pytest.raises(DescriptorError):
        cover_data(p4)


def test_cover_threefold_needs_assertion():
    y = projective_space(3)
    h = y.lattice.make([1])
    with pytest.raises(DescriptorError):
        cyclic_cover(y, h, 5)
    x = cyclic_cover(y, h, 5, assume=("large_d",))
    assert [a.name for a in x.provenance.assertions] == ["large_d"]


def test_cover_input_gates():
    y = projective_space(4)
    h = y.lattice.make([1])
    with pytest.raises(DescriptorError):
        cyclic_cover(y, h, 1)
    with pytest.raises(DescriptorError):
        cyclic_cover(hirzebruch1(), hirzebruch1().lattice.make([1, 1]), 2)
    other = PicardLattice(("G",))
    with pytest.raises(DescriptorError):
        cyclic_cover(y, other.make([1]), 2)
    # branch must be ample when the nef cone is known
    with pytest.raises(DescriptorError):
        cyclic_cover(y, y.lattice.zero(), 2)


def test_cover_annotation_modulus_scaled():
    lat = PicardLattice(("H",))
    y = custom(
        dimension=3,
        lattice=lat,
        form=IntersectionForm.rank_one(lat, 3, 4),
        canonical=lat.make([-2]),
        annotations=(DivisibilityAnnotation(2, FullLattice()),),
    )
    h = y.lattice.make([1])
    x = cyclic_cover(y, h, 3, assume=("large_d",), assume_ample=True)
    assert x.annotation_moduli(full_only=True) == (6,)
    hh = x.lattice.make([1])
    assert x.form.evaluate(hh, hh, hh) == 12
