"""End-to-end constructions with certified exact convex Fujita numbers.

Each pipeline assembles a descriptor through the transforms in
``constructions``, resolves it, and tightens the interval with a
construction-specific certificate where the generic rules are not enough.
They return the descriptor together with the final interval so callers
can re-verify every certificate independently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificates import LOWER, UPPER, Certificate, make_certificate
from .cones import Cone
from .constructions import blowup_point, box_sum, cyclic_cover, hypersurface_section, product
from .descriptors import DescriptorError, VarietyDescriptor, custom, projective_space
from .engine import FujitaInterval, resolve
from .lattice import DivisibilityAnnotation, FullLattice, IntersectionForm, PicardLattice


class PipelineError(DescriptorError):
    """A pipeline precondition failed; the message names the gate."""


@dataclass(frozen=True)
class PipelineResult:
    descriptor: VarietyDescriptor
    interval: FujitaInterval
    notes: tuple[str, ...] = ()


def _merge(base: FujitaInterval, extra: tuple[Certificate, ...]) -> FujitaInterval:
    certs = base.certificates + extra
    lo = max([0] + [c.value for c in certs if c.kind == LOWER])
    hi = min(c.value for c in certs if c.kind == UPPER)
    if lo > hi:
        raise PipelineError(
            f"pipeline certificates crossed the interval: lo {lo} > hi {hi}"
        )
    return FujitaInterval(lo, hi, certs, base.advisories)


def synthetic_mod24_surface() -> VarietyDescriptor:
    """A minimal surface of general type with all pairings divisible by 24.

    Rank-1 model with (H^2) = 24 and K = H; the canonical class is ample,
    so the surface is minimal and blowing up a point produces a non-nef
    canonical class.  Stands in for a very general degree-24 hypersurface
    section of a polarized threefold.
    """
    lat = PicardLattice(("H",))
    return custom(
        dimension=2,
        lattice=lat,
        form=IntersectionForm.rank_one(lat, 2, 24),
        canonical=lat.make([1]),
        nef=Cone(lat, ((1,),)),
        annotations=(DivisibilityAnnotation(24, FullLattice()),),
        note="minimal surface with all pairings divisible by 24",
    )


def pipeline_n2k1(s24: VarietyDescriptor, radius: int = 16) -> PipelineResult:
    """Blow up a mod-24 surface in a point: convex Fujita number exactly 1.

    The lower bound is the non-nef canonical class of the blow-up.  The
    upper bound is Reider's theorem made unconditional by divisibility:
    with every pairing upstairs divisible by 24, any ample class
    f*M - aE has (L^2) = (M^2) - a^2 congruent to a negated square, so
    (L^2) >= 8 > 4 and Reider applies; the surviving exceptional case, an
    effective curve with (C'^2) = 0 and (L . C') = 1, forces 24 to divide
    the square of the multiplicity of its image at the blown-up point,
    hence 12 to divide the multiplicity itself, making (L . C') = 1
    congruent to 0 modulo 12.  Every residue set in the certificate is
    recomputed here, not quoted.
    """
    if s24.dimension != 2:
        raise PipelineError(
            f"expected a surface, got dimension {s24.dimension}"
        )
    moduli = [
        ann.modulus
        for ann in s24.annotations
        if isinstance(ann.scope, FullLattice)
    ]
    if 24 not in moduli:
        raise PipelineError(
            "the surface needs a full-lattice divisibility annotation with "
            f"modulus 24; found {moduli or 'none'}. The residue argument is "
            "specific to 24."
        )
    x = blowup_point(s24)
    squares = sorted({(a * a) % 24 for a in range(24)})
    negated = sorted({(-s) % 24 for s in squares})
    min_positive = min(r if r > 0 else 24 for r in negated)
    if min_positive < 5:
        raise PipelineError(
            "residue recomputation lost the (L^2) >= 5 margin; the modulus "
            "does not support the Reider argument"
        )
    mults = sorted(m for m in range(24) if (m * m) % 24 == 0)
    divisor = mults[1] if len(mults) > 1 else 24
    if any(m % divisor != 0 for m in mults) or 1 % divisor == 0:
        raise PipelineError(
            "residue recomputation does not yield the multiplicity "
            "contradiction"
        )
    cert = make_certificate(
        UPPER,
        "blowup-reider-mod24",
        1,
        "Reider 1988 on the blow-up, with divisibility by 24 upstairs "
        "closing every exceptional case",
        premises=[
            "all pairings on the parent lattice are divisible by 24",
            "(L^2) of an ample class is positive and congruent to a negated "
            f"square mod 24, so (L^2) >= {min_positive}",
            "ampleness rules out the (L . C) = 0 exceptional case of Reider",
            "the remaining case (C'^2) = 0, (L . C') = 1 gives "
            f"{divisor} | multiplicity and the contradiction "
            f"1 = (L . C') = 0 mod {divisor}",
        ],
        witness={
            "squares_mod_24": squares,
            "negated_square_residues": negated,
            "min_positive_self_intersection": min_positive,
            "square_zero_multiplicities": mults,
            "multiplicity_divisor": divisor,
        },
    )
    interval = _merge(resolve(x, radius=radius), (cert,))
    if not interval.exact or interval.lo != 1:
        raise PipelineError(
            f"expected the blow-up to resolve to exactly 1, got {interval}"
        )
    return PipelineResult(x, interval, ("blow-up of a mod-24 surface",))


def pipeline_n3k1(
    s: VarietyDescriptor, polarization, radius: int = 16
) -> PipelineResult:
    """Double cover of S x P^1: a threefold with convex Fujita number 1.

    Needs a surface whose resolved upper bound is at most 2 and a very
    ample class M on it.  With L = M boxtimes O(1), the twisted canonical
    bundle omega_Y tensor L^2 is the pullback of the adjoint of two amples
    on S, hence globally generated; that is the effective
    Noether-Lefschetz gate under which the branched double cover keeps
    the Picard lattice.  The cover bound then gives hi <= 1, while
    h^0(omega_X) = h^0(omega_Y tensor L) + h^0(omega_Y) vanishes factor
    by factor on the P^1 side, so omega_X has no sections and lo >= 1.
    """
    s_iv = resolve(s, radius=radius)
    if s_iv.hi > 2:
        raise PipelineError(
            f"the surface resolves to an upper bound of {s_iv.hi}; the "
            "construction needs an upper bound of at most 2"
        )
    if polarization.lattice.uid != s.lattice.uid:
        raise PipelineError("the polarization lives off the surface lattice")
    if s.nef is None or not s.nef.strictly_contains(polarization):
        raise PipelineError(
            "the polarization must be strictly interior to the nef cone of "
            "the surface"
        )
    line = projective_space(1)
    y = product(s, line)
    ell = box_sum(y, polarization, line.lattice.make([1]))
    nl_note = (
        "omega_Y twisted by the square of the branch bundle is the pullback "
        "of an adjoint of two ample classes on the surface, which is "
        "globally generated because the surface resolves to hi <= 2; the "
        "effective Noether-Lefschetz theorem then keeps the Picard lattice "
        "under the double cover"
    )
    x = cyclic_cover(y, ell, 2, assume=("effective_nl",), assume_ample=True)
    interval = resolve(x, radius=radius)
    if not interval.exact or interval.lo != 1:
        raise PipelineError(
            f"expected the double cover to resolve to exactly 1, got {interval}"
        )
    return PipelineResult(x, interval, (nl_note,))


def pipeline_simple_surface(
    y: VarietyDescriptor, ample, p: int, radius: int = 16
) -> PipelineResult:
    """Very general high-degree surface section of a threefold: exactly 0.

    The section inherits divisibility by p >= 5 on its full lattice, so a
    single ample summand already clears Reider, and its canonical class
    is the restriction of a globally generated adjoint, which settles the
    empty product as well.
    """
    x = hypersurface_section(y, ample, p, radius=radius)
    interval = resolve(x, radius=radius)
    notes = ()
    if not interval.exact or interval.hi != 0:
        raise PipelineError(
            f"expected the section to resolve to exactly 0, got {interval}"
        )
    return PipelineResult(x, interval, notes)


def pipeline_simple_variety(
    y: VarietyDescriptor,
    branch_polarization,
    d: int,
    assume=(),
    radius: int = 16,
) -> PipelineResult:
    """High-degree cyclic cover of any polarized variety: exactly 0.

    For d at least two beyond the resolved upper bound of the parent, the
    cover bound collapses to 0 and the canonical bundle of the cover is
    itself ample and globally generated.  Smaller d still yields a sound
    interval, just not the exact value; the result says so in a note
    instead of overclaiming.
    """
    parent_hi = resolve(y, radius=radius).hi
    assume = tuple(assume)
    if y.dimension == 3 and d >= parent_hi + 2 and not assume:
        assume = ("large_d",)
    x = cyclic_cover(y, branch_polarization, d, assume=assume, assume_ample=True)
    interval = resolve(x, radius=radius)
    notes: tuple[str, ...] = ()
    if d >= parent_hi + 2:
        if not interval.exact or interval.hi != 0:
            raise PipelineError(
                f"expected the cover to resolve to exactly 0, got {interval}"
            )
        omega = [
            c
            for c in interval.certificates
            if c.rule == "cover-degree"
            and c.witness_data().get("omega_ample_and_globally_generated")
        ]
        if not omega:
            raise PipelineError(
                "the cover certificate does not carry the ample globally "
                "generated canonical premise despite d >= hi + 2"
            )
        notes = ("the canonical bundle of the cover is ample and globally generated",)
    else:
        notes = (
            f"cover degree {d} is below the parent upper bound plus 2 "
            f"({parent_hi + 2}); the interval follows from the cover bound "
            "alone and the canonical bundle of the cover is not certified "
            "ample",
        )
    return PipelineResult(x, interval, notes)
