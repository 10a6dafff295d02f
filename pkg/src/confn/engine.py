"""Bounding rules, the resolver, and the certificate verifier.

The convex Fujita number of a polarized variety X is the least m >= 0
such that for every s >= m and every choice of s ample line bundles the
adjoint bundle omega_X tensor their product is globally generated.  The
engine never guesses it: it maintains an interval [lo, hi] where every
endpoint is backed by a certificate, and reports exactness only when the
endpoints meet.

Upper bounds come from adjoint-freeness theorems (Reider for surfaces,
Helmke for threefolds, the toric bound, the universal quadratic bound of
Angehrn and Siu, the abelian bound, product and cover transfer).  Lower
bounds come from witnesses: an explicit tuple of ample classes whose
adjoint escapes the globally generated cone, a pairing showing the
canonical class is not nef, or a vanishing h^0 for the canonical bundle.

Rules are applied in a fixed order (exact rules, then structural rules,
then dimension-generic rules), each emitting certificates that the
independent verifier at the bottom of this module can re-check against
the descriptor without trusting the resolver.  The resolver is monotone:
enabling more rules can only shrink the interval, and a crossed interval
is an internal error that aborts loudly with a diagnostic dump.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificates import LOWER, UPPER, Certificate, make_certificate
from .cones import ConeError, InconclusiveSearchError
from .constructions import cover_data
from .descriptors import VarietyDescriptor, is_known_gg
from .kunneth import ZERO, h0_sign
from .lattice import FullLattice, check_annotation


class InconsistencyError(RuntimeError):
    """The resolver produced contradictory bounds: a modeling bug."""


@dataclass(frozen=True)
class FujitaInterval:
    lo: int
    hi: int
    certificates: tuple[Certificate, ...] = ()
    advisories: tuple[str, ...] = ()

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def __str__(self) -> str:
        if self.exact:
            return str(self.lo)
        return f"[{self.lo}, {self.hi}]"


@dataclass
class _Context:
    radius: int
    enabled: frozenset[str] | None
    cache: dict


def _runs(ctx: _Context, rule: str) -> bool:
    return ctx.enabled is None or rule in ctx.enabled


# ----------------------------------------------------------------------
# upper and lower bound rules; each returns (certificates, advisories)
# ----------------------------------------------------------------------


def _rule_exact_threshold(desc: VarietyDescriptor, ctx: _Context):
    from .descriptors import ExactEqualsNef

    if not isinstance(desc.gg, ExactEqualsNef) or desc.nef is None:
        return [], []
    try:
        report = desc.nef.adjoint_freeness_threshold(desc.canonical, ctx.radius)
    except (InconclusiveSearchError, ConeError) as exc:
        return [], [f"exact threshold inconclusive at radius {ctx.radius}: {exc}"]
    per = [
        {
            "index": p.index,
            "functional": list(p.functional),
            "value_on_canonical": p.value_on_canonical,
            "min_interior": p.min_interior,
            "interior_witness": list(p.interior_witness),
            "required": p.required,
        }
        for p in report.per_functional
    ]
    premises = [
        "the globally generated cone equals the nef cone: "
        + desc.gg.justification,
        "every functional takes value >= 1 on interior lattice points, so the "
        "adjoint value is nondecreasing in the number of ample summands and "
        "the bound holds for every s >= m as the definition requires",
    ]
    certs = [
        make_certificate(
            UPPER,
            "exact-threshold",
            report.m_star,
            "nef-cone threshold for descriptors whose nef classes are exactly "
            "the globally generated ones",
            premises=premises,
            witness={"m_star": report.m_star, "per_functional": per},
        )
    ]
    if report.m_star >= 1:
        assert report.witness is not None and report.violated_index is not None
        certs.append(
            make_certificate(
                LOWER,
                "exact-threshold",
                report.m_star,
                "explicit ample tuple whose adjoint class leaves the nef cone",
                premises=[
                    f"a tuple of {report.m_star - 1} ample classes on which the "
                    "adjoint fails shows the definition cannot hold at "
                    f"m = {report.m_star - 1}"
                ],
                witness={
                    "m_star": report.m_star,
                    "tuple": [list(p) for p in report.witness],
                    "violated_index": report.violated_index,
                },
            )
        )
    return certs, []


def _rule_curve(desc: VarietyDescriptor, ctx: _Context):
    if desc.dimension != 1:
        return [], []
    deg_k = desc.form.evaluate(desc.canonical)
    if deg_k % 2 != 0 or deg_k < -2:
        return [], [
            f"canonical degree {deg_k} is not of the form 2g - 2 for a genus "
            ">= 0; curve rule skipped"
        ]
    genus = (deg_k + 2) // 2
    upper = make_certificate(
        UPPER,
        "curve-genus",
        2,
        "Riemann-Roch: on a curve, the adjoint of two or more ample bundles "
        "has degree >= 2g + 1 and is globally generated",
        premises=[f"genus {genus} read off from the canonical degree {deg_k}"],
        witness={"genus": genus},
    )
    lower = make_certificate(
        LOWER,
        "curve-genus",
        2,
        "the adjoint of a single degree-1 ample bundle O(P) has degree 2g - 1 "
        "and a base point at P",
        premises=[
            "a degree-1 ample class exists on the polarization lattice",
            f"the adjoint degree 2g - 1 = {2 * genus - 1} admits the base point "
            "witness",
        ],
        witness={"genus": genus, "ample_degree": 1, "adjoint_degree": 2 * genus - 1},
    )
    return [upper, lower], []


def _rule_product_combine(desc: VarietyDescriptor, ctx: _Context):
    if desc.provenance.constructor != "product":
        return [], []
    factor_intervals = [
        _resolve_inner(parent, ctx) for parent in desc.provenance.parents
    ]
    certs = []
    lo = max(iv.lo for iv in factor_intervals)
    if lo >= 1:
        certs.append(
            make_certificate(
                LOWER,
                "product-combine",
                lo,
                "restriction to a fiber: an adjoint bundle on the product "
                "restricts to the adjoint bundle on a factor, so any failure "
                "on a factor lifts",
                witness={
                    "factor_intervals": [[iv.lo, iv.hi] for iv in factor_intervals]
                },
            )
        )
    gate = None
    if any(p.has_flag("irregularity_zero") for p in desc.provenance.parents):
        gate = "a factor has irregularity zero"
    elif any(
        a.name == "no_common_isogeny_factor" for a in desc.provenance.assertions
    ):
        gate = "asserted: the factors share no nonzero isogeny factor"
    if gate is not None:
        hi = max(iv.hi for iv in factor_intervals)
        certs.append(
            make_certificate(
                UPPER,
                "product-combine",
                hi,
                "Kunneth: under the gate, every ample class on the product "
                "dominates a box-sum of ample classes, and global generation "
                "of box-sums is checked factorwise",
                premises=[gate],
                witness={
                    "factor_intervals": [[iv.lo, iv.hi] for iv in factor_intervals],
                    "gate": gate,
                },
            )
        )
    return certs, []


def _rule_cover_degree(desc: VarietyDescriptor, ctx: _Context):
    if desc.provenance.constructor != "cyclic_cover":
        return [], []
    parent, branch, degree = cover_data(desc)
    parent_iv = _resolve_inner(parent, ctx)
    bound = max(0, parent_iv.hi + 1 - degree)
    premises = [
        f"the parent resolves to an upper bound of {parent_iv.hi}",
        "an adjoint with s ample summands on the cover pushes down to an "
        f"adjoint with s + {degree} - 1 summands downstairs",
    ]
    omega_ample_gg = degree - 2 >= parent_iv.hi
    if omega_ample_gg:
        premises.append(
            "the canonical bundle of the cover is ample and globally "
            f"generated: it is the pullback of the parent adjoint with "
            f"{degree} - 1 >= {parent_iv.hi} + 1 ample summands"
        )
    cert = make_certificate(
        UPPER,
        "cover-degree",
        bound,
        "canonical bundle formula for totally branched cyclic covers: "
        "omega_X is the pullback of omega_Y twisted by d - 1 copies of the "
        "branch bundle",
        premises=premises,
        witness={
            "degree": degree,
            "parent_interval": [parent_iv.lo, parent_iv.hi],
            "bound": bound,
            "omega_ample_and_globally_generated": omega_ample_gg,
        },
    )
    return [cert], []


def _rule_not_nef_witness(desc: VarietyDescriptor, ctx: _Context):
    if desc.dimension != 2 or not desc.known_effective:
        return [], []
    for effective, note in desc.known_effective:
        pairing = desc.form.evaluate(desc.canonical, effective)
        if pairing < 0:
            cert = make_certificate(
                LOWER,
                "not-nef-witness",
                1,
                "a globally generated class is nef, and nef classes pair "
                "nonnegatively with effective curves",
                premises=[f"effective class: {note}"],
                witness={
                    "effective_class": list(effective.coeffs),
                    "pairing": pairing,
                },
            )
            return [cert], []
    return [], []


def _rule_h0_vanishing(desc: VarietyDescriptor, ctx: _Context):
    if desc.canonical.is_zero():
        return [], []
    if desc.provenance.constructor not in ("cyclic_cover", "product"):
        return [], []
    fact = h0_sign(desc, desc.canonical)
    if fact.value != ZERO:
        return [], []
    cert = make_certificate(
        LOWER,
        "h0-vanishing",
        1,
        "a line bundle with no nonzero global sections is not globally "
        "generated, so the empty adjoint already fails",
        premises=["the canonical class is not the trivial class"],
        witness={
            "bundle": fact.bundle,
            "trace": list(fact.trace),
        },
    )
    return [cert], []


def _rule_reider_divisible(desc: VarietyDescriptor, ctx: _Context):
    if desc.dimension != 2:
        return [], []
    for ann in desc.annotations:
        if isinstance(ann.scope, FullLattice) and ann.modulus >= 5:
            cert = make_certificate(
                UPPER,
                "reider-divisible",
                1,
                "Reider 1988: with every intersection number divisible by some "
                "d >= 5, a single ample summand already has (L^2) >= 5 and no "
                "curve can satisfy the exceptional equations",
                premises=[
                    f"all intersection numbers on the lattice are divisible by "
                    f"{ann.modulus} >= 5"
                ],
                witness={"modulus": ann.modulus},
            )
            return [cert], []
    return [], []


def _ample_square_one(desc: VarietyDescriptor, radius: int = 8):
    """Search for an ample lattice class of self-intersection 1."""
    assert desc.nef is not None
    for point in desc.nef.interior_points(radius):
        cls_ = desc.lattice.make(point)
        if desc.form.self_intersection(cls_, 2) == 1:
            return cls_
    return None


def _rule_reider_surface(desc: VarietyDescriptor, ctx: _Context):
    if desc.dimension != 2:
        return [], []
    certs = [
        make_certificate(
            UPPER,
            "reider-surface",
            3,
            "Reider 1988, Theorem 1: on a surface, the adjoint of three or "
            "more ample bundles is globally generated",
        )
    ]
    advisories: list[str] = []
    clause = None
    if desc.form.is_even():
        clause = "even-form"
        detail = "every self-intersection number on the lattice is even"
    elif all(c % 2 == 0 for c in desc.canonical.coeffs):
        clause = "canonical-divisible-by-2"
        detail = "the canonical class is divisible by 2 in the lattice"
    if clause is not None:
        certs.append(
            make_certificate(
                UPPER,
                "reider-surface",
                2,
                "Reider 1988: parity rules out the boundary cases that "
                "obstruct two ample summands",
                premises=[detail],
                witness={"clause": clause},
            )
        )
    if desc.nef is not None:
        square_one = _ample_square_one(desc)
        if square_one is None:
            if desc.rank == 1:
                top = desc.form.entry((0, 0))
                if top != 1:
                    certs.append(
                        make_certificate(
                            UPPER,
                            "reider-surface",
                            2,
                            "Reider 1988: the value 3 requires an ample class "
                            "of self-intersection 1, and on a rank-1 lattice "
                            "with (H^2) != 1 no class has square 1",
                            premises=[f"(H^2) = {top}"],
                            witness={"clause": "no-square-one-rank1", "top": top},
                        )
                    )
                else:
                    advisories.append(
                        "no ample square-1 class within radius 8, but (H^2) = 1 "
                        "leaves the possibility open"
                    )
            else:
                advisories.append(
                    "no ample class of self-intersection 1 within radius 8; if "
                    "none exists globally, the surface bound improves to 2"
                )
    else:
        advisories.append(
            "square-one diagnostic skipped: the nef cone is unknown"
        )
    return certs, advisories


def _rule_abelian(desc: VarietyDescriptor, ctx: _Context):
    if not desc.has_flag("abelian"):
        return [], []
    cert = make_certificate(
        UPPER,
        "abelian-bound",
        2,
        "Bauer-Szemberg 1996: on an abelian variety the product of two or "
        "more ample bundles is globally generated, and the canonical class "
        "is trivial",
    )
    return [cert], []


def _rule_toric(desc: VarietyDescriptor, ctx: _Context):
    if not desc.has_flag("toric"):
        return [], []
    n = desc.dimension
    cert = make_certificate(
        UPPER,
        "toric-adjoint",
        n + 1,
        "Mustata 2002, toric adjoint freeness: the adjoint of n + 1 ample "
        "bundles on a smooth projective toric variety is globally generated",
        premises=[f"dimension {n}"],
    )
    return [cert], []


def _rule_threefold(desc: VarietyDescriptor, ctx: _Context):
    if desc.dimension != 3:
        return [], []
    cert = make_certificate(
        UPPER,
        "threefold-helmke",
        4,
        "Helmke 1997: on a threefold, an ample L with (L^3) > 27, "
        "(L^2 . S) >= 9 and (L . C) >= 3 has globally generated adjoint, and "
        "a sum of four ample classes always satisfies these",
    )
    return [cert], []


def _rule_universal(desc: VarietyDescriptor, ctx: _Context):
    n = desc.dimension
    value = (n * n + n + 2) // 2
    cert = make_certificate(
        UPPER,
        "universal-angehrn-siu",
        value,
        "Angehrn-Siu 1995: the adjoint of an ample L is globally generated "
        "once L dominates (n^2 + n + 2) / 2 ample summands",
        premises=[f"dimension {n}"],
    )
    return [cert], []


_RULES = (
    ("exact-threshold", _rule_exact_threshold),
    ("curve-genus", _rule_curve),
    ("product-combine", _rule_product_combine),
    ("cover-degree", _rule_cover_degree),
    ("not-nef-witness", _rule_not_nef_witness),
    ("h0-vanishing", _rule_h0_vanishing),
    ("reider-divisible", _rule_reider_divisible),
    ("reider-surface", _rule_reider_surface),
    ("abelian-bound", _rule_abelian),
    ("toric-adjoint", _rule_toric),
    ("threefold-helmke", _rule_threefold),
    ("universal-angehrn-siu", _rule_universal),
)

RULE_IDS = tuple(rule_id for rule_id, _ in _RULES)

OPTIONAL_RULE_IDS = tuple(
    rule_id for rule_id in RULE_IDS if rule_id != "universal-angehrn-siu"
)


def _resolve_inner(desc: VarietyDescriptor, ctx: _Context) -> FujitaInterval:
    key = desc.uid
    if key in ctx.cache:
        return ctx.cache[key]
    certs: list[Certificate] = []
    advisories: list[str] = []
    for rule_id, rule in _RULES:
        if rule_id != "universal-angehrn-siu" and not _runs(ctx, rule_id):
            continue
        new_certs, new_advisories = rule(desc, ctx)
        certs.extend(new_certs)
        advisories.extend(new_advisories)
    hi = min(c.value for c in certs if c.kind == UPPER)
    lo = max([0] + [c.value for c in certs if c.kind == LOWER])
    if hi == 1 and _runs(ctx, "canonical-gg") and is_known_gg(desc, desc.canonical):
        supporting = min(
            (c for c in certs if c.kind == UPPER), key=lambda c: c.value
        )
        certs.append(
            make_certificate(
                UPPER,
                "canonical-gg",
                0,
                "an upper bound of 1 covers every s >= 1, and a globally "
                "generated canonical class covers s = 0",
                premises=[
                    "the canonical class is certified globally generated by the "
                    "descriptor",
                    f"supporting upper bound of 1 from rule {supporting.rule}",
                ],
                witness={"supporting_rule": supporting.rule},
            )
        )
        hi = 0
    if lo > hi:
        raise InconsistencyError(_crossed_dump(desc, lo, hi, certs))
    if (
        desc.has_flag("toric")
        and lo == hi == desc.dimension + 1
        and desc.provenance.constructor != "projective_space"
    ):
        raise InconsistencyError(
            "a toric descriptor other than projective space resolved to the "
            f"extremal value {hi} = n + 1, which holds only for projective "
            "space; this indicates a modeling bug in the descriptor "
            f"(constructor {desc.provenance.constructor!r})"
        )
    interval = FujitaInterval(lo, hi, tuple(certs), tuple(advisories))
    ctx.cache[key] = interval
    return interval


def _crossed_dump(desc, lo, hi, certs) -> str:
    lines = [
        f"crossed interval: lower bound {lo} exceeds upper bound {hi}",
        f"descriptor: {desc.provenance.constructor}, dimension {desc.dimension}, "
        f"rank {desc.rank}",
    ]
    for c in certs:
        lines.append(f"  {c.kind} {c.value} via {c.rule}")
    return "\n".join(lines)


def resolve(
    desc: VarietyDescriptor,
    radius: int = 16,
    enabled=None,
) -> FujitaInterval:
    """Resolve the convex Fujita interval of a descriptor.

    ``enabled`` restricts the optional rules (the universal bound always
    runs, so the interval stays finite); passing None runs everything.
    The search radius is forwarded to every bounded cone search.
    """
    ctx = _Context(
        radius=radius,
        enabled=None if enabled is None else frozenset(enabled),
        cache={},
    )
    return _resolve_inner(desc, ctx)


def resolved_upper(desc: VarietyDescriptor, radius: int = 16) -> int:
    return resolve(desc, radius=radius).hi


# ----------------------------------------------------------------------
# the independent certificate verifier
# ----------------------------------------------------------------------


def verify_certificate(
    desc: VarietyDescriptor, cert: Certificate, radius: int = 16
) -> bool:
    """Re-check one certificate against the descriptor from scratch.

    Returns False rather than raising when the certificate does not hold;
    the caller decides how loud to be.  The checks re-derive every claim
    from the witness data and the descriptor, not from resolver state.
    """
    checker = _VERIFIERS.get(cert.rule)
    if checker is None:
        return False
    try:
        return checker(desc, cert, radius)
    except Exception:
        return False


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _verify_exact_threshold(desc, cert, radius):
    from .descriptors import ExactEqualsNef

    if not isinstance(desc.gg, ExactEqualsNef) or desc.nef is None:
        return False
    data = cert.witness_data()
    if cert.kind == UPPER:
        per = data["per_functional"]
        if len(per) != len(desc.nef.functionals):
            return False
        requireds = []
        for entry in per:
            k = entry["index"]
            functional = tuple(entry["functional"])
            if desc.nef.functionals[k] != functional:
                return False
            phi_k = sum(
                f * c for f, c in zip(functional, desc.canonical.coeffs)
            )
            if phi_k != entry["value_on_canonical"]:
                return False
            witness = desc.lattice.make(entry["interior_witness"])
            if not desc.nef.strictly_contains(witness):
                return False
            if desc.nef.values(witness)[k] != entry["min_interior"]:
                return False
            if entry["min_interior"] != 1:
                return False
            required = max(0, _ceil_div(-phi_k, entry["min_interior"]))
            if required != entry["required"]:
                return False
            requireds.append(required)
        return cert.value == data["m_star"] == max(requireds)
    points = [desc.lattice.make(p) for p in data["tuple"]]
    if len(points) != data["m_star"] - 1 or cert.value != data["m_star"]:
        return False
    if not all(desc.nef.strictly_contains(p) for p in points):
        return False
    total = desc.canonical
    for p in points:
        total = total + p
    return desc.nef.values(total)[data["violated_index"]] < 0


def _verify_curve(desc, cert, radius):
    if desc.dimension != 1 or cert.value != 2:
        return False
    deg_k = desc.form.evaluate(desc.canonical)
    if deg_k % 2 != 0 or deg_k < -2:
        return False
    genus = (deg_k + 2) // 2
    data = cert.witness_data()
    if data.get("genus") != genus:
        return False
    if cert.kind == LOWER:
        return data["adjoint_degree"] == 2 * genus - 1 and data["ample_degree"] == 1
    return True


def _verify_product_combine(desc, cert, radius):
    if desc.provenance.constructor != "product":
        return False
    intervals = [resolve(p, radius=radius) for p in desc.provenance.parents]
    stored = cert.witness_data()["factor_intervals"]
    if [[iv.lo, iv.hi] for iv in intervals] != [list(x) for x in stored]:
        return False
    if cert.kind == LOWER:
        return cert.value == max(iv.lo for iv in intervals)
    gate_ok = any(
        p.has_flag("irregularity_zero") for p in desc.provenance.parents
    ) or any(
        a.name == "no_common_isogeny_factor" for a in desc.provenance.assertions
    )
    return gate_ok and cert.value == max(iv.hi for iv in intervals)


def _verify_cover_degree(desc, cert, radius):
    if desc.provenance.constructor != "cyclic_cover" or cert.kind != UPPER:
        return False
    parent, _branch, degree = cover_data(desc)
    parent_iv = resolve(parent, radius=radius)
    data = cert.witness_data()
    if data["degree"] != degree:
        return False
    if data["parent_interval"] != [parent_iv.lo, parent_iv.hi]:
        return False
    bound = max(0, parent_iv.hi + 1 - degree)
    if data["bound"] != bound or cert.value != bound:
        return False
    return data["omega_ample_and_globally_generated"] == (degree - 2 >= parent_iv.hi)


def _verify_not_nef(desc, cert, radius):
    if desc.dimension != 2 or cert.kind != LOWER or cert.value != 1:
        return False
    data = cert.witness_data()
    effective = desc.lattice.make(data["effective_class"])
    if not any(
        effective.coeffs == known.coeffs for known, _ in desc.known_effective
    ):
        return False
    pairing = desc.form.evaluate(desc.canonical, effective)
    return pairing == data["pairing"] and pairing < 0


def _verify_h0_vanishing(desc, cert, radius):
    if cert.kind != LOWER or cert.value != 1 or desc.canonical.is_zero():
        return False
    return h0_sign(desc, desc.canonical).value == ZERO


def _verify_reider_divisible(desc, cert, radius):
    if desc.dimension != 2 or cert.kind != UPPER or cert.value != 1:
        return False
    modulus = cert.witness_data()["modulus"]
    if modulus < 5:
        return False
    return any(
        isinstance(ann.scope, FullLattice)
        and ann.modulus == modulus
        and check_annotation(desc.form, ann)
        for ann in desc.annotations
    )


def _verify_reider_surface(desc, cert, radius):
    if desc.dimension != 2 or cert.kind != UPPER:
        return False
    if cert.value == 3:
        return True
    if cert.value != 2:
        return False
    clause = cert.witness_data().get("clause")
    if clause == "even-form":
        return desc.form.is_even()
    if clause == "canonical-divisible-by-2":
        return all(c % 2 == 0 for c in desc.canonical.coeffs)
    if clause == "no-square-one-rank1":
        return (
            desc.rank == 1
            and desc.nef is not None
            and desc.form.entry((0, 0)) != 1
        )
    return False


def _verify_abelian(desc, cert, radius):
    return desc.has_flag("abelian") and cert.kind == UPPER and cert.value == 2


def _verify_toric(desc, cert, radius):
    return (
        desc.has_flag("toric")
        and cert.kind == UPPER
        and cert.value == desc.dimension + 1
    )


def _verify_threefold(desc, cert, radius):
    return desc.dimension == 3 and cert.kind == UPPER and cert.value == 4


def _verify_universal(desc, cert, radius):
    n = desc.dimension
    return cert.kind == UPPER and cert.value == (n * n + n + 2) // 2


def _verify_canonical_gg(desc, cert, radius):
    if cert.kind != UPPER or cert.value != 0:
        return False
    if not is_known_gg(desc, desc.canonical):
        return False
    supporting = cert.witness_data()["supporting_rule"]
    rule = dict(_RULES).get(supporting)
    if rule is None:
        return False
    ctx = _Context(radius=radius, enabled=None, cache={})
    certs, _ = rule(desc, ctx)
    uppers = [c.value for c in certs if c.kind == UPPER]
    return bool(uppers) and min(uppers) <= 1


def _verify_blowup_mod24(desc, cert, radius):
    if cert.kind != UPPER or cert.value != 1:
        return False
    if desc.provenance.constructor != "blowup_point":
        return False
    parent = desc.provenance.parents[0]
    moduli = [
        ann.modulus
        for ann in parent.annotations
        if isinstance(ann.scope, FullLattice)
        and ann.modulus % 24 == 0
        and check_annotation(parent.form, ann)
    ]
    if not moduli:
        return False
    data = cert.witness_data()
    squares = sorted({(a * a) % 24 for a in range(24)})
    if data["squares_mod_24"] != squares:
        return False
    neg = sorted({(-s) % 24 for s in squares})
    if data["negated_square_residues"] != neg:
        return False
    min_positive = min(r if r > 0 else 24 for r in neg)
    if data["min_positive_self_intersection"] != min_positive or min_positive < 5:
        return False
    mults = sorted(m for m in range(24) if (m * m) % 24 == 0)
    if data["square_zero_multiplicities"] != mults:
        return False
    divisor = data["multiplicity_divisor"]
    if any(m % divisor != 0 for m in mults):
        return False
    # the contradiction needs the pairing 1 to be 0 modulo the divisor
    return 1 % divisor != 0


_VERIFIERS = {
    "exact-threshold": _verify_exact_threshold,
    "curve-genus": _verify_curve,
    "product-combine": _verify_product_combine,
    "cover-degree": _verify_cover_degree,
    "not-nef-witness": _verify_not_nef,
    "h0-vanishing": _verify_h0_vanishing,
    "reider-divisible": _verify_reider_divisible,
    "reider-surface": _verify_reider_surface,
    "abelian-bound": _verify_abelian,
    "toric-adjoint": _verify_toric,
    "threefold-helmke": _verify_threefold,
    "universal-angehrn-siu": _verify_universal,
    "canonical-gg": _verify_canonical_gg,
    "blowup-reider-mod24": _verify_blowup_mod24,
}
