"""Triple products with defining systems and full indeterminacy.

For classes alpha1, alpha2, alpha3 whose pairwise products alpha1.alpha2 and
alpha2.alpha3 vanish, a defining system consists of cochains a12, a23 with
d(a12) = bar(a1) a2 and d(a23) = bar(a2) a3.  The product representative is

    omega = bar(a1) a23 + bar(a12) a3,

a cocycle whose class is well defined modulo the indeterminacy subspace
alpha1 . H^{q} + H^{q'} . alpha3.  The triple product is trivial when some
choice of defining system makes omega a coboundary, equivalently when the
class of the canonical omega lies in the indeterminacy subspace.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations, product as iter_product

from .cochains import cohomology, solve_coboundary
from .errors import InternalCheckError
from .fields import Field
from .hochster import (
    ClassVectorizer,
    CohomologyClass,
    MultiCochain,
    add,
    bar,
    cup,
    is_cocycle,
    is_zero_class,
    random_cochain,
    random_cocycle,
    scale,
    total_coboundary,
)
from .simplicial import SimplicialComplex

__all__ = [
    "DefiningSystem",
    "MasseyResult",
    "triple_massey",
    "indeterminacy",
    "coset_classes",
    "coset_check",
]


@dataclass
class DefiningSystem:
    """Cochains witnessing that the pairwise products are coboundaries."""

    a1: MultiCochain
    a2: MultiCochain
    a3: MultiCochain
    a12: MultiCochain
    a23: MultiCochain

    def validate(self) -> None:
        for name in ("a1", "a2", "a3"):
            if not is_cocycle(getattr(self, name)):
                raise ValueError(f"{name} is not a cocycle")
        if total_coboundary(self.a12) != cup(bar(self.a1), self.a2):
            raise ValueError("d(a12) does not equal bar(a1) a2")
        if total_coboundary(self.a23) != cup(bar(self.a2), self.a3):
            raise ValueError("d(a23) does not equal bar(a2) a3")

    def omega(self) -> MultiCochain:
        """Product representative bar(a1) a23 + bar(a12) a3."""
        return add(cup(bar(self.a1), self.a23), cup(bar(self.a12), self.a3))


@dataclass
class MasseyResult:
    """Outcome of a triple product evaluation."""

    defined: bool
    degree: int | None
    system: DefiningSystem | None
    omega: MultiCochain | None
    omega_is_cocycle: bool | None
    indeterminacy_basis: list
    trivial: bool | None
    _vectorizer: ClassVectorizer | None = dataclass_field(
        default=None, repr=False, compare=False
    )
    _origins: list = dataclass_field(default_factory=list, repr=False, compare=False)

    @property
    def indeterminacy_dim(self) -> int:
        return len(self.indeterminacy_basis)


def _check_class(K: SimplicialComplex, field: Field, x) -> None:
    if not isinstance(x, CohomologyClass):
        raise TypeError(f"expected a CohomologyClass, got {type(x).__name__}")
    if x.complex != K:
        raise ValueError("class lives on a different complex")
    if x.field.key != field.key:
        raise ValueError("class uses a different coefficient field")


def _summand_classes(K: SimplicialComplex, field: Field, degree: int, away_from):
    """Single-summand basis cocycles of a total degree, each supported on a
    subset disjoint from at least one support in away_from (other products
    vanish identically)."""
    verts = set(K.vertices)
    cand = set()
    for I in away_from:
        rest = sorted(verts - set(I))
        for size in range(len(rest) + 1):
            p = degree - size - 1
            if p < -1 or p > K.dim:
                continue
            for J in combinations(rest, size):
                cand.add(J)
    out = []
    for J in sorted(cand, key=lambda J: (len(J), J)):
        smd = cohomology(K, J, degree - len(J) - 1, field)
        for b in smd.basis:
            out.append(MultiCochain(K, field, degree, {J: b}, validate=False))
    return out


def _product_generators(K, field, alpha1, alpha3, target_degree, barred):
    """Cocycles spanning the indeterminacy subspace in the target degree.

    Each entry is (product, side, h): perturbing the defining-system cochain
    named by side (a23 or a12) by h shifts the representative class by a
    scalar multiple of the product's class.
    """
    gens = []
    if alpha1 is not None and not alpha1.rep.is_zero():
        a1 = alpha1.rep
        left = bar(a1) if barred else a1
        for h in _summand_classes(K, field, target_degree - a1.degree, a1.supports()):
            gens.append((cup(left, h), "a23", h))
    if alpha3 is not None and not alpha3.rep.is_zero():
        a3 = alpha3.rep
        for h in _summand_classes(K, field, target_degree - a3.degree, a3.supports()):
            gens.append((cup(bar(h) if barred else h, a3), "a12", h))
    return gens


def indeterminacy(
    K: SimplicialComplex, field: Field, alpha1, alpha3, target_degree: int
):
    """Basis of alpha1 . H^{t - |alpha1|} + H^{t - |alpha3|} . alpha3.

    Returns independent CohomologyClass representatives in a deterministic
    order (alpha1-side products first, supports in size-then-lex order).
    """
    _check_class(K, field, alpha1)
    _check_class(K, field, alpha3)
    gens = _product_generators(K, field, alpha1, alpha3, target_degree, barred=False)
    sups = set()
    for w, _side, _h in gens:
        sups.update(w.pieces)
    vz = ClassVectorizer(K, field, target_degree, sups)
    tracker = vz.tracker()
    out = []
    for w, _side, _h in gens:
        if tracker.add(vz.vec(w)):
            out.append(CohomologyClass(w))
    return out


def _solve_total(K: SimplicialComplex, field: Field, target: MultiCochain) -> MultiCochain:
    """Canonical primitive of a piecewise coboundary."""
    pieces = {}
    for J, piece in target.pieces.items():
        x = solve_coboundary(K, field, piece)
        if x is None:
            raise InternalCheckError(f"no primitive for a coboundary piece on {J}")
        if not x.is_zero():
            pieces[J] = x
    return MultiCochain(K, field, target.degree - 1, pieces, validate=False)


def triple_massey(
    K: SimplicialComplex, field: Field, alpha1, alpha2, alpha3
) -> MasseyResult:
    """Evaluate the triple product of three classes.

    The product is defined when both pairwise cup products vanish as classes.
    The returned representative omega comes from the canonical defining system
    (reduced-echelon primitives with free coordinates zero), so equal inputs
    always produce identical output.  trivial is True exactly when the class
    of omega lies in the indeterminacy subspace.
    """
    for x in (alpha1, alpha2, alpha3):
        _check_class(K, field, x)
    a1, a2, a3 = alpha1.rep, alpha2.rep, alpha3.rep
    w12 = cup(bar(a1), a2)
    w23 = cup(bar(a2), a3)
    if not (is_zero_class(w12) and is_zero_class(w23)):
        return MasseyResult(False, None, None, None, None, [], None)
    a12 = _solve_total(K, field, w12)
    a23 = _solve_total(K, field, w23)
    system = DefiningSystem(a1, a2, a3, a12, a23)
    omega = system.omega()
    degree = alpha1.degree + alpha2.degree + alpha3.degree - 1
    if not is_cocycle(omega):
        raise InternalCheckError("product representative is not a cocycle")
    gens = _product_generators(K, field, alpha1, alpha3, degree, barred=False)
    sups = set(omega.pieces)
    for w, _side, _h in gens:
        sups.update(w.pieces)
    vz = ClassVectorizer(K, field, degree, sups)
    tracker = vz.tracker()
    basis = []
    origins = []
    for w, side, h in gens:
        if tracker.add(vz.vec(w)):
            basis.append(CohomologyClass(w))
            origins.append((side, h, w))
    trivial = tracker.contains(vz.vec(omega))
    return MasseyResult(
        True, degree, system, omega, True, basis, trivial, vz, origins
    )


def coset_classes(result: MasseyResult, cap: int = 4096):
    """Every class of the coset [omega] + indeterminacy, over a finite field.

    Representatives are omega plus basis combinations, in coefficient-vector
    order.  Returns None over the rationals or when the coset exceeds cap.
    """
    if not isinstance(result, MasseyResult) or not result.defined:
        raise ValueError("coset_classes needs a defined MasseyResult")
    fld = result.omega.field
    if fld.kind == "gf2":
        q = 2
    elif fld.kind == "gfp":
        q = fld.p
    else:
        return None
    dim = result.indeterminacy_dim
    if q**dim > cap:
        return None
    out = []
    for coeffs in iter_product(range(q), repeat=dim):
        rep = result.omega
        for c, b in zip(coeffs, result.indeterminacy_basis):
            if c:
                rep = add(rep, scale(b.rep, fld.from_int(c)))
        out.append(CohomologyClass(rep))
    return out


def coset_check(
    result: MasseyResult, samples: int = 100, seed: int = 0, exhaustive_cap: int = 4096
) -> dict:
    """Stress the coset invariance of a defined triple product.

    Randomly perturbs the input representatives by coboundaries and the
    defining-system cochains by cocycles, recomputes omega, and confirms its
    class never leaves [omega] + indeterminacy.  Over a finite field with at
    most exhaustive_cap coset elements, additionally sweeps every perturbation
    coefficient vector and checks that the attained classes are exactly the
    whole coset.
    """
    if not isinstance(result, MasseyResult) or not result.defined:
        raise ValueError("coset_check needs a defined MasseyResult")
    omega = result.omega
    K, fld = omega.complex, omega.field
    sysm = result.system
    vz = result._vectorizer
    ops = vz.ops
    base = vz.vec(omega)
    rows = [vz.vec(w) for _side, _h, w in result._origins]
    tracker = vz.tracker()
    for r in rows:
        if not tracker.add(r):
            raise InternalCheckError("indeterminacy basis rows are dependent")

    def in_coset(row):
        return tracker.contains(ops.sub_scaled(row, base, fld.one))

    rng = random.Random(seed)
    n1, n2, n3 = sysm.a1.degree, sysm.a2.degree, sysm.a3.degree
    escapes = []
    produced = {base}
    for i in range(samples):
        a1p = add(sysm.a1, total_coboundary(random_cochain(K, fld, n1 - 1, rng)))
        a2p = add(sysm.a2, total_coboundary(random_cochain(K, fld, n2 - 1, rng)))
        a3p = add(sysm.a3, total_coboundary(random_cochain(K, fld, n3 - 1, rng)))
        a12p = add(
            _solve_total(K, fld, cup(bar(a1p), a2p)),
            random_cocycle(K, fld, n1 + n2 - 1, rng),
        )
        a23p = add(
            _solve_total(K, fld, cup(bar(a2p), a3p)),
            random_cocycle(K, fld, n2 + n3 - 1, rng),
        )
        om = add(cup(bar(a1p), a23p), cup(bar(a12p), a3p))
        if not is_cocycle(om):
            raise InternalCheckError("perturbed representative is not a cocycle")
        try:
            row = vz.vec(om)
        except ValueError:
            escapes.append(i)
            continue
        if in_coset(row):
            produced.add(row)
        else:
            escapes.append(i)

    coset_size = None
    fully_generated = None
    if fld.kind in ("gf2", "gfp"):
        q = 2 if fld.kind == "gf2" else fld.p
        dim = len(rows)
        if q**dim <= exhaustive_cap:
            coset_size = q**dim
            expected = set()
            attained = set()
            for coeffs in iter_product(range(q), repeat=dim):
                acc = base
                a12p, a23p = sysm.a12, sysm.a23
                for c, r, (side, h, _w) in zip(coeffs, rows, result._origins):
                    if not c:
                        continue
                    cc = fld.from_int(c)
                    acc = ops.sub_scaled(acc, r, fld.neg(cc))
                    if side == "a12":
                        a12p = add(a12p, scale(h, cc))
                    else:
                        a23p = add(a23p, scale(h, cc))
                expected.add(acc)
                om = add(cup(bar(sysm.a1), a23p), cup(bar(a12p), sysm.a3))
                attained.add(vz.vec(om))
            fully_generated = attained == expected
            produced |= attained
    return {
        "samples": samples,
        "escapes": len(escapes),
        "escape_indices": escapes,
        "indeterminacy_dim": len(rows),
        "coset_size": coset_size,
        "fully_generated": fully_generated,
        "distinct_classes_produced": len(produced),
    }
