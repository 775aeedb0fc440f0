"""Clean, nil-clean and J-clean decompositions and the derived taxonomy.

A decomposition of a is a pair (e, t) with a = e + t and e idempotent; the
kind constrains t: a unit (clean), a nilpotent (nil-clean), or a member of
the Jacobson radical (J-clean). "uniquely X" means exactly one (e, t) pair
exists; "conjugate X" means X holds and all idempotents appearing in
X-decompositions lie in one conjugacy class of the unit-group action. An
element that is not X is never conjugate X (no vacuous truth).

Enumeration iterates the cached idempotent set and tests the complement,
never all pairs; a naive all-pairs loop exists only as a test oracle. Ring
classification runs one vectorized "cover" pass per kind: for each
idempotent e, the elements e + t over all admissible t are marked at once,
accumulating per-element decomposition counts and the orbit bookkeeping
needed for the conjugate flags.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import InternalCheckError, InvalidArgumentError, SizeCapError
from .rings import DEFAULT_SIZE_CAP, FiniteRing
from .structure import (
    conjugacy_classes,
    idempotents,
    is_abelian,
    jacobson_radical,
    nilpotent_mask,
    units,
)

Array = np.ndarray

KIND_CLEAN = "clean"
KIND_NIL = "nil-clean"
KIND_J = "j-clean"
KINDS = (KIND_CLEAN, KIND_NIL, KIND_J)

RING_FLAGS = (
    "clean",
    "uniquely_clean",
    "conjugate_clean",
    "nil_clean",
    "uniquely_nil_clean",
    "conjugate_nil_clean",
    "j_clean",
    "abelian",
)


def complement_mask(ring, kind: str) -> Array:
    """Membership mask for the complement part t of the given kind."""
    if kind == KIND_CLEAN:
        return units(ring).mask
    if kind == KIND_NIL:
        return nilpotent_mask(ring)
    if kind == KIND_J:
        return jacobson_radical(ring).mask
    raise InvalidArgumentError(f"unknown decomposition kind {kind!r}")


@dataclass(frozen=True)
class Decomposition:
    """One witnessed presentation a = e + t."""

    element: int
    idempotent: int
    complement: int
    kind: str


def decompositions(ring, a: int, kind: str) -> list[Decomposition]:
    """All decompositions of the given kind, ordered by idempotent index."""
    if not 0 <= a < ring.size:
        raise InvalidArgumentError(f"element {a} out of range 0..{ring.size - 1}")
    mask = complement_mask(ring, kind)
    out = []
    for e in idempotents(ring).tolist():
        t = ring.sub(a, e)
        if mask[t]:
            out.append(Decomposition(a, e, t, kind))
    return out


def clean_decompositions(ring, a: int) -> list[Decomposition]:
    return decompositions(ring, a, KIND_CLEAN)


def nil_clean_decompositions(ring, a: int) -> list[Decomposition]:
    return decompositions(ring, a, KIND_NIL)


def j_clean_decompositions(ring, a: int) -> list[Decomposition]:
    return decompositions(ring, a, KIND_J)


# ---------------------------------------------------------------------------
# vectorized whole-ring pass


@dataclass
class CoverResult:
    """Per-element outcome of one decomposition kind over the whole ring."""

    kind: str
    counts: Array        # number of decompositions of each element
    first_orbit: Array   # orbit id of the first decomposition idempotent, -1 if none
    conflict: Array      # True where two decomposition idempotents span orbits

    @property
    def covered(self) -> Array:
        return self.counts > 0

    @property
    def unique(self) -> Array:
        return self.counts == 1

    @property
    def conjugate(self) -> Array:
        return self.covered & ~self.conflict


def cover(ring, kind: str) -> CoverResult:
    """One pass of e + t over all idempotents e and admissible complements t."""

    def compute():
        E = idempotents(ring)
        orbs = conjugacy_classes(ring)
        oids = orbs.orbit_ids(E)
        comp = np.flatnonzero(complement_mask(ring, kind))
        counts = np.zeros(ring.size, dtype=np.int64)
        first = np.full(ring.size, -1, dtype=np.int64)
        conflict = np.zeros(ring.size, dtype=bool)
        for e, oid in zip(E.tolist(), oids.tolist()):
            targets = ring.add_many(e, comp)  # e + t is injective in t
            counts[targets] += 1
            seen = first[targets]
            conflict[targets] |= (seen >= 0) & (seen != oid)
            first[targets] = np.where(seen < 0, oid, seen)
        return CoverResult(kind, counts, first, conflict)

    return ring.freeze(f"cover:{kind}", compute)


# ---------------------------------------------------------------------------
# per-element classification


@dataclass
class ElementClassification:
    """Boolean verdicts for one element, with decomposition counts and, for
    each failing conjugate flag, a witness pair of decompositions whose
    idempotents are provably non-conjugate."""

    ring: FiniteRing
    element: int
    counts: dict[str, int]
    clean: bool
    uniquely_clean: bool
    conjugate_clean: bool
    nil_clean: bool
    uniquely_nil_clean: bool
    conjugate_nil_clean: bool
    j_clean: bool
    conjugacy_failures: dict[str, tuple[Decomposition, Decomposition]] = field(default_factory=dict)

    def __post_init__(self):
        for uniq, conj, plain in (
            (self.uniquely_clean, self.conjugate_clean, self.clean),
            (self.uniquely_nil_clean, self.conjugate_nil_clean, self.nil_clean),
        ):
            if (uniq and not conj) or (conj and not plain):
                raise InternalCheckError(
                    f"implication chain uniquely => conjugate => plain broken on "
                    f"element {self.element} of {self.ring.label}"
                )

    def flag(self, name: str) -> bool:
        return getattr(self, name)


def _first_nonconjugate_pair(ring, decs: list[Decomposition]):
    orbs = conjugacy_classes(ring)
    for i in range(len(decs)):
        oi = orbs.orbit_of[decs[i].idempotent]
        for j in range(i + 1, len(decs)):
            if orbs.orbit_of[decs[j].idempotent] != oi:
                return decs[i], decs[j]
    return None


def classify_element(ring, a: int) -> ElementClassification:
    """Classify one element from its three decomposition lists."""
    per_kind = {kind: decompositions(ring, a, kind) for kind in KINDS}
    orbs = conjugacy_classes(ring)
    counts = {kind: len(per_kind[kind]) for kind in KINDS}
    flags = {}
    failures = {}
    for kind in (KIND_CLEAN, KIND_NIL):
        decs = per_kind[kind]
        plain = bool(decs)
        orbits_hit = {orbs.orbit_of[d.idempotent] for d in decs}
        conj = plain and len(orbits_hit) == 1
        flags[kind] = (plain, len(decs) == 1, conj)
        if plain and not conj:
            pair = _first_nonconjugate_pair(ring, decs)
            if pair is None:
                raise InternalCheckError("orbit bookkeeping disagrees with pair scan")
            failures[kind] = pair
    return ElementClassification(
        ring,
        a,
        counts,
        clean=flags[KIND_CLEAN][0],
        uniquely_clean=flags[KIND_CLEAN][1],
        conjugate_clean=flags[KIND_CLEAN][2],
        nil_clean=flags[KIND_NIL][0],
        uniquely_nil_clean=flags[KIND_NIL][1],
        conjugate_nil_clean=flags[KIND_NIL][2],
        j_clean=bool(per_kind[KIND_J]),
        conjugacy_failures=failures,
    )


# ---------------------------------------------------------------------------
# ring-level classification


_FLAG_TO_KIND_VARIANT = {
    "clean": (KIND_CLEAN, "plain"),
    "uniquely_clean": (KIND_CLEAN, "unique"),
    "conjugate_clean": (KIND_CLEAN, "conjugate"),
    "nil_clean": (KIND_NIL, "plain"),
    "uniquely_nil_clean": (KIND_NIL, "unique"),
    "conjugate_nil_clean": (KIND_NIL, "conjugate"),
    "j_clean": (KIND_J, "plain"),
}


def ring_flag(ring, flag: str) -> tuple[bool, Optional[int]]:
    """Ring-level flag with the earliest violating element when false.

    This is the targeted entry point: it computes only the structures the
    requested flag needs (e.g. no radical for nil-clean queries).
    """
    if flag == "abelian":
        ok, witness = is_abelian(ring)
        return ok, (witness[0] if witness else None)
    kind, variant = _FLAG_TO_KIND_VARIANT[flag]
    cov = cover(ring, kind)
    vec = {"plain": cov.covered, "unique": cov.unique, "conjugate": cov.conjugate}[variant]
    if vec.all():
        return True, None
    return False, int(np.argmin(vec))


@dataclass
class RingReport:
    """Whole-ring verdicts: each flag is the conjunction over all elements."""

    label: str
    size: int
    flags: dict[str, bool]
    radical_size: int
    radical_nil: bool
    radical_class: Optional[int]
    witnesses: dict[str, int]                       # flag -> earliest failing element
    witness_details: dict[str, ElementClassification]
    timing: dict[str, float]

    def flag(self, name: str) -> bool:
        return self.flags[name]


def classify_ring(ring, *, cap: Optional[int] = None) -> RingReport:
    """Classify every element and fold the verdicts into ring-level flags.

    Cross-checks the uniquely = conjugate-and-abelian law for both the clean
    and nil-clean taxonomies before returning.
    """
    cap = DEFAULT_SIZE_CAP if cap is None else cap
    if ring.size > cap:
        raise SizeCapError(
            f"classification of {ring.label} ({ring.size} elements) exceeds the cap {cap}",
            required=ring.size,
        )
    t0 = time.perf_counter()
    units(ring)
    idempotents(ring)
    conjugacy_classes(ring)
    radical = jacobson_radical(ring)
    abelian, _ = is_abelian(ring)
    t1 = time.perf_counter()

    flags: dict[str, bool] = {}
    witnesses: dict[str, int] = {}
    for flag in RING_FLAGS:
        if flag == "abelian":
            ok, wit = is_abelian(ring)
            wit = wit[0] if wit else None
        else:
            ok, wit = ring_flag(ring, flag)
        flags[flag] = ok
        if not ok and wit is not None:
            witnesses[flag] = wit

    for uniq, conj in (("uniquely_clean", "conjugate_clean"),
                       ("uniquely_nil_clean", "conjugate_nil_clean")):
        if flags[uniq] != (flags[conj] and abelian):
            raise InternalCheckError(
                f"{ring.label}: {uniq} disagrees with {conj} and abelian"
            )
    t2 = time.perf_counter()

    details = {flag: classify_element(ring, w) for flag, w in witnesses.items()
               if flag != "abelian"}
    return RingReport(
        label=ring.label,
        size=ring.size,
        flags=flags,
        radical_size=len(radical),
        radical_nil=radical.is_nil,
        radical_class=radical.nilpotency_class,
        witnesses=witnesses,
        witness_details=details,
        timing={"structure_s": t1 - t0, "classify_s": t2 - t1},
    )
