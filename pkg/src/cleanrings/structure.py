"""Structural inventory of a finite ring.

Everything here is a pure query over an immutable ring: idempotents, the
unit group with inverses, nilpotency, the Jacobson radical, ideals, conjugacy
of idempotents under the unit group, centrality, annihilators, direct-sum
splits, and idempotent lifting along a clean decomposition. Results are
frozen on the ring after the first computation.

Unit detection uses the idempotent-power criterion: in a finite ring the
cyclic semigroup generated by a contains exactly one idempotent e(a), and a
is a unit iff e(a) = 1. Squaring ceil(log2 size) times lands every element in
its cycle; a short walk around the cycle then finds e(a). This decides all
elements in a number of vectorized passes bounded by the largest
multiplicative order, instead of scanning size^2 pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .errors import InternalCheckError, InvalidArgumentError, InvalidIdealError
from .rings import FiniteRing, NonUnitalAlgebra, _idx

Array = np.ndarray

IDEAL_CLASS_LIMIT = 4096  # nilpotency class computed only for ideals this small


# ---------------------------------------------------------------------------
# idempotents and nilpotents


def idempotents(ring) -> Array:
    """Sorted indices of all a with a*a = a."""

    def compute():
        idx = ring.elements()
        return idx[ring.mul_many(idx, idx) == idx]

    return ring.freeze("idempotents", compute)


def idempotent_mask(ring) -> Array:
    def compute():
        mask = np.zeros(ring.size, dtype=bool)
        mask[idempotents(ring)] = True
        mask.setflags(write=False)
        return mask

    return ring.freeze("idempotent_mask", compute)


def nilpotent_mask(ring) -> Array:
    """Boolean mask of nilpotent elements, by a repeated-squaring sweep.

    A nilpotent element of a ring with N elements has index at most N, so
    a is nilpotent iff a**(2**k) = 0 once 2**k >= N.
    """

    def compute():
        s = ring.elements()
        for _ in range(max(1, (ring.size - 1).bit_length())):
            s = ring.mul_many(s, s)
        mask = s == ring.zero
        mask.setflags(write=False)
        return mask

    return ring.freeze("nilpotent_mask", compute)


def nilpotency_index(ring, a: int) -> Optional[int]:
    """Least k with a**k = 0, or None if a is not nilpotent.

    Decides by repeated squaring (at most ceil(log2 size) + 1 steps), then
    recovers the exact index by a linear scan below the successful bound.
    """
    if a == ring.zero:
        return 1
    p = a
    bound = 1
    for _ in range((ring.size - 1).bit_length() + 1):
        p = ring.mul(p, p)
        bound *= 2
        if p == ring.zero:
            break
    else:
        return None
    power = a
    k = 1
    while power != ring.zero:
        power = ring.mul(power, a)
        k += 1
        if k > bound:
            raise InternalCheckError("nilpotency index exceeded its squaring bound")
    return k


# ---------------------------------------------------------------------------
# units


@dataclass
class UnitGroup:
    """The group of two-sided invertible elements with its inverse map."""

    ring: FiniteRing
    units: Array
    mask: Array
    inverse: Array  # full-size array, -1 on non-units

    def __len__(self):
        return int(self.units.size)

    def contains(self, i: int) -> bool:
        return bool(self.mask[i])

    def inverse_of(self, u: int) -> int:
        v = int(self.inverse[u])
        if v < 0:
            raise InvalidArgumentError(f"{u} is not a unit of {self.ring.label}")
        return v


def _idempotent_power(ring, base: Array) -> Array:
    """For each b already inside its cycle, the identity of the group <b>."""
    n = base.size
    ident = np.full(n, -1, dtype=np.int64)
    prev = base.copy()
    cur = ring.mul_many(base, base)
    active = np.arange(n)
    steps = 0
    while active.size:
        steps += 1
        if steps > ring.size + 1:
            raise InternalCheckError("cycle walk failed to close; evaluators are inconsistent")
        hit = cur[active] == base[active]
        ident[active[hit]] = prev[active[hit]]
        active = active[~hit]
        if active.size:
            prev[active] = cur[active]
            cur[active] = ring.mul_many(cur[active], base[active])
    return ident


def units(ring) -> UnitGroup:
    """All elements possessing a two-sided inverse, with the inverse map."""

    def compute():
        if ring.units_hint is not None:
            us, inv = ring.units_hint()
            us = np.sort(_idx(us))
            if inv is None:
                inv = _inverses_by_walk(ring, us)
            else:
                inv = _idx(inv)
        else:
            idx = ring.elements()
            s = idx
            for _ in range(max(1, (ring.size - 1).bit_length())):
                s = ring.mul_many(s, s)
            ident = _idempotent_power(ring, s)
            us = idx[ident == ring.one]
            inv = _inverses_by_walk(ring, us)
        mask = np.zeros(ring.size, dtype=bool)
        mask[us] = True
        uinv = inv[us]
        if not (
            np.all(ring.mul_many(us, uinv) == ring.one)
            and np.all(ring.mul_many(uinv, us) == ring.one)
        ):
            raise InternalCheckError("inverse map failed verification")
        mask.setflags(write=False)
        return UnitGroup(ring, us, mask, inv)

    return ring.freeze("units", compute)


def _inverses_by_walk(ring, us: Array) -> Array:
    """inverse(u) = u**(ord(u)-1), found by walking powers of each unit."""
    inv = np.full(ring.size, -1, dtype=np.int64)
    cur = us.copy()
    remaining = np.arange(us.size)
    steps = 0
    while remaining.size:
        steps += 1
        if steps > ring.size + 1:
            raise InternalCheckError("inverse walk failed to terminate on a claimed unit")
        uu = us[remaining]
        done = ring.mul_many(cur[remaining], uu) == ring.one
        inv[uu[done]] = cur[remaining[done]]
        remaining = remaining[~done]
        if remaining.size:
            cur[remaining] = ring.mul_many(cur[remaining], us[remaining])
    return inv


# ---------------------------------------------------------------------------
# ideals


@dataclass
class Ideal:
    """A two-sided ideal given by its sorted element set, with nilness data."""

    ring: FiniteRing
    elements: Array
    mask: Array
    is_nil: bool
    nilpotency_class: Optional[int]

    def __len__(self):
        return int(self.elements.size)

    def contains(self, i: int) -> bool:
        return bool(self.mask[i])

    @staticmethod
    def from_elements(ring, elements: Iterable[int], *, check: bool = True) -> "Ideal":
        els = np.unique(_idx(list(elements)))
        if els.size == 0 or els[0] < 0 or els[-1] >= ring.size:
            raise InvalidIdealError("ideal elements out of range or empty")
        if check:
            _verify_ideal(ring, els)
        mask = np.zeros(ring.size, dtype=bool)
        mask[els] = True
        mask.setflags(write=False)
        nil = bool(nilpotent_mask(ring)[els].all())
        cls = _ideal_nilpotency_class(ring, els) if nil and els.size <= IDEAL_CLASS_LIMIT else None
        return Ideal(ring, els, mask, nil, cls)


def _verify_ideal(ring, els: Array) -> None:
    mask = np.zeros(ring.size, dtype=bool)
    mask[els] = True
    if not mask[ring.zero]:
        raise InvalidIdealError("an ideal must contain zero")
    left = np.repeat(els, els.size)
    right = np.tile(els, els.size)
    if not mask[ring.add_many(left, right)].all():
        raise InvalidIdealError("subset not closed under addition")
    if not mask[ring.neg_many(els)].all():
        raise InvalidIdealError("subset not closed under negation")
    idx = ring.elements()
    for a in els.tolist():
        if not mask[ring.mul_many(idx, a)].all() or not mask[ring.mul_many(a, idx)].all():
            raise InvalidIdealError(f"subset not absorbing at element {a}")


def _additive_closure(ring, seed: Array) -> Array:
    mask = np.zeros(ring.size, dtype=bool)
    mask[seed] = True
    mask[ring.zero] = True
    frontier = np.flatnonzero(mask)
    while frontier.size:
        members = np.flatnonzero(mask)
        sums = ring.add_many(
            np.repeat(frontier, members.size), np.tile(members, frontier.size)
        )
        new = np.unique(sums[~mask[sums]])
        mask[new] = True
        frontier = new
    return np.flatnonzero(mask)


def _ideal_nilpotency_class(ring, els: Array) -> int:
    """Least k with I**k = 0, by iterating products and additive closure."""
    current = els
    k = 1
    while not (current.size == 1 and current[0] == ring.zero):
        prods = ring.mul_many(np.repeat(els, current.size), np.tile(current, els.size))
        current = _additive_closure(ring, np.unique(prods))
        k += 1
        if k > els.size + 1:
            raise InternalCheckError("ideal power chain failed to reach zero on a nil ideal")
    return k


def ideal_closure(ring, generators: Iterable[int]) -> Ideal:
    """Least two-sided ideal containing the generators, by fixed-point iteration."""
    idx = ring.elements()
    mask = np.zeros(ring.size, dtype=bool)
    mask[ring.zero] = True
    queue = [int(g) for g in generators]
    for g in queue:
        if not 0 <= g < ring.size:
            raise InvalidArgumentError(f"generator {g} out of range")
        mask[g] = True
    while queue:
        a = queue.pop()
        members = np.flatnonzero(mask)
        new_vals = [
            ring.neg_many(np.array([a])),
            ring.add_many(a, members),
            ring.mul_many(idx, a),
            ring.mul_many(a, idx),
        ]
        for vals in new_vals:
            fresh = np.unique(vals[~mask[vals]])
            if fresh.size:
                mask[fresh] = True
                queue.extend(fresh.tolist())
    return Ideal.from_elements(ring, np.flatnonzero(mask), check=False)


def jacobson_radical(ring) -> Ideal:
    """J(R) = { x : 1 - r*x is a unit for every r }, computed directly.

    Candidates are restricted to nilpotent elements (the radical of a finite
    ring is a nilpotent ideal, so this loses nothing), then each survivor is
    verified against every r.
    """

    def compute():
        U = units(ring)
        quasi = np.zeros(ring.size, dtype=bool)
        quasi[ring.sub_many(ring.one, U.units)] = True  # y with 1 - y a unit
        candidates = np.flatnonzero(nilpotent_mask(ring))
        idx = ring.elements()
        members = []
        for x in candidates.tolist():
            ok = True
            for lo in range(0, ring.size, 1 << 16):
                rs = idx[lo : lo + (1 << 16)]
                if not quasi[ring.mul_many(rs, x)].all():
                    ok = False
                    break
            if ok:
                members.append(x)
        return Ideal.from_elements(ring, members)

    return ring.freeze("radical", compute)


# ---------------------------------------------------------------------------
# conjugacy of idempotents under the unit group


@dataclass
class ConjugacyCertificate:
    """Answer to `are e and f conjugate`, with a checkable witness when yes.

    When `witness` is present, e = u * f * u^(-1) holds by evaluation; when
    absent, the exhaustive orbit of f under all units missed e.
    """

    e: int
    f: int
    witness: Optional[int]

    @property
    def conjugate(self) -> bool:
        return self.witness is not None


@dataclass
class IdempotentOrbits:
    """Partition of the idempotent set into unit-conjugacy orbits."""

    ring: FiniteRing
    orbit_of: dict[int, int]
    orbits: list[Array]
    reps: list[int]
    to_rep_witness: dict[int, int]  # w with member = w * rep * w^(-1)

    def orbit_ids(self, els: Array) -> Array:
        return np.array([self.orbit_of[int(e)] for e in els], dtype=np.int64)


def conjugacy_classes(ring) -> IdempotentOrbits:
    """Orbits of the idempotent set under u e u^(-1), computed exhaustively."""

    def compute():
        E = idempotents(ring)
        U = units(ring)
        uinv = U.inverse[U.units]
        orbit_of: dict[int, int] = {}
        witness: dict[int, int] = {}
        orbits: list[Array] = []
        reps: list[int] = []
        for e in E.tolist():
            if e in orbit_of:
                continue
            oid = len(orbits)
            conj = ring.mul_many(ring.mul_many(U.units, e), uinv)
            members, first = np.unique(conj, return_index=True)
            for m, fi in zip(members.tolist(), first.tolist()):
                orbit_of[m] = oid
                witness[m] = int(U.units[fi])
            orbits.append(members)
            reps.append(e)
        return IdempotentOrbits(ring, orbit_of, orbits, reps, witness)

    return ring.freeze("orbits", compute)


def are_conjugate(ring, e: int, f: int) -> ConjugacyCertificate:
    """Search the unit group for u with e = u f u^(-1)."""
    if ring.mul(e, e) != e or ring.mul(f, f) != f:
        raise InvalidArgumentError("conjugacy is only decided between idempotents")
    orbs = conjugacy_classes(ring)
    if orbs.orbit_of[e] != orbs.orbit_of[f]:
        return ConjugacyCertificate(e, f, None)
    U = units(ring)
    we = orbs.to_rep_witness[e]  # e = we * rep * we^(-1)
    wf = orbs.to_rep_witness[f]
    u = ring.mul(we, U.inverse_of(wf))
    check = ring.mul(ring.mul(u, f), U.inverse_of(u))
    if check != e:
        raise InternalCheckError("composed conjugacy witness failed verification")
    return ConjugacyCertificate(e, f, u)


# ---------------------------------------------------------------------------
# centrality, annihilators, splits, lifting


def is_abelian(ring) -> tuple[bool, Optional[tuple[int, int]]]:
    """True iff every idempotent is central; otherwise a witness (e, r)."""

    def compute():
        idx = ring.elements()
        for e in idempotents(ring).tolist():
            left = ring.mul_many(e, idx)
            right = ring.mul_many(idx, e)
            bad = left != right
            if bad.any():
                return (False, (e, int(np.argmax(bad))))
        return (True, None)

    return ring.freeze("abelian", compute)


def is_commutative(ring) -> bool:
    def compute():
        idx = ring.elements()
        for a in range(ring.size):
            if not np.array_equal(ring.mul_many(a, idx), ring.mul_many(idx, a)):
                return False
        return True

    return ring.freeze("commutative", compute)


def is_boolean(ring) -> bool:
    """Every element idempotent."""
    return bool(idempotent_mask(ring).all())


def two_sided_annihilator(ring, subring: Iterable[int], subset: Iterable[int]) -> set[int]:
    """{ r in subring : r*s = s*r = 0 for all s in subset }."""
    S = np.unique(_idx(list(subring)))
    if S.size == 0 or S[0] < 0 or S[-1] >= ring.size:
        raise InvalidArgumentError("subring elements out of range or empty")
    smask = np.zeros(ring.size, dtype=bool)
    smask[S] = True
    if not smask[ring.one]:
        raise InvalidArgumentError("subring must contain one")
    left = np.repeat(S, S.size)
    right = np.tile(S, S.size)
    if not (
        smask[ring.add_many(left, right)].all()
        and smask[ring.mul_many(left, right)].all()
        and smask[ring.neg_many(S)].all()
    ):
        raise InvalidArgumentError("subring is not closed under the ring operations")
    sub_list = list(subset)
    T = np.unique(_idx(sub_list)) if sub_list else np.empty(0, dtype=np.int64)
    out = set()
    for r in S.tolist():
        if T.size == 0 or (
            np.all(ring.mul_many(r, T) == ring.zero) and np.all(ring.mul_many(T, r) == ring.zero)
        ):
            out.add(r)
    return out


@dataclass
class SplitReport:
    """Verdict on T = S (+) I with the violated clause named on failure."""

    ok: bool
    clause: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def check_split(ring, subring: Iterable[int], ideal: Ideal) -> SplitReport:
    """Check that `subring` is a unital subring, `ideal` a verified ideal,
    they meet only in zero, and every element is uniquely subring + ideal.
    """
    S = np.unique(_idx(list(subring)))
    smask = np.zeros(ring.size, dtype=bool)
    smask[S] = True
    if not smask[ring.one] or not smask[ring.zero]:
        return SplitReport(False, "subring-unital", (ring.one,))
    left = np.repeat(S, S.size)
    right = np.tile(S, S.size)
    sums = ring.add_many(left, right)
    if not smask[sums].all():
        k = int(np.argmin(smask[sums]))
        return SplitReport(False, "subring-add-closure", (int(left[k]), int(right[k])))
    prods = ring.mul_many(left, right)
    if not smask[prods].all():
        k = int(np.argmin(smask[prods]))
        return SplitReport(False, "subring-mul-closure", (int(left[k]), int(right[k])))
    if not smask[ring.neg_many(S)].all():
        return SplitReport(False, "subring-neg-closure", None)
    try:
        _verify_ideal(ring, ideal.elements)
    except InvalidIdealError as exc:
        return SplitReport(False, "ideal", (str(exc),))
    inter = S[ideal.mask[S]]
    if inter.size != 1 or inter[0] != ring.zero:
        return SplitReport(False, "intersection", tuple(int(x) for x in inter[:3]))
    I = ideal.elements
    seen = np.full(ring.size, -1, dtype=np.int64)
    for s in S.tolist():
        t = ring.add_many(s, I)
        dup = seen[t] >= 0
        if dup.any():
            k = int(np.argmax(dup))
            return SplitReport(False, "sum-not-direct", (s, int(I[k]), int(t[k])))
        seen[t] = s
    if (seen < 0).any():
        missing = int(np.argmax(seen < 0))
        return SplitReport(False, "sum-not-covering", (missing,))
    return SplitReport(True)


def lift_idempotent(ring, ideal: Ideal, a: int) -> int:
    """Lift a modulo-I idempotent to a genuine one along a clean decomposition.

    Requires a*a - a in I and a clean; returns f = u (1 - e) u^(-1) for the
    first clean decomposition a = e + u, so that f*f = f and f - a in I.
    """
    from .errors import NotCleanError, PreconditionError

    defect = ring.sub(ring.mul(a, a), a)
    if not ideal.contains(defect):
        raise PreconditionError(
            f"a*a - a = {defect} is not in the ideal; {a} is not an idempotent mod I"
        )
    U = units(ring)
    for e in idempotents(ring).tolist():
        u = ring.sub(a, e)
        if U.contains(u):
            f = ring.mul(ring.mul(u, ring.sub(ring.one, e)), U.inverse_of(u))
            if ring.mul(f, f) != f or not ideal.contains(ring.sub(f, a)):
                raise InternalCheckError("lifted idempotent failed its contract")
            return f
    raise NotCleanError(f"element {a} of {ring.label} admits no clean decomposition")


def idempotents_lift_uniquely(ring, ideal: Ideal) -> bool:
    """Every a with a*a - a in I has exactly one idempotent e with e - a in I."""
    E = idempotents(ring)
    for a in range(ring.size):
        if not ideal.contains(ring.sub(ring.mul(a, a), a)):
            continue
        lifts = int(ideal.mask[ring.sub_many(E, a)].sum())
        if lifts != 1:
            return False
    return True
