"""Built-in verification suite: finite, machine-checkable theorem instances.

Each case pins a mathematical claim about clean/nil-clean/J-clean structure
to concrete finite rings and decides it by exhaustive computation. The
`source` tag records where the expected verdict comes from: "theorem" for
statements established in the literature, "computed" for values derived here
by independent brute force. A case passes iff every expected verdict equals
the computed one.

The pinned fleet below (all rings of at most 4096 elements) also backs the
property suite in the tests.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import cleanness, structure
from .cleanness import KIND_CLEAN, KIND_NIL, cover, ring_flag
from .dsl import build_from_text
from .errors import CleanRingsError
from .rings import (
    DEFAULT_SIZE_CAP,
    FiniteRing,
    adjoin_unity,
    make_matrix_ring,
    make_quotient,
    make_zmod,
    matrix_algebra,
    poly_nil_algebra,
    strictly_upper_algebra,
)
from .structure import (
    Ideal,
    are_conjugate,
    conjugacy_classes,
    idempotents,
    idempotents_lift_uniquely,
    is_abelian,
    is_boolean,
    jacobson_radical,
    nilpotency_index,
    nilpotent_mask,
    units,
)

FLEET_SPECS = (
    "F2",
    "Z3",
    "Z4",
    "Z6",
    "Z8",
    "Z9",
    "B2",
    "B3",
    "F2 x F2",
    "Z4 x F2",
    "F2 x Z3",
    "M(2,F2)",
    "M(2,Z3)",
    "M(2,Z4)",
    "M(2,B2)",
    "M(3,F2)",
    "UT(2,F2)",
    "UT(2,Z4)",
    "UT(3,F2)",
    "UT(3,Z4)",
    "T(F2,id,2)",
    "T(F2,id,3)",
    "T(Z4,id,2)",
    "T(Z4,id,3)",
    "T(F2 x F2,id,2)",
    "T(F2 x F2,swap(1,2),2)",
)


def build_fleet(cap: Optional[int] = None) -> list[FiniteRing]:
    """The pinned test fleet: expression-built rings plus the instruments
    that need non-textual payloads (unital adjunctions, a quotient)."""
    rings = [build_from_text(s, cap=cap) for s in FLEET_SPECS]
    F2 = make_zmod(2, label="F2")
    rings.append(adjoin_unity(strictly_upper_algebra(F2, 3)))
    rings.append(adjoin_unity(poly_nil_algebra(F2, 3)))
    rings.append(adjoin_unity(poly_nil_algebra(F2, 2)))
    m2z4 = build_from_text("M(2,Z4)")
    twos = [i for i in range(m2z4.size) if all(d in (0, 2) for row in m2z4.codec.decode(i) for d in row)]
    quotient, _ = make_quotient(m2z4, twos, label="M(2,Z4)/M(2,2Z4)")
    rings.append(quotient)
    return rings


# ---------------------------------------------------------------------------
# case infrastructure


@dataclass
class CaseResult:
    case_id: str
    title: str
    claim: str
    source: str
    passed: bool
    expected: dict
    actual: dict
    witnesses: list[str]
    seconds: float

    def as_dict(self) -> dict:
        return {
            "id": self.case_id,
            "title": self.title,
            "claim": self.claim,
            "source": self.source,
            "passed": self.passed,
            "expected": self.expected,
            "actual": self.actual,
            "witnesses": self.witnesses,
            "seconds": self.seconds,
        }


@dataclass
class VerificationCase:
    case_id: str
    title: str
    claim: str
    source: str  # "theorem" | "computed"
    runner: Callable[[Optional[int]], tuple[dict, dict, list[str]]]

    def run(self, cap: Optional[int] = None) -> CaseResult:
        start = time.perf_counter()
        try:
            expected, actual, witnesses = self.runner(cap)
        except CleanRingsError as exc:
            expected, actual = {"no-error": True}, {"no-error": False, "error": str(exc)}
            witnesses = [str(exc)]
        seconds = time.perf_counter() - start
        return CaseResult(
            self.case_id,
            self.title,
            self.claim,
            self.source,
            passed=(expected == {k: actual.get(k) for k in expected}),
            expected=expected,
            actual=actual,
            witnesses=witnesses,
            seconds=seconds,
        )


def _flags(ring, names):
    return {name: ring_flag(ring, name)[0] for name in names}


# ---------------------------------------------------------------------------
# the cases


def _v01(cap):
    """Idempotent pairs whose difference is nilpotent or radical are conjugate."""
    violations = []
    pairs_checked = 0
    for ring in build_fleet(cap):
        E = idempotents(ring)
        nil = nilpotent_mask(ring)
        jmask = jacobson_radical(ring).mask
        orbs = conjugacy_classes(ring)
        oid = orbs.orbit_ids(E)
        left = np.repeat(E, E.size)
        right = np.tile(E, E.size)
        diff = ring.sub_many(left, right)
        relevant = nil[diff] | jmask[diff]
        same = np.repeat(oid, E.size) == np.tile(oid, E.size)
        pairs_checked += int(relevant.sum())
        bad = relevant & ~same
        if bad.any():
            k = int(np.argmax(bad))
            violations.append(f"{ring.label}: e={int(left[k])}, f={int(right[k])}")
    return ({"violations": 0}, {"violations": len(violations), "pairs": pairs_checked}, violations)


def _v02(cap):
    """A truncated skew-polynomial ring is abelian iff the coefficient ring is
    abelian and the endomorphism fixes every coefficient idempotent."""
    instances = [
        ("T(F2 x F2,swap(1,2),2)", "F2 x F2", False),
        ("T(F2 x F2,id,2)", "F2 x F2", True),
        ("T(Z4,id,2)", "Z4", True),
    ]
    expected, actual, witnesses = {}, {}, []
    for text, base_text, want_abelian in instances:
        ring = build_from_text(text, cap=cap)
        base = build_from_text(base_text, cap=cap)
        abelian, wit = is_abelian(ring)
        # recover sigma action on base idempotents through the degree-0 part
        sigma_fixes = _sigma_fixes_idempotents(ring, base)
        criterion = is_abelian(base)[0] and sigma_fixes
        expected[f"{text}:abelian"] = want_abelian
        actual[f"{text}:abelian"] = abelian
        expected[f"{text}:criterion-match"] = True
        actual[f"{text}:criterion-match"] = abelian == criterion
        if wit:
            witnesses.append(f"{text}: idempotent {ring.show(wit[0])} fails to commute with {ring.show(wit[1])}")
    return expected, actual, witnesses


def _sigma_fixes_idempotents(skew_ring, base) -> bool:
    # sigma fixes e iff x commutes with the constant embedding of e,
    # since x * e = sigma(e) * x in the skew ring.
    width = len(skew_ring.codec.radices)
    x = skew_ring.codec.encode(tuple([0, base.one] + [0] * (width - 2)))
    for e in idempotents(base).tolist():
        const = skew_ring.codec.encode(tuple([e] + [0] * (width - 1)))
        if skew_ring.mul(x, const) != skew_ring.mul(const, x):
            return False
    return True


def _v03(cap):
    """Over the two-element field, the n-by-n matrix ring is conjugate nil
    clean exactly for n <= 2, and conjugate clean only for n = 1."""
    F2 = build_from_text("F2", cap=cap)
    M2 = build_from_text("M(2,F2)", cap=cap)
    M3 = build_from_text("M(3,F2)", cap=cap)
    expected = {
        "F2:conjugate_nil_clean": True,
        "F2:conjugate_clean": True,
        "M2:conjugate_nil_clean": True,
        "M2:conjugate_clean": False,
        "M2:uniquely_nil_clean": False,
        "M3:nil_clean": True,
        "M3:conjugate_nil_clean": False,
        "2x2-pair-present": True,
        "2x2-pair-nonconjugate": True,
        "3x3-pair-present": True,
        "3x3-pair-nonconjugate": True,
    }
    actual = {}
    actual["F2:conjugate_nil_clean"] = ring_flag(F2, "conjugate_nil_clean")[0]
    actual["F2:conjugate_clean"] = ring_flag(F2, "conjugate_clean")[0]
    actual["M2:conjugate_nil_clean"] = ring_flag(M2, "conjugate_nil_clean")[0]
    actual["M2:conjugate_clean"] = ring_flag(M2, "conjugate_clean")[0]
    actual["M2:uniquely_nil_clean"] = ring_flag(M2, "uniquely_nil_clean")[0]
    actual["M3:nil_clean"] = ring_flag(M3, "nil_clean")[0]
    actual["M3:conjugate_nil_clean"] = ring_flag(M3, "conjugate_nil_clean")[0]

    witnesses = []
    # the displayed 2x2 equation: [[0,1],[1,0]] = 0 + itself = E11 + [[1,1],[1,0]]
    a2 = M2.codec.encode([[0, 1], [1, 0]])
    decs = cleanness.clean_decompositions(M2, a2)
    pairs = {(d.idempotent, d.complement) for d in decs}
    e0, e11 = 0, M2.codec.encode([[1, 0], [0, 0]])
    u1, u2 = a2, M2.codec.encode([[1, 1], [1, 0]])
    actual["2x2-pair-present"] = (e0, u1) in pairs and (e11, u2) in pairs
    cert2 = are_conjugate(M2, e0, e11)
    actual["2x2-pair-nonconjugate"] = not cert2.conjugate
    witnesses.append(f"M(2,F2): {M2.show(a2)} splits off both idempotents {M2.show(e0)} and {M2.show(e11)}")
    # the displayed 3x3 equation: unitriangular all-ones = I + N = J + L
    a3 = M3.codec.encode([[1, 1, 1], [0, 1, 1], [0, 0, 1]])
    i3 = M3.one
    n3 = M3.codec.encode([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    j3 = M3.codec.encode([[1, 1, 1], [1, 1, 1], [1, 1, 1]])
    l3 = M3.codec.encode([[0, 0, 0], [1, 0, 0], [1, 1, 0]])
    decs3 = cleanness.nil_clean_decompositions(M3, a3)
    pairs3 = {(d.idempotent, d.complement) for d in decs3}
    actual["3x3-pair-present"] = (i3, n3) in pairs3 and (j3, l3) in pairs3
    cert3 = are_conjugate(M3, i3, j3)
    actual["3x3-pair-nonconjugate"] = not cert3.conjugate
    witnesses.append(f"M(3,F2): {M3.show(a3)} = {M3.show(i3)} + {M3.show(n3)} = {M3.show(j3)} + {M3.show(l3)}")
    return expected, actual, witnesses


def _v04(cap):
    """Matrix rings over a division ring other than F2 are not nil clean."""
    F3 = build_from_text("Z3", cap=cap)
    M2F3 = build_from_text("M(2,Z3)", cap=cap)
    expected = {"F3:nil_clean": False, "M2F3:nil_clean": False}
    ok3, wit3 = ring_flag(F3, "nil_clean")
    okm, witm = ring_flag(M2F3, "nil_clean")
    actual = {"F3:nil_clean": ok3, "M2F3:nil_clean": okm}
    witnesses = []
    if witm is not None:
        witnesses.append(f"M(2,Z3): element {M2F3.show(witm)} admits no nil-clean decomposition")
    return expected, actual, witnesses


_PRODUCT_FLAGS = (
    "clean", "uniquely_clean", "conjugate_clean",
    "nil_clean", "uniquely_nil_clean", "conjugate_nil_clean", "j_clean",
)


def _v05(cap):
    """A finite product is (conjugate/uniquely) (nil) clean iff every factor is."""
    pairs = [("Z4", "F2"), ("M(2,F2)", "F2"), ("UT(2,F2)", "Z4")]
    expected, actual, witnesses = {}, {}, []
    for left_text, right_text in pairs:
        left = build_from_text(left_text, cap=cap)
        right = build_from_text(right_text, cap=cap)
        prod = build_from_text(f"{left_text} x {right_text}", cap=cap)
        fl, fr, fp = (_flags(r, _PRODUCT_FLAGS) for r in (left, right, prod))
        key = f"{left_text} x {right_text}"
        expected[key] = True
        match = all(fp[name] == (fl[name] and fr[name]) for name in _PRODUCT_FLAGS)
        actual[key] = match
        if not match:
            witnesses.append(f"{key}: {fp} vs {fl} & {fr}")
    return expected, actual, witnesses


def _v06(cap):
    """Matrix rings over Boolean rings are conjugate nil clean iff n <= 2."""
    M2B2 = build_from_text("M(2,B2)", cap=cap)
    M3B1 = build_from_text("M(3,F2)", cap=cap)  # B1 is the two-element Boolean ring
    expected = {"M(2,B2):conjugate_nil_clean": True, "M(3,B1):conjugate_nil_clean": False}
    actual = {
        "M(2,B2):conjugate_nil_clean": ring_flag(M2B2, "conjugate_nil_clean")[0],
        "M(3,B1):conjugate_nil_clean": ring_flag(M3B1, "conjugate_nil_clean")[0],
    }
    return expected, actual, []


def _v07(cap):
    """Upper triangular matrix rings are conjugate clean iff the base is;
    they are never uniquely clean for n >= 2."""
    expected, actual, witnesses = {}, {}, []
    for base_text in ("F2", "Z4"):
        base = build_from_text(base_text, cap=cap)
        base_cc = ring_flag(base, "conjugate_clean")[0]
        for n in (2, 3):
            ring = build_from_text(f"UT({n},{base_text})", cap=cap)
            key = f"UT({n},{base_text})"
            expected[f"{key}:transfer"] = True
            actual[f"{key}:transfer"] = ring_flag(ring, "conjugate_clean")[0] == base_cc
            expected[f"{key}:uniquely_clean"] = False
            actual[f"{key}:uniquely_clean"] = ring_flag(ring, "uniquely_clean")[0]
    return expected, actual, witnesses


def _v08(cap):
    """A truncated skew-polynomial ring over a uniquely clean ring with an
    idempotent moved by sigma is conjugate clean but not uniquely clean."""
    ring = build_from_text("T(F2 x F2,swap(1,2),2)", cap=cap)
    base = build_from_text("F2 x F2", cap=cap)
    expected = {
        "base:uniquely_clean": True,
        "sigma-moves-idempotent": True,
        "conjugate_clean": True,
        "uniquely_clean": False,
        "conjugate_nil_clean": True,
        "uniquely_nil_clean": False,
    }
    actual = {
        "base:uniquely_clean": ring_flag(base, "uniquely_clean")[0],
        "sigma-moves-idempotent": not _sigma_fixes_idempotents(ring, base),
        "conjugate_clean": ring_flag(ring, "conjugate_clean")[0],
        "uniquely_clean": ring_flag(ring, "uniquely_clean")[0],
        "conjugate_nil_clean": ring_flag(ring, "conjugate_nil_clean")[0],
        "uniquely_nil_clean": ring_flag(ring, "uniquely_nil_clean")[0],
    }
    return expected, actual, []


def _v09(cap):
    """Every J-clean ring is conjugate clean; checked on J-clean instances."""
    expected, actual = {}, {}
    for text in ("Z4", "UT(2,F2)"):
        ring = build_from_text(text, cap=cap)
        expected[f"{text}:j_clean"] = True
        expected[f"{text}:conjugate_clean"] = True
        actual[f"{text}:j_clean"] = ring_flag(ring, "j_clean")[0]
        actual[f"{text}:conjugate_clean"] = ring_flag(ring, "conjugate_clean")[0]
    return expected, actual, []


def _v10(cap):
    """Factoring by a nil ideal preserves conjugate nil cleanness."""
    m2z4 = build_from_text("M(2,Z4)", cap=cap)
    twos = [i for i in range(m2z4.size) if all(d in (0, 2) for row in m2z4.codec.decode(i) for d in row)]
    ideal = Ideal.from_elements(m2z4, twos)
    quotient, _ = make_quotient(m2z4, ideal, label="M(2,Z4)/M(2,2Z4)")
    m2f2 = build_from_text("M(2,F2)", cap=cap)
    expected = {
        "ideal-nil": True,
        "M(2,Z4):conjugate_nil_clean": True,
        "quotient:conjugate_nil_clean": True,
        "transfer-equal": True,
        "quotient-matches-M(2,F2)": True,
    }
    big = ring_flag(m2z4, "conjugate_nil_clean")[0]
    small = ring_flag(quotient, "conjugate_nil_clean")[0]
    actual = {
        "ideal-nil": ideal.is_nil,
        "M(2,Z4):conjugate_nil_clean": big,
        "quotient:conjugate_nil_clean": small,
        "transfer-equal": big == small,
        "quotient-matches-M(2,F2)": _flags(quotient, _PRODUCT_FLAGS) == _flags(m2f2, _PRODUCT_FLAGS),
    }
    return expected, actual, []


def _v11(cap):
    """In a nil clean ring, 2 generates a nilpotent ideal; hence 2 must be
    nilpotent, which rules out rings such as Z6."""
    witnesses = []
    bad = 0
    for ring in build_fleet(cap):
        if not ring_flag(ring, "nil_clean")[0]:
            continue
        two = ring.add(ring.one, ring.one)
        if nilpotency_index(ring, two) is None:
            bad += 1
            witnesses.append(f"{ring.label}: 2 = {ring.show(two)} is not nilpotent")
    z6 = build_from_text("Z6", cap=cap)
    expected = {"nil-clean-rings-with-non-nilpotent-2": 0, "Z6:nil_clean": False, "Z6:2-nilpotent": False}
    actual = {
        "nil-clean-rings-with-non-nilpotent-2": bad,
        "Z6:nil_clean": ring_flag(z6, "nil_clean")[0],
        "Z6:2-nilpotent": nilpotency_index(z6, z6.add(1, 1)) is not None,
    }
    return expected, actual, witnesses


def _uniquely_nil_clean_characterization(ring) -> bool:
    radical = jacobson_radical(ring)
    quotient, _ = make_quotient(ring, radical, check=False)
    return is_boolean(quotient) and radical.is_nil and idempotents_lift_uniquely(ring, radical)


def _v12(cap):
    """Uniquely nil clean iff the radical is nil, the radical quotient is
    Boolean, and idempotents lift uniquely modulo the radical."""
    expected, actual = {}, {}
    for text in ("Z4", "Z8", "B2", "Z6"):
        ring = build_from_text(text, cap=cap)
        expected[text] = True
        actual[text] = ring_flag(ring, "uniquely_nil_clean")[0] == _uniquely_nil_clean_characterization(ring)
    return expected, actual, []


def _v13(cap):
    """No matrix ring of dimension >= 3 is conjugate nil clean; the 3x3
    witness extends block-diagonally to a 4x4 pair refuted over the full
    unit group of 20160 invertible matrices."""
    F2 = make_zmod(2, label="F2")
    M3 = build_from_text("M(3,F2)", cap=cap)
    expected = {
        "M3:conjugate_nil_clean": False,
        "M4:pair-decomposes": True,
        "M4:pair-nonconjugate": True,
        "M4:unit-count": 20160,
    }
    actual = {}
    actual["M3:conjugate_nil_clean"] = ring_flag(M3, "conjugate_nil_clean")[0]
    M4 = make_matrix_ring(F2, 4, cap=max(cap or DEFAULT_SIZE_CAP, 1 << 17))

    def embed(rows3):
        return M4.codec.encode([row + [0] for row in rows3] + [[0, 0, 0, 0]])

    a = embed([[1, 1, 1], [0, 1, 1], [0, 0, 1]])
    e1 = embed([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    n1 = embed([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    e2 = embed([[1, 1, 1], [1, 1, 1], [1, 1, 1]])
    n2 = embed([[0, 0, 0], [1, 0, 0], [1, 1, 0]])
    nil = nilpotent_mask(M4)
    decomposes = (
        M4.add(e1, n1) == a
        and M4.add(e2, n2) == a
        and M4.mul(e1, e1) == e1
        and M4.mul(e2, e2) == e2
        and bool(nil[n1])
        and bool(nil[n2])
    )
    cert = are_conjugate(M4, e1, e2)
    actual["M4:pair-decomposes"] = decomposes
    actual["M4:pair-nonconjugate"] = not cert.conjugate
    actual["M4:unit-count"] = len(units(M4))
    witnesses = [f"M(4,F2): idempotents {M4.show(e1)} and {M4.show(e2)} are not conjugate"]
    return expected, actual, witnesses


def _v14(cap):
    """For commutative rings: nil clean = uniquely nil clean = (radical nil
    and radical quotient Boolean)."""
    expected, actual = {}, {}
    for text in ("Z4", "Z6", "Z8", "B2"):
        ring = build_from_text(text, cap=cap)
        radical = jacobson_radical(ring)
        quotient, _ = make_quotient(ring, radical, check=False)
        characterization = radical.is_nil and is_boolean(quotient)
        nil_clean = ring_flag(ring, "nil_clean")[0]
        unc = ring_flag(ring, "uniquely_nil_clean")[0]
        expected[text] = True
        actual[text] = nil_clean == unc == characterization
    return expected, actual, []


def _v15(cap):
    """Desk-scale nil-algebra instruments: the unital adjunction of a nil
    algebra is uniquely nil clean, its 2x2 matrix algebra is nil, and the
    2x2 matrix ring over the adjunction is nil clean and conjugate nil
    clean."""
    F2 = make_zmod(2, label="F2")
    expected, actual, witnesses = {}, {}, []
    for alg in (strictly_upper_algebra(F2, 3), poly_nil_algebra(F2, 3)):
        star = adjoin_unity(alg)
        name = alg.label
        expected[f"{name}:star-idempotents"] = [0, 1]
        actual[f"{name}:star-idempotents"] = idempotents(star).tolist()
        expected[f"{name}:star-uniquely-nil-clean"] = True
        actual[f"{name}:star-uniquely-nil-clean"] = ring_flag(star, "uniquely_nil_clean")[0]
        mat_alg = matrix_algebra(alg, 2)
        expected[f"{name}:M2(A)-nil"] = True
        actual[f"{name}:M2(A)-nil"] = bool(nilpotent_mask(mat_alg).all())
        big = make_matrix_ring(star, 2, cap=max(cap or DEFAULT_SIZE_CAP, 1 << 17))
        expected[f"{name}:M2(A*)-nil-clean"] = True
        actual[f"{name}:M2(A*)-nil-clean"] = ring_flag(big, "nil_clean")[0]
        expected[f"{name}:M2(A*)-conjugate-nil-clean"] = True
        actual[f"{name}:M2(A*)-conjugate-nil-clean"] = ring_flag(big, "conjugate_nil_clean")[0]
        witnesses.append(f"{name}: |A*| = {star.size}, |M2(A*)| = {big.size}")
    return expected, actual, witnesses


def _v16(cap):
    """Whenever a is nil clean, -a is clean; checked on every fleet element."""
    violations = []
    for ring in build_fleet(cap):
        nil_cov = cover(ring, KIND_NIL).covered
        clean_cov = cover(ring, KIND_CLEAN).covered
        neg = ring.neg_many(ring.elements())
        bad = nil_cov & ~clean_cov[neg]
        if bad.any():
            a = int(np.argmax(bad))
            violations.append(f"{ring.label}: {ring.show(a)} is nil clean but -a is not clean")
    return ({"violations": 0}, {"violations": len(violations)}, violations)


ALL_CASES = (
    VerificationCase(
        "V01", "idempotent-conjugacy",
        "idempotents whose difference is nilpotent or lies in the radical are conjugate",
        "theorem", _v01),
    VerificationCase(
        "V02", "skew-abelian-criterion",
        "a truncated skew-polynomial ring is abelian iff the base is abelian and sigma fixes its idempotents",
        "theorem", _v02),
    VerificationCase(
        "V03", "matrix-rings-over-f2",
        "M_n over the two-element field: conjugate nil clean iff n <= 2, conjugate clean iff n = 1",
        "theorem", _v03),
    VerificationCase(
        "V04", "matrix-ring-over-f3",
        "a matrix ring over a division ring other than F2 is not nil clean",
        "theorem", _v04),
    VerificationCase(
        "V05", "product-closure",
        "a finite product is (conjugate/uniquely) (nil) clean iff all factors are",
        "theorem", _v05),
    VerificationCase(
        "V06", "boolean-matrix-rings",
        "matrix rings over Boolean rings are conjugate nil clean iff n <= 2",
        "theorem", _v06),
    VerificationCase(
        "V07", "upper-triangular-transfer",
        "UT_n is conjugate clean iff the base ring is; never uniquely clean for n >= 2",
        "theorem", _v07),
    VerificationCase(
        "V08", "skew-conjugate-not-unique",
        "a skew truncation moving an idempotent is conjugate clean but not uniquely clean",
        "theorem", _v08),
    VerificationCase(
        "V09", "j-clean-implies-conjugate-clean",
        "every J-clean ring is conjugate clean",
        "theorem", _v09),
    VerificationCase(
        "V10", "nil-ideal-quotient-transfer",
        "conjugate nil cleanness transfers along quotients by nil ideals",
        "theorem", _v10),
    VerificationCase(
        "V11", "two-is-nilpotent",
        "in a nil clean ring the element 2 is nilpotent",
        "theorem", _v11),
    VerificationCase(
        "V12", "uniquely-nil-clean-characterization",
        "uniquely nil clean iff radical nil, radical quotient Boolean, idempotents lift uniquely",
        "theorem", _v12),
    VerificationCase(
        "V13", "no-conjugate-nil-clean-matrices",
        "matrix rings of dimension >= 3 are never conjugate nil clean; 4x4 witness refuted over all units",
        "theorem", _v13),
    VerificationCase(
        "V14", "commutative-characterization",
        "commutative: nil clean = uniquely nil clean = (radical nil and radical quotient Boolean)",
        "theorem", _v14),
    VerificationCase(
        "V15", "nil-algebra-instruments",
        "unital adjunction of a nil algebra is uniquely nil clean; its 2x2 matrix algebra is nil; "
        "the matrix ring over the adjunction is nil clean and conjugate nil clean",
        "computed", _v15),
    VerificationCase(
        "V16", "nil-clean-negates-to-clean",
        "whenever a is nil clean, -a is clean",
        "theorem", _v16),
)


def run_cases(filter_text: Optional[str] = None, threads: int = 1,
              cap: Optional[int] = None) -> list[CaseResult]:
    """Run the suite, optionally filtered by case id substring."""
    cases = [c for c in ALL_CASES if not filter_text or filter_text in c.case_id]
    if threads > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: c.run(cap), cases))
    else:
        results = [c.run(cap) for c in cases]
    return sorted(results, key=lambda r: r.case_id)
