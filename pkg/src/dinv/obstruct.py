"""Knot-level obstruction pipeline.

A knot enters as a record (name, determinant, signature, and a recipe for
the d-invariant profile of its double branched cover); the checks assemble
the matching engines and the form enumeration into verdicts:

* ``check_u1``     - obstruction to unknotting number one;
* ``check_uc1``    - obstruction to concordance unknotting number one;
* ``check_cstar1`` - obstruction to four-ball crossing number one;
* ``check_cstar_k``- obstruction to an immersed disk with k double points
                     (so a passing obstruction gives c* >= k+1).

Sign bookkeeping follows the spin-manifold argument: with the signature
normalized to be >= 0 by mirroring, a knot of signature two has its double
cover on the positive-surgery side, so a single orientation is tested; a
knot of signature zero may need either orientation and both are tested.
Signatures of four or more already exclude the "= 1" cases via the usual
signature bound, which the verdict records as the reason.

Levine-Tristram signatures (for double-point sign constraints) are
re-exported here from :mod:`dinv.signatures`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import IntMatrix
from .profiles import DProfile, lens_d, negate, connected_sum, parse_profile
from .lattice import (QuadForm, d_from_sharp, parse_form, torus_cover_plumbing,
                      brieskorn_plumbing, enumerate_half_integer_forms)
from .matching import (MatchVerdict, positive_even_subgroup_matching,
                       symmetric_monotone_matching, monotone_subgroup_matching,
                       form_obstruction, _with_sign)
from .signatures import SeifertData, levine_tristram, levine_tristram_torus, \
    hermitian_signature, torus_seifert_matrix


# ---------------------------------------------------------------------------
# cover specifications and knot records
# ---------------------------------------------------------------------------

COVER_KINDS = ("lens", "goeritz", "plumbing", "brieskorn", "explicit", "sum", "none")


@dataclass(frozen=True)
class CoverSpec:
    """Recipe for the double branched cover profile.

    kinds: ``lens`` p,q (the cover of the two-bridge knot S(p,q));
    ``goeritz``/``plumbing`` a form file (sign header decides the extremum
    convention); ``brieskorn`` p,q (the cover M(2,p,q) of the torus knot);
    ``explicit`` a profile file; ``sum`` of signed sub-specs; ``none``
    (profile unavailable, only emptiness-style obstructions can run).
    """

    kind: str
    args: tuple = ()

    def canonical(self) -> str:
        if self.kind == "sum":
            return "sum:" + ";".join(("-" if s < 0 else "") + sub.canonical()
                                     for s, sub in self.args)
        return self.kind + ":" + ",".join(str(a) for a in self.args)


def parse_cover_spec(kind: str, args: str) -> CoverSpec:
    kind = kind.strip()
    if kind not in COVER_KINDS:
        raise ValueError(f"unknown cover kind {kind!r}")
    args = args.strip()
    if kind in ("lens", "brieskorn"):
        p, q = (int(x) for x in args.split(","))
        return CoverSpec(kind, (p, q))
    if kind in ("goeritz", "plumbing", "explicit"):
        if not args:
            raise ValueError(f"cover kind {kind} needs a file argument")
        return CoverSpec(kind, (args,))
    if kind == "none":
        return CoverSpec("none")
    # sum: semicolon-separated signed sub-specs "kind:args", no nesting
    parts = [p.strip() for p in args.split(";") if p.strip()]
    subs = []
    for part in parts:
        sgn = +1
        if part.startswith("-"):
            sgn = -1
            part = part[1:]
        k, _, a = part.partition(":")
        sub = parse_cover_spec(k, a)
        if sub.kind == "sum":
            raise ValueError("nested sums are not supported")
        subs.append((sgn, sub))
    if not subs:
        raise ValueError("empty sum cover")
    return CoverSpec("sum", tuple(subs))


@dataclass(frozen=True)
class KnotRecord:
    name: str
    determinant: int
    signature: int
    cover: CoverSpec
    unknotting: int = None
    slice_genus: int = None
    notes: str = ""

    def __post_init__(self):
        if self.determinant < 1 or self.determinant % 2 == 0:
            raise ValueError(f"{self.name}: knot determinant must be odd and positive")
        if self.signature % 2 != 0:
            raise ValueError(f"{self.name}: knot signature must be even")


def resolve_profile(rec: KnotRecord, base_dir: str = ".") -> DProfile:
    """d-invariant profile of the double branched cover named by the record.

    The resolved group order must equal the knot determinant (and hence be
    odd); a mismatch is an input error, not a warning.
    """
    P = _resolve_cover(rec.cover, base_dir)
    if P.order != rec.determinant:
        raise ValueError(f"{rec.name}: cover has |H_1| = {P.order}, "
                         f"determinant says {rec.determinant}")
    return DProfile(P.group, P.values, label=f"Sigma({rec.name})")


def _resolve_cover(spec: CoverSpec, base_dir: str) -> DProfile:
    if spec.kind == "lens":
        return lens_d(spec.args[0], spec.args[1], +1)
    if spec.kind == "brieskorn":
        return d_from_sharp(torus_cover_plumbing(*spec.args))
    if spec.kind in ("goeritz", "plumbing"):
        path = os.path.join(base_dir, spec.args[0])
        with open(path) as fh:
            Q = parse_form(fh.read())
        return d_from_sharp(Q)
    if spec.kind == "explicit":
        path = os.path.join(base_dir, spec.args[0])
        with open(path) as fh:
            return parse_profile(fh.read(), label=spec.args[0])
    if spec.kind == "sum":
        total = None
        for sgn, sub in spec.args:
            P = _resolve_cover(sub, base_dir)
            if sgn < 0:
                P = negate(P)
            total = P if total is None else connected_sum(total, P)
        return total
    raise ValueError(f"cover kind {spec.kind!r} carries no profile")


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

@dataclass
class CheckVerdict:
    check: str
    obstructed: bool
    reason: str
    engine_verdicts: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    def to_text(self) -> str:
        head = f"{self.check}: {'OBSTRUCTED' if self.obstructed else 'not obstructed'} ({self.reason})"
        lines = [head]
        for fl in self.flags:
            lines.append(f"  flag: {fl}")
        for v in self.engine_verdicts:
            lines.extend("  " + ln for ln in v.to_text().rstrip("\n").split("\n"))
        return "\n".join(lines) + "\n"


@dataclass
class ObstructionReport:
    knot: str
    verdicts: dict
    sign_mode: str

    def to_text(self) -> str:
        lines = [f"knot: {self.knot}", f"orientations tested: {self.sign_mode}"]
        for name in sorted(self.verdicts):
            lines.extend(self.verdicts[name].to_text().rstrip("\n").split("\n"))
        return "\n".join(lines) + "\n"


def _oriented_profiles(rec: KnotRecord, P: DProfile):
    """Profiles to test, per the sign dispatch.

    Returns (list of (sign, profile), sign_mode string).  The record's
    profile is d(Sigma(K)); for signature -2 the knot is mirrored (profile
    negated) so that the tested knot has signature +2.
    """
    s = rec.signature
    if s == 2:
        return [(+1, P)], "Sigma(K) only (signature 2)"
    if s == -2:
        return [(-1, negate(P))], "Sigma(mirror K) only (signature -2)"
    if s == 0:
        return [(+1, P), (-1, negate(P))], "both orientations (signature 0)"
    raise ValueError("matching checks apply to |signature| <= 2")


def _signature_excluded(rec: KnotRecord, what: str) -> CheckVerdict:
    return CheckVerdict(what, True,
                        f"|signature| = {abs(rec.signature)} >= 4 forces the invariant above 1")


def _run_matching_check(rec, P, what, engine, base_dir) -> CheckVerdict:
    if abs(rec.signature) not in (0, 2):
        return _signature_excluded(rec, what)
    P = P if P is not None else resolve_profile(rec, base_dir)
    runs, mode = _oriented_profiles(rec, P)
    verdicts = [_with_sign(engine(prof), sgn) for sgn, prof in runs]
    found = any(v.found for v in verdicts)
    reason = ("matching found: compatible with the model" if found
              else f"no matching on {mode}")
    return CheckVerdict(what, not found, reason, verdicts)


def check_u1(rec: KnotRecord, P: DProfile = None, base_dir: str = ".") -> CheckVerdict:
    """Obstruction to u(K) = 1 (positive even symmetric monotone matching)."""
    return _run_matching_check(rec, P, "u1", symmetric_monotone_matching, base_dir)


def check_uc1(rec: KnotRecord, P: DProfile = None, base_dir: str = ".") -> CheckVerdict:
    """Obstruction to u_c(K) = 1 (positive even monotone subgroup matching)."""
    return _run_matching_check(rec, P, "uc1", monotone_subgroup_matching, base_dir)


def check_cstar1(rec: KnotRecord, P: DProfile = None, base_dir: str = ".") -> CheckVerdict:
    """Obstruction to c*(K) = 1 (positive even subgroup matching)."""
    return _run_matching_check(rec, P, "cstar1", positive_even_subgroup_matching, base_dir)


def _square_divisor_classes(n: int):
    """All (d, s) with n = d * s^2, d descending."""
    out = []
    s = 1
    while s * s <= n:
        if n % (s * s) == 0:
            out.append((n // (s * s), s))
        s += 1
    out.sort(key=lambda x: -x[0])
    return out


def check_cstar_k(rec: KnotRecord, k: int, splits=None, P: DProfile = None,
                  base_dir: str = ".") -> CheckVerdict:
    """Obstruction to a normally immersed disk with k double points.

    After mirroring so sigma >= 0, an immersed disk with r_- = sigma/2
    negative double points forces a positive definite filling of half-integer
    surgery type on 2k generators with r_+ odd diagonal entries and
    determinant dividing det K with square quotient.  The default split is
    (k - sigma/2, sigma/2); callers may pass other splits justified by
    Levine-Tristram data.  Splits with more negative double points than
    sigma/2 are not covered by the form obstruction and are flagged, never
    silently assumed away.
    """
    name = f"cstar_{k}"
    if k < 1:
        raise ValueError("k must be >= 1")
    sigma = abs(rec.signature)           # mirror so sigma >= 0
    mirrored = rec.signature < 0
    if sigma // 2 > k:
        return CheckVerdict(name, True,
                            f"signature bound: any disk needs >= {sigma // 2} double points")
    if splits is None:
        splits = [(k - sigma // 2, sigma // 2)]
    flags = []
    covered_minus = {rm for _, rm in splits}
    uncovered = [(k - rm, rm) for rm in range(sigma // 2, k + 1)
                 if rm not in covered_minus]
    if uncovered:
        flags.append("splits not examined (assumed excluded by the caller, "
                     "e.g. via Levine-Tristram data): "
                     + ", ".join(str(s) for s in uncovered))
    engine_verdicts = []
    profile = None
    obstructed = True
    reasons = []
    for rp, rm in splits:
        if rp < 0 or rm < 0 or rp + rm != k:
            raise ValueError(f"invalid split {(rp, rm)} for k = {k}")
        if rm != sigma // 2:
            flags.append(f"split {(rp, rm)} has r_- != sigma/2; "
                         "the form obstruction does not apply to it")
            obstructed = False
            continue
        for det_part, s in _square_divisor_classes(rec.determinant):
            forms = enumerate_half_integer_forms(k, det_part, rp)
            if not forms:
                reasons.append(f"split {(rp, rm)}, det {det_part}: no forms exist")
                continue
            if s > 1:
                flags.append(f"split {(rp, rm)}, det {det_part} (s = {s}): "
                             f"{len(forms)} forms exist but the subgroup-image "
                             "variant is out of scope; not exhaustive")
                obstructed = False
                continue
            if profile is None:
                profile = P if P is not None else resolve_profile(rec, base_dir)
                if mirrored:
                    profile = negate(profile)
            for Q in forms:
                v = form_obstruction(profile, Q)
                engine_verdicts.append(v)
                if v.found:
                    obstructed = False
                    reasons.append(f"split {(rp, rm)}, det {det_part}: a form is compatible")
            if not any(v.found for v in engine_verdicts[-len(forms):]):
                reasons.append(f"split {(rp, rm)}, det {det_part}: "
                               f"all {len(forms)} forms fail")
    reason = "; ".join(reasons) if reasons else "nothing to check"
    return CheckVerdict(name, obstructed, reason, engine_verdicts, flags)


CHECK_FUNCTIONS = {"u1": check_u1, "uc1": check_uc1, "cstar1": check_cstar1}


def run_checks(rec: KnotRecord, checks, base_dir: str = ".") -> ObstructionReport:
    """Run the named checks ('u1', 'uc1', 'cstar1', 'cstar:k') on one record."""
    verdicts = {}
    profile = None
    sign_mode = "n/a"

    def get_profile():
        nonlocal profile, sign_mode
        if profile is None and rec.cover.kind != "none":
            profile = resolve_profile(rec, base_dir)
            if abs(rec.signature) in (0, 2):
                sign_mode = _oriented_profiles(rec, profile)[1]
        return profile

    for chk in checks:
        if chk.startswith("cstar:"):
            k = int(chk.split(":", 1)[1])
            verdicts[chk] = check_cstar_k(rec, k, P=get_profile(), base_dir=base_dir)
        elif chk in CHECK_FUNCTIONS:
            needs = abs(rec.signature) in (0, 2)
            verdicts[chk] = CHECK_FUNCTIONS[chk](rec, P=get_profile() if needs else None,
                                                 base_dir=base_dir)
        else:
            raise ValueError(f"unknown check {chk!r}")
    return ObstructionReport(rec.name, verdicts, sign_mode)
