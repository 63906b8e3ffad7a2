"""Constructive pumping machinery for folding systems.

For each class pairing (REG,REG), (CF,REG), (REG,CF), (CF,CF) this module
builds a double-stranded alignment of pumped core/procedure strings: both
strands are cut into the same number of equal-length windows, where the
even-numbered windows repeat j-j0 times.  Folding the windowed strands
turns the alignment into a pump family (w_1, ..., w_k), k in {5, 9, 13},
whose even parts can be repeated any number of times while staying inside
the F-system's language.  Families are verified against the brute-force
oracle, never trusted.

Window lengths follow from the block structure of the aligned strands;
correctness is enforced by an explicit reconstruction check (the windowed
form must reproduce the strand formulas as strings, for several j), not
by trusting any closed-form expression.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cfg import CfgDecomposition, ContextFreeLang
from .errors import CaseValidationFailed, FiniteComponent, FoldlangError
from .folding import split_updown
from .fsystem import FSystem, equal_length_pair, fs_member
from .regular import RegDecomposition

#: Largest j0 tried before the construction gives up.
DEFAULT_J0_BOUND = 64

LEMMA_REG_REG = "L1"
LEMMA_CF_REG = "L2cfreg"
LEMMA_REG_CF = "L2regcf"
LEMMA_CF_CF = "L3"


# ---------------------------------------------------------------------------
# Strand blocks: a strand at repetition index j is a concatenation of fixed
# blocks and periodic blocks base^(mult*j + 1).

@dataclass(frozen=True)
class FixedBlock:
    text: str

    def at(self, j: int) -> str:
        return self.text


@dataclass(frozen=True)
class PeriodicBlock:
    base: str
    mult: int

    def at(self, j: int) -> str:
        return self.base * (self.mult * j + 1)


def materialize(blocks, j: int) -> str:
    return "".join(b.at(j) for b in blocks)


# ---------------------------------------------------------------------------
# Plans and families

@dataclass(frozen=True)
class StrandPlan:
    """Windowed alignment: r_j = xi_1 xi_2^(j-j0) xi_3 ... and the same
    shape for s_j over mu, with |xi_k| == |mu_k| for every k."""

    lemma: str
    case: str | None
    xi: tuple[str, ...]
    mu: tuple[str, ...]
    j0: int
    r_blocks: tuple
    s_blocks: tuple
    core_decomposition: RegDecomposition | CfgDecomposition
    proc_decomposition: RegDecomposition | CfgDecomposition

    @property
    def m(self) -> int:
        return len(self.xi)

    @property
    def pumped_window_indices(self) -> tuple[int, ...]:
        return tuple(range(2, self.m + 1, 2))  # 1-based, even positions

    def r_at(self, j: int) -> str:
        return _windows_at(self.xi, j - self.j0)

    def s_at(self, j: int) -> str:
        return _windows_at(self.mu, j - self.j0)


def _windows_at(windows, reps: int) -> str:
    out = []
    for k, win in enumerate(windows, start=1):
        out.append(win * reps if k % 2 == 0 else win)
    return "".join(out)


@dataclass(frozen=True)
class PumpFamily:
    """Parts (w_1, ..., w_k); the parts at `pumped` (0-based) repeat i times."""

    parts: tuple[str, ...]
    pumped: tuple[int, ...]
    lemma: str
    j0: int

    def assemble(self, i: int) -> str:
        pumped = set(self.pumped)
        return "".join(p * i if k in pumped else p for k, p in enumerate(self.parts))

    @property
    def pumped_total(self) -> int:
        return sum(len(self.parts[k]) for k in self.pumped)

    @property
    def fixed_total(self) -> int:
        return sum(len(p) for p in self.parts) - self.pumped_total

    def length_at(self, i: int) -> int:
        return self.fixed_total + i * self.pumped_total

    def to_json(self) -> str:
        return json.dumps({
            "parts": list(self.parts),
            "pumped": list(self.pumped),
            "lemma": self.lemma,
            "j0": self.j0,
        })

    @classmethod
    def from_json(cls, text: str) -> "PumpFamily":
        obj = json.loads(text)
        return cls(tuple(obj["parts"]), tuple(obj["pumped"]),
                   obj["lemma"], obj["j0"])


@dataclass(frozen=True)
class CheckResult:
    kind: str      # "strand" or "family"
    index: int     # j for strands, i for families
    ok: bool
    detail: str
    string: str | None = None
    witness: tuple[str, str] | None = None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def summary(self) -> str:
        lines = [f"{c.kind} {c.index}: {'PASS' if c.ok else 'FAIL'} ({c.detail})"
                 for c in self.checks]
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Shared construction scaffolding

def _require_infinite(phi: FSystem):
    if not phi.core.is_infinite():
        raise FiniteComponent("core language is finite; nothing to pump")
    if not phi.proc.is_infinite():
        raise FiniteComponent("procedure language is finite; nothing to pump")


def _carve(s: str, lens) -> tuple[str, ...]:
    out = []
    pos = 0
    for l in lens:
        out.append(s[pos:pos + l])
        pos += l
    return tuple(out)


def _search_plan(lemma, case, r_blocks, s_blocks, lens_fn, core_dec, proc_dec,
                 j0_bound=DEFAULT_J0_BOUND) -> StrandPlan:
    """Try j0 = 0, 1, ... until the windowed form reproduces both strand
    formulas exactly for j in {j0, ..., j0+3}."""
    last_problem = "no j0 produced non-negative window offsets"
    for j0 in range(j0_bound + 1):
        lens = lens_fn(j0)
        if lens is None or any(l < 0 for l in lens):
            continue
        r1 = materialize(r_blocks, j0 + 1)
        s1 = materialize(s_blocks, j0 + 1)
        if sum(lens) != len(r1) or sum(lens) != len(s1):
            last_problem = f"window lengths do not tile the strands at j0={j0}"
            continue
        xi = _carve(r1, lens)
        mu = _carve(s1, lens)
        plan = StrandPlan(lemma, case, xi, mu, j0, tuple(r_blocks),
                          tuple(s_blocks), core_dec, proc_dec)
        bad = _reconstruction_mismatch(plan)
        if bad is None:
            return plan
        last_problem = f"j0={j0}: {bad}"
    raise CaseValidationFailed(f"{lemma}{'/' + case if case else ''}: {last_problem}")


def _reconstruction_mismatch(plan: StrandPlan) -> str | None:
    for j in range(plan.j0, plan.j0 + 4):
        if plan.r_at(j) != materialize(plan.r_blocks, j):
            return f"core window xi mismatch at j={j}"
        if plan.s_at(j) != materialize(plan.s_blocks, j):
            return f"procedure window mu mismatch at j={j}"
    return None


def _base_pair(phi: FSystem) -> tuple[str, str]:
    p = max(phi.core.pumping_length(), phi.proc.pumping_length())
    return equal_length_pair(phi, p)


# ---------------------------------------------------------------------------
# Lemma constructions

def lemma1_plan(phi: FSystem) -> StrandPlan:
    """REG,REG: one pumped window per strand (m = 3)."""
    _require_infinite(phi)
    r, s = _base_pair(phi)
    dr = phi.core.decompose(r)
    ds = phi.proc.decompose(s)
    return _plan_one_window(LEMMA_REG_REG, None, dr.x, dr.y, dr.z,
                            ds.x, ds.y, ds.z, dr, ds)


def _plan_one_window(lemma, case, fr_left, yr, fr_right, fs_left, ys, fs_right,
                     core_dec, proc_dec) -> StrandPlan:
    """Shared m=3 construction: each strand is fixed / periodic / fixed."""
    r_blocks = (FixedBlock(fr_left), PeriodicBlock(yr, len(ys)), FixedBlock(fr_right))
    s_blocks = (FixedBlock(fs_left), PeriodicBlock(ys, len(yr)), FixedBlock(fs_right))

    def lens(j0):
        s_alpha = len(yr) * (j0 * len(ys) + 1)
        s_beta = len(ys) * (j0 * len(yr) + 1)
        if len(fs_left) >= len(fr_left):
            b1, a1 = 0, len(fs_left) - len(fr_left)
        else:
            a1, b1 = 0, len(fr_left) - len(fs_left)
        a2 = s_alpha - a1
        return [len(fr_left) + a1, len(yr) * len(ys), a2 + len(fr_right)]

    return _search_plan(lemma, case, r_blocks, s_blocks, lens, core_dec, proc_dec)


def lemma2_plan_cf_reg(phi: FSystem) -> StrandPlan:
    """CF,REG: two pumped windows per strand (m = 5)."""
    _require_infinite(phi)
    r, s = _base_pair(phi)
    dr = phi.core.decompose(r)   # u v x y z
    ds = phi.proc.decompose(s)   # x y z
    return _plan_two_one(LEMMA_CF_REG, None,
                         (dr.u, dr.v, dr.x, dr.y, dr.z),
                         (ds.x, ds.y, ds.z), dr, ds)


def _plan_two_one(lemma, case, r_parts, s_parts, dr, ds) -> StrandPlan:
    """m=5 construction: double-pump core strand, single-pump procedure."""
    ur, vr, xr, yr, zr = r_parts
    xs, ys, zs = s_parts
    r_blocks = (FixedBlock(ur), PeriodicBlock(vr, len(ys)), FixedBlock(xr),
                PeriodicBlock(yr, len(ys)), FixedBlock(zr))
    s_blocks = (FixedBlock(xs), PeriodicBlock(ys, len(vr) + len(yr)), FixedBlock(zs))

    def lens(j0):
        s_alpha = len(vr) * (j0 * len(ys) + 1)
        s_beta = len(yr) * (j0 * len(ys) + 1)
        s_gamma = len(ys) * (j0 * (len(vr) + len(yr)) + 1)
        if len(xs) >= len(ur):
            g1, a1 = 0, len(xs) - len(ur)
        else:
            a1, g1 = 0, len(ur) - len(xs)
        if len(zs) >= len(zr):
            g3, b2 = 0, len(zs) - len(zr)
        else:
            b2, g3 = 0, len(zr) - len(zs)
        a2 = s_alpha - a1
        b1 = s_beta - b2
        return [len(ur) + a1, len(vr) * len(ys), a2 + len(xr) + b1,
                len(yr) * len(ys), b2 + len(zr)]

    return _search_plan(lemma, case, r_blocks, s_blocks, lens, dr, ds)


def lemma2_plan_reg_cf(phi: FSystem) -> StrandPlan:
    """REG,CF: mirror of the CF,REG case with strand roles swapped."""
    _require_infinite(phi)
    r, s = _base_pair(phi)
    dr = phi.core.decompose(r)   # x y z
    ds = phi.proc.decompose(s)   # u v x y z
    return _plan_one_two(LEMMA_REG_CF, None, (dr.x, dr.y, dr.z),
                         (ds.u, ds.v, ds.x, ds.y, ds.z), dr, ds)


def _plan_one_two(lemma, case, r_parts, s_parts, dr, ds) -> StrandPlan:
    """m=5 construction: single-pump core strand, double-pump procedure."""
    xr, yr, zr = r_parts
    us, vs, xs, ys, zs = s_parts
    r_blocks = (FixedBlock(xr), PeriodicBlock(yr, len(vs) + len(ys)), FixedBlock(zr))
    s_blocks = (FixedBlock(us), PeriodicBlock(vs, len(yr)), FixedBlock(xs),
                PeriodicBlock(ys, len(yr)), FixedBlock(zs))

    def lens(j0):
        s_alpha = len(yr) * (j0 * (len(vs) + len(ys)) + 1)
        s_beta = len(vs) * (j0 * len(yr) + 1)
        if len(us) >= len(xr):
            b1, a1 = 0, len(us) - len(xr)
        else:
            a1, b1 = 0, len(xr) - len(us)
        b2 = s_beta - b1
        a2 = b2 + len(xs)          # gamma_1 pinned to epsilon
        a3 = s_alpha - a1 - a2
        return [len(xr) + a1, len(yr) * len(vs), a2, len(yr) * len(ys),
                a3 + len(zr)]

    return _search_plan(lemma, case, r_blocks, s_blocks, lens, dr, ds)


def lemma3_case(dr: CfgDecomposition, ds: CfgDecomposition) -> str:
    """Total case selector for the CF,CF construction.

    A strand is "single" when one of its pump pieces is empty; otherwise the
    products |v_r||y_s| and |v_s||y_r| pick the greater/less/equal shape.
    """
    core_single = not (dr.v and dr.y)
    proc_single = not (ds.v and ds.y)
    if core_single and proc_single:
        return "degenerate"
    if proc_single:
        return "proc-single"
    if core_single:
        return "core-single"
    pr = len(dr.v) * len(ds.y)
    ps = len(ds.v) * len(dr.y)
    if pr > ps:
        return "greater"
    if pr < ps:
        return "less"
    return "equal"


def _single_triple(d: CfgDecomposition) -> tuple[str, str, str]:
    """Collapse a u v x y z decomposition with an empty pump piece into the
    fixed / pump / fixed shape of a one-window strand."""
    if not d.v:
        return d.u + d.x, d.y, d.z
    return d.u, d.v, d.x + d.z


def lemma3_plan(phi: FSystem) -> StrandPlan:
    """CF,CF: three pumped windows per strand (m = 7), dropping to m = 5
    when one strand pumps a single piece and m = 3 when both do."""
    _require_infinite(phi)
    r, s = _base_pair(phi)
    dr = phi.core.decompose(r)
    ds = phi.proc.decompose(s)
    case = lemma3_case(dr, ds)
    if case == "degenerate":
        fr_left, pump_r, fr_right = _single_triple(dr)
        fs_left, pump_s, fs_right = _single_triple(ds)
        return _plan_one_window(LEMMA_CF_CF, case, fr_left, pump_r, fr_right,
                                fs_left, pump_s, fs_right, dr, ds)
    if case == "proc-single":
        return _plan_two_one(LEMMA_CF_CF, case,
                             (dr.u, dr.v, dr.x, dr.y, dr.z),
                             _single_triple(ds), dr, ds)
    if case == "core-single":
        return _plan_one_two(LEMMA_CF_CF, case, _single_triple(dr),
                             (ds.u, ds.v, ds.x, ds.y, ds.z), dr, ds)
    if case in ("greater", "equal"):
        return _lemma3_greater(dr, ds, case)
    return _lemma3_less(dr, ds)


def _lemma3_greater(dr: CfgDecomposition, ds: CfgDecomposition, case) -> StrandPlan:
    ur, vr, xr, yr, zr = dr.u, dr.v, dr.x, dr.y, dr.z
    us, vs, xs, ys, zs = ds.u, ds.v, ds.x, ds.y, ds.z
    q = len(vr) * len(ys) * (len(vs) + len(ys))
    p = len(vr) * len(ys) * (len(vr) + len(yr))
    r_blocks = (FixedBlock(ur), PeriodicBlock(vr, q), FixedBlock(xr),
                PeriodicBlock(yr, q), FixedBlock(zr))
    s_blocks = (FixedBlock(us), PeriodicBlock(vs, p), FixedBlock(xs),
                PeriodicBlock(ys, p), FixedBlock(zs))
    l2 = len(vr) * len(vs) * len(ys) * (len(vr) + len(yr))
    l4 = len(vr) * len(ys) * (len(vr) * len(ys) - len(vs) * len(yr))
    l6 = len(vr) * len(yr) * len(ys) * (len(vs) + len(ys))

    def lens(j0):
        s_vr = len(vr) * (j0 * q + 1)
        s_yr = len(yr) * (j0 * q + 1)
        s_vs = len(vs) * (j0 * p + 1)
        s_ys = len(ys) * (j0 * p + 1)
        if len(us) >= len(ur):
            g1, a1 = 0, len(us) - len(ur)
        else:
            a1, g1 = 0, len(ur) - len(us)
        if len(zs) >= len(zr):
            d3, b2 = 0, len(zs) - len(zr)
        else:
            b2, d3 = 0, len(zr) - len(zs)
        g2 = s_vs - g1
        a2 = g2 + len(xs)          # delta_1 pinned to epsilon
        a3 = s_vr - a1 - a2
        b1 = s_yr - b2
        return [len(ur) + a1, l2, a2, l4, a3 + len(xr) + b1, l6, b2 + len(zr)]

    return _search_plan(LEMMA_CF_CF, case, r_blocks, s_blocks, lens, dr, ds)


def _lemma3_less(dr: CfgDecomposition, ds: CfgDecomposition) -> StrandPlan:
    ur, vr, xr, yr, zr = dr.u, dr.v, dr.x, dr.y, dr.z
    us, vs, xs, ys, zs = ds.u, ds.v, ds.x, ds.y, ds.z
    q = len(vs) * len(yr) * (len(vs) + len(ys))
    p = len(vs) * len(yr) * (len(vr) + len(yr))
    r_blocks = (FixedBlock(ur), PeriodicBlock(vr, q), FixedBlock(xr),
                PeriodicBlock(yr, q), FixedBlock(zr))
    s_blocks = (FixedBlock(us), PeriodicBlock(vs, p), FixedBlock(xs),
                PeriodicBlock(ys, p), FixedBlock(zs))
    l2 = len(vr) * len(vs) * len(yr) * (len(vs) + len(ys))
    l4 = len(yr) * len(vs) * (len(vs) * len(yr) - len(vr) * len(ys))
    l6 = len(ys) * len(vs) * len(yr) * (len(vr) + len(yr))

    def lens(j0):
        s_vr = len(vr) * (j0 * q + 1)
        s_yr = len(yr) * (j0 * q + 1)
        s_vs = len(vs) * (j0 * p + 1)
        s_ys = len(ys) * (j0 * p + 1)
        if len(us) >= len(ur):
            g1, a1 = 0, len(us) - len(ur)
        else:
            a1, g1 = 0, len(ur) - len(us)
        if len(zs) >= len(zr):
            d2, b3 = 0, len(zs) - len(zr)
        else:
            b3, d2 = 0, len(zr) - len(zs)
        a2 = s_vr - a1
        d1 = s_ys - d2
        b2 = d1 + len(xs)          # gamma_3 pinned to epsilon
        b1 = s_yr - b2 - b3
        return [len(ur) + a1, l2, a2 + len(xr) + b1, l4, b2, l6, b3 + len(zr)]

    return _search_plan(LEMMA_CF_CF, "less", r_blocks, s_blocks, lens, dr, ds)


def auto_plan(phi: FSystem) -> StrandPlan:
    """Select the lemma from the component kinds."""
    core_cf = isinstance(phi.core, ContextFreeLang)
    proc_cf = isinstance(phi.proc, ContextFreeLang)
    if core_cf and proc_cf:
        return lemma3_plan(phi)
    if core_cf:
        return lemma2_plan_cf_reg(phi)
    if proc_cf:
        return lemma2_plan_reg_cf(phi)
    return lemma1_plan(phi)


# ---------------------------------------------------------------------------
# Plan -> family

def plan_to_family(plan: StrandPlan) -> PumpFamily:
    """Fold the windowed strands: each xi_k splits by its aligned mu_k
    into an up part (reversed, emitted right-to-left) and a down part
    (emitted left-to-right); parts from even windows are the pumped ones."""
    m = plan.m
    ups = []
    downs = []
    for xi_k, mu_k in zip(plan.xi, plan.mu):
        w_up, w_down = split_updown(xi_k, mu_k)
        ups.append(w_up[::-1])
        downs.append(w_down)
    parts = ups[::-1][:-1] + [ups[0] + downs[0]] + downs[1:]
    pumped = sorted({m - k for k in range(2, m + 1, 2)}
                    | {m + k - 2 for k in range(2, m + 1, 2)})
    if plan.lemma == LEMMA_CF_CF and m == 3:
        # degenerate subcase embeds the 5-part shape into 13 parts
        a = parts
        parts = [a[0], a[1], "", "", "", "", a[2], "", "", "", "", a[3], a[4]]
        pumped = [1, 11]
    elif plan.lemma == LEMMA_CF_CF and m == 5:
        # single-pump-strand subcases embed the 9-part shape into 13 parts
        a = parts
        parts = [a[0], a[1], a[2], "", "", a[3], a[4], a[5], "", "",
                 a[6], a[7], a[8]]
        pumped = [1, 5, 7, 11]
    return PumpFamily(tuple(parts), tuple(pumped), plan.lemma, plan.j0)


# ---------------------------------------------------------------------------
# Verification

def verify_plan(plan: StrandPlan, phi: FSystem, j_range=None) -> VerificationReport:
    """Check, for each j, that the windowed strands reproduce the lemma's
    strand formulas exactly and are members of their languages."""
    if j_range is None:
        j_range = range(plan.j0, plan.j0 + 4)
    checks = []
    for j in j_range:
        r_w, s_w = plan.r_at(j), plan.s_at(j)
        r_f = materialize(plan.r_blocks, j)
        s_f = materialize(plan.s_blocks, j)
        problems = []
        if r_w != r_f:
            problems.append("core windows != strand formula")
        if s_w != s_f:
            problems.append("procedure windows != strand formula")
        if len(r_w) != len(s_w):
            problems.append("strand lengths differ")
        if not problems and not phi.core.member(r_w):
            problems.append("r_j not in core language")
        if not problems and not phi.proc.member(s_w):
            problems.append("s_j not in procedure language")
        checks.append(CheckResult("strand", j, not problems,
                                  "; ".join(problems) or
                                  f"r_j,s_j reconstructed, members, |.|={len(r_w)}"))
    return VerificationReport(tuple(checks))


def verify_family(family: PumpFamily, phi: FSystem, i_range=None,
                  pair_cap=None) -> VerificationReport:
    """Decide membership of the pumped string for each i via the oracle."""
    if i_range is None:
        i_range = range(0, 5)
    checks = []
    if family.pumped_total == 0:
        checks.append(CheckResult("family", -1, False,
                                  "total pumped length is 0"))
    kwargs = {} if pair_cap is None else {"pair_cap": pair_cap}
    for i in i_range:
        w = family.assemble(i)
        ok, witness = fs_member(phi, w, with_witness=True, **kwargs)
        detail = (f"member via fold({witness[0]!r}, {witness[1]!r})" if ok
                  else "not in L(Phi)")
        checks.append(CheckResult("family", i, ok, detail, string=w,
                                  witness=witness))
    return VerificationReport(tuple(checks))


# ---------------------------------------------------------------------------
# Unary refutation

def refute_unary_family(predicate, family: PumpFamily, bound: int = 64) -> int | None:
    """Smallest i <= bound whose pumped-string length fails the predicate,
    or None.  All family parts must use a single symbol, so only the
    length matters."""
    symbols = {ch for p in family.parts for ch in p}
    if len(symbols) > 1:
        raise FoldlangError(f"family is not unary: symbols {sorted(symbols)}")
    for i in range(bound + 1):
        if not predicate(family.length_at(i)):
            return i
    return None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


PREDICATES = {
    "primes": is_prime,
    "even": lambda n: n % 2 == 0,
}
