"""Closed-form H-spectrum catalogs with machine certification.

Every eigenvalue a catalog emits is backed, where possible, by an explicit
eigenvector built from the structure that produces it (active pendant
blocks, junction values, sign patterns).  A candidate is reported as
certified only once such a witness reaches the residual tolerance; scalar
equation roots that fail certification stay in the report flagged as
uncertified, since several of the case equations arise by squaring and can
carry spurious roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Sequence

import numpy as np

from . import oracle
from .errors import (
    ChoiceCountMismatch,
    DimensionMismatch,
    FamilyMismatch,
    InvalidFamilyParameter,
    NotCored,
    OddUniformityRequired,
    SignParityViolation,
    SpectraError,
    WrongRootForR,
)
from .hypergraphs import (
    FamilySpec,
    UniformHypergraph,
    cored_structure,
    degrees,
    detect_hypercycle,
    detect_hyperpath,
    detect_sunflower,
    hypercycle,
    hyperpath,
    hyperstar,
    sunflower,
    write_json_atomic,
)
from .options import DEFAULT_OPTIONS, SolverOptions
from .solvers import all_real_roots, bisect, flip_cored_signs, power_iteration_q
from .tensor_ops import EigenPair, TensorKind, make_pair, residual

# roots of the pendant-count polynomials this close to 1 are the unit
# eigenvalue in disguise and are cataloged separately
_UNIT_WINDOW = 1e-5

_DEDUP_TOL = 1e-8


# ---------------------------------------------------------------------------
# report types
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SpectrumEntry:
    """One eigenvalue with its construction tag and optional witness."""

    lam: float
    case_tag: str
    certified: bool
    witness: Optional[EigenPair]

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "case": self.case_tag,
            "certified": self.certified,
            "witness": self.witness.to_dict() if self.witness is not None else None,
        }


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """Eigenvalues of one hypergraph, ascending, deduplicated at 1e-8."""

    family: Mapping
    method: str
    entries: tuple[SpectrumEntry, ...]

    def lambdas(self, certified_only: bool = False) -> list[float]:
        return [e.lam for e in self.entries if e.certified or not certified_only]

    def to_dict(self) -> dict:
        return {
            "family": dict(self.family),
            "method": self.method,
            "entries": [e.to_dict() for e in self.entries],
        }

    def save(self, path: str) -> None:
        write_json_atomic(path, self.to_dict())

    def save_csv(self, path: str) -> None:
        import os
        import tempfile
        directory = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write("lambda,case,certified\n")
                for e in self.entries:
                    fh.write(f"{e.lam:.17g},\"{e.case_tag}\",{str(e.certified).lower()}\n")
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


class _ReportBuilder:
    def __init__(self) -> None:
        self._entries: list[dict] = []

    def add(self, lam: float, tag: str, witness: Optional[EigenPair],
            certified: bool) -> None:
        for entry in self._entries:
            if abs(entry["lam"] - lam) < _DEDUP_TOL:
                if tag not in entry["tags"]:
                    entry["tags"].append(tag)
                if certified and not entry["certified"]:
                    entry["certified"] = True
                    entry["witness"] = witness
                    entry["lam"] = lam
                elif certified and witness is not None and \
                        entry["witness"] is not None and \
                        witness.residual < entry["witness"].residual:
                    entry["witness"] = witness
                    entry["lam"] = lam
                return
        self._entries.append({"lam": lam, "tags": [tag],
                              "certified": certified, "witness": witness})

    def build(self, family: Mapping, method: str,
              max_degree: float) -> SpectrumReport:
        entries = tuple(
            SpectrumEntry(lam=e["lam"], case_tag="; ".join(e["tags"]),
                          certified=e["certified"], witness=e["witness"])
            for e in sorted(self._entries, key=lambda e: e["lam"]))
        for e in entries:
            assert -1e-8 <= e.lam <= 2.0 * max_degree + 1e-8, \
                f"entry {e.lam} outside the admissible [0, 2d] window"
            assert not e.certified or e.witness is not None
        return SpectrumReport(family=family, method=method, entries=entries)


# ---------------------------------------------------------------------------
# scalar characteristic functions
# ---------------------------------------------------------------------------

def star_characteristic(k: int, d: int, r: int) -> Callable[[float], float]:
    """(lam - d)(1 - lam)^{k-1} + r; its real roots other than 1 are the
    hyperstar eigenvalues whose eigenvectors activate exactly r edges."""
    e = k - 1

    def f(lam: float) -> float:
        return (lam - d) * (1.0 - lam) ** e + r

    return f


def star_positive_characteristic(k: int, d: int) -> Callable[[float], float]:
    """(lam - d)(lam - 1)^{k-1} - d, the positive-eigenvector form of the
    all-edges-active characteristic.

    Its unique root in (d, 2d] is the hyperstar's largest signless
    H-eigenvalue for every k, and equals the largest Laplacian H-eigenvalue
    when k is even.  This is the form under which the largest eigenvalue
    decreases strictly in k.
    """
    e = k - 1

    def f(lam: float) -> float:
        return (lam - d) * (lam - 1.0) ** e - d

    return f


def sunflower_characteristic(k: int) -> Callable[[float], float]:
    """(mu-2) - (1/(mu-1))^{1/(k-1)} - (1/(mu-1))^{k-1} on mu > 1."""
    e = k - 1

    def f(mu: float) -> float:
        inv = 1.0 / (mu - 1.0)
        return (mu - 2.0) - inv ** (1.0 / e) - inv ** e

    return f


def path3_end_branch(k: int) -> Callable[[float], float]:
    """One end block active across a zero center: (lam-2)(1-lam)^{k-1} + 1."""
    e = k - 1

    def f(lam: float) -> float:
        return (lam - 2.0) * (1.0 - lam) ** e + 1.0

    return f


def path3_center_symmetric(k: int) -> Callable[[float], float]:
    """Center block active, equal junctions: (lam-2)^2 (1-lam)^{k-2} - 1."""
    e = k - 2

    def f(lam: float) -> float:
        return (lam - 2.0) ** 2 * (1.0 - lam) ** e - 1.0

    return f


def path3_center_end(k: int) -> Callable[[float], float]:
    """Center plus one end active: (lam-2)^2 (1-lam)^{k-1} + 2 lam - 3."""
    e = k - 1

    def f(lam: float) -> float:
        return (lam - 2.0) ** 2 * (1.0 - lam) ** e + 2.0 * lam - 3.0

    return f


def path3_both_ends(k: int, sign: int) -> Callable[[float], float]:
    """Both end blocks active with equal junctions, middle block carrying
    the chosen square-root sign: (lam-2)(1-lam)^{k-1} + 1 + sgn*(1-lam)^{k/2}
    on lam in [0, 1).

    The printed form of this case squares the relation and drops a power of
    (1-lam); eliminating the end blocks directly from the junction equation
    gives the form above, whose +1 branch contains the all-ones kernel.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    e = k - 1

    def f(lam: float) -> float:
        base = max(1.0 - lam, 0.0)
        return (lam - 2.0) * (1.0 - lam) ** e + 1.0 + sign * base ** (k / 2.0)

    return f


def cycle3_one_arc(k: int) -> Callable[[float], float]:
    """Single active arc; same equation as the symmetric-center path case."""
    return path3_center_symmetric(k)


# Two candidate constants for the two-active-arcs hypercycle case.  The
# printed form carries 2 * 4^{1/k}; eliminating the arc scale from the
# defining junction equations (square the single-arc junction relation,
# divide by s^{k-2} and use s^k = 1/2) yields the constant 2.  Both are
# scanned and certification decides which one names an eigenvalue.
_TWO_ARC_VARIANTS = ("printed", "system")


def cycle3_two_arc(k: int, variant: str = "printed") -> Callable[[float], float]:
    """Two active arcs: (lam-2)^2 (1-lam)^{k-2} - c with c per variant."""
    if variant not in _TWO_ARC_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    e = k - 2
    c = 2.0 * 4.0 ** (1.0 / k) if variant == "printed" else 2.0

    def f(lam: float) -> float:
        return (lam - 2.0) ** 2 * (1.0 - lam) ** e - c

    return f


# Three candidate scalar equations for the all-arcs-active hypercycle case.
# The two printed forms disagree by a factor of two on one term, and neither
# matches what eliminating the arc scale from the defining two-equation
# system yields, so all three are scanned and settled by certification.
_CYCLE3_VARIANTS = ("statement", "proof", "system")


def cycle3_three_arc(k: int, variant: str, sign: int) -> Callable[[float], float]:
    """All three arcs active, symmetric branch, on lam in [0, 1).

    variant 'statement': [(lam-2) + sgn*(1-lam)^{(k-2)/2}] (2-lam) + 2
    variant 'proof':     [(lam-2) + sgn*(1-lam)^{(k-2)/2}] (2-lam)*2 + 2
    variant 'system':    -(2-lam)^2 (1-lam)^{k-2}
                         + sgn*(2-lam)(1-lam)^{(k-2)/2} + 2
    sign picks the branch of the square root carried by the arc opposite the
    reference junction.
    """
    if variant not in _CYCLE3_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    half = (k - 2) // 2

    def f(lam: float) -> float:
        root = math.sqrt(max(1.0 - lam, 0.0))
        branch = sign * root ** (k - 2) if (k - 2) % 2 else root ** (k - 2)
        if variant == "statement":
            return ((lam - 2.0) + branch) * (2.0 - lam) + 2.0
        if variant == "proof":
            return ((lam - 2.0) + branch) * (2.0 - lam) * 2.0 + 2.0
        return (-(2.0 - lam) ** 2 * (1.0 - lam) ** (k - 2)
                + sign * (2.0 - lam) * (1.0 - lam) ** half * root ** ((k - 2) % 2)
                + 2.0)

    return f


# ---------------------------------------------------------------------------
# witness constructions
# ---------------------------------------------------------------------------

def _indicator(n: int, vertex: int) -> np.ndarray:
    x = np.zeros(n)
    x[vertex - 1] = 1.0
    return x


def hyperstar_eigenvectors(k: int, d: int, lam: float, r: int,
                           chosen_edges: Iterable[int],
                           signs: Optional[Mapping[int, int]] = None,
                           tol: float = 1e-8) -> np.ndarray:
    """Eigenvector of the size-d hyperstar for a root lam of the r-edge
    characteristic.

    The heart takes 1 - lam; the pendant vertices of the r chosen edges
    (0-based indices into the canonical edge order) take +-1 per `signs`
    (default all +1); everything else is zero.  For odd k all signs must be
    +1, for even k each chosen edge needs an even number of -1 entries.
    """
    if k < 3 or d < 2:
        raise InvalidFamilyParameter(f"hyperstar catalog needs k >= 3, d >= 2 (got k={k}, d={d})")
    chosen = sorted(set(chosen_edges))
    if len(chosen) != r:
        raise ChoiceCountMismatch(f"{len(chosen)} edges chosen, r = {r}")
    if chosen and not (0 <= chosen[0] and chosen[-1] < d):
        raise ChoiceCountMismatch(f"edge indices {chosen} outside 0..{d - 1}")
    if abs(star_characteristic(k, d, r)(lam)) > tol:
        raise WrongRootForR(f"lambda = {lam!r} is not a root of the r={r} characteristic")
    if r == 0 and abs(1.0 - lam) <= tol:
        raise WrongRootForR("the unit eigenvalue carries no pendant-free eigenvector")
    n = d * (k - 1) + 1
    x = np.zeros(n)
    x[0] = 1.0 - lam
    signs = dict(signs) if signs else {}
    for i in chosen:
        pendants = range(i * (k - 1) + 2, i * (k - 1) + k + 1)
        minus = 0
        for v in pendants:
            s = signs.get(v, 1)
            if s not in (1, -1):
                raise SignParityViolation(f"sign of vertex {v} must be +1 or -1")
            if s == -1:
                minus += 1
            x[v - 1] = float(s)
        if k % 2 == 1 and minus:
            raise SignParityViolation("odd uniformity admits only +1 pendant values")
        if k % 2 == 0 and minus % 2 == 1:
            raise SignParityViolation(
                f"edge {i}: {minus} negative pendants, an even count is required")
    h = hyperstar(k, d)
    assert residual(h, TensorKind.LAPLACIAN, lam, x) <= 1e-9
    return x


def hyperstar_lambda1_check(k: int, d: int, x: np.ndarray,
                            tol_struct: float = 1e-8,
                            tol_residual: float = 1e-9) -> bool:
    """Membership test for the unit eigenspace of the size-d hyperstar.

    True iff x is nonzero, the heart coordinate vanishes, and the pendant
    products of the d edges cancel.  Any vector passing the test is verified
    to be an actual eigenpair at eigenvalue 1.
    """
    n = d * (k - 1) + 1
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (n,):
        raise DimensionMismatch(f"vector has shape {x.shape}, hyperstar({k},{d}) has n={n}")
    scale = float(np.abs(x).max())
    if scale == 0.0:
        return False
    xn = x / scale
    if abs(xn[0]) > tol_struct:
        return False
    total = 0.0
    for i in range(d):
        total += float(np.prod(xn[i * (k - 1) + 1: i * (k - 1) + k]))
    if abs(total) > tol_struct:
        return False
    h = hyperstar(k, d)
    assert residual(h, TensorKind.LAPLACIAN, 1.0, x) <= tol_residual
    return True


def _hyperstar_unit_witness(k: int, d: int) -> np.ndarray:
    """Canonical unit-eigenvalue vector: edge 1 pendants +1, edge 2 pendants
    carry one -1, the rest zero; the two pendant products cancel exactly."""
    n = d * (k - 1) + 1
    x = np.zeros(n)
    x[1:k] = 1.0
    x[k:2 * k - 1] = 1.0
    x[k] = -1.0
    return x


def sunflower_positive_witness(k: int, mu: float) -> np.ndarray:
    """Positive signless eigenvector from the parametrized proof solution:
    anchors 1, petal pendants 1/(mu-1), center vertex (mu-1)^{-1/(k-1)}."""
    alpha = (mu - 1.0) ** (-1.0 / (k - 1))
    gamma = 1.0 / (mu - 1.0)
    n = (k - 1) * k + 1
    x = np.full(n, gamma)
    for j in range(1, k):
        x[(j - 1) * k] = 1.0
    x[n - 1] = alpha
    return x


def _path3_layout(k: int) -> tuple[np.ndarray, int, int]:
    """Zero vector for hyperpath(k, 3) plus its two junction vertices."""
    n = 3 * (k - 1) + 1
    return np.zeros(n), k, 2 * k - 1


def path3_case_witness(k: int, lam: float, case: str, sign: int = 1) -> np.ndarray:
    """Parametrized start vector for one hyperpath-of-length-3 case."""
    x, ja, jb = _path3_layout(k)
    if case == "all-ones":
        return np.ones_like(x)
    if case == "junction":
        x[ja - 1] = 1.0
        return x
    if case == "end-branch":
        x[jb - 1] = 1.0
        x[jb:] = 1.0 / (1.0 - lam)
        return x
    if case == "center-symmetric":
        x[ja - 1] = x[jb - 1] = 1.0
        x[ja: jb - 1] = (1.0 / (1.0 - lam)) ** 0.5
        return x
    if case == "center-plus-end":
        t_k = 1.0 / ((lam - 2.0) ** 2 * (1.0 - lam) ** (k - 2))
        t = math.copysign(abs(t_k) ** (1.0 / k), t_k)
        x[ja - 1] = t
        x[ja: jb - 1] = sign * math.sqrt(t / (1.0 - lam))
        x[jb - 1] = 1.0
        x[jb:] = 1.0 / (1.0 - lam)
        return x
    if case == "both-ends":
        x[ja - 1] = x[jb - 1] = 1.0
        x[: ja - 1] = 1.0 / (1.0 - lam)
        x[jb:] = 1.0 / (1.0 - lam)
        x[ja: jb - 1] = sign / math.sqrt(1.0 - lam)
        return x
    raise ValueError(f"unknown case {case!r}")


def _cycle3_layout(k: int) -> tuple[np.ndarray, int, int, int]:
    """Zero vector for hypercycle(k, 3) plus its three junction vertices."""
    n = 3 * (k - 1)
    return np.zeros(n), 1, k, 2 * k - 1


def cycle3_case_witness(k: int, lam: float, case: str, sign: int = 1) -> np.ndarray:
    """Parametrized start vector for one hypercycle-of-size-3 case."""
    x, ja, jb, jc = _cycle3_layout(k)
    if case == "junction":
        x[ja - 1] = 1.0
        return x
    if case == "one-arc":
        x[ja - 1] = x[jb - 1] = 1.0
        x[ja: jb - 1] = (1.0 / (1.0 - lam)) ** 0.5
        return x
    if case == "two-arc":
        s = 0.5 ** (1.0 / k)
        x[ja - 1] = x[jc - 1] = s
        x[jb - 1] = 1.0
        arc = math.sqrt(s / (1.0 - lam))
        x[ja: jb - 1] = arc
        x[jb: jc - 1] = arc
        return x
    if case == "three-arc":
        s = ((2.0 - lam) ** 2 * (1.0 - lam) ** (k - 2) / 4.0) ** (1.0 / k)
        x[ja - 1] = x[jc - 1] = s
        x[jb - 1] = 1.0
        arc = math.sqrt(s / (1.0 - lam))
        x[ja: jb - 1] = arc
        x[jb: jc - 1] = arc
        x[jc:] = sign * s / math.sqrt(1.0 - lam)
        return x
    raise ValueError(f"unknown case {case!r}")


# ---------------------------------------------------------------------------
# catalogs
# ---------------------------------------------------------------------------

def hyperstar_spectrum(k: int, d: int,
                       opts: SolverOptions = DEFAULT_OPTIONS) -> SpectrumReport:
    """Complete Laplacian H-spectrum of the k-uniform size-d hyperstar.

    The eigenvalues other than 1 are exactly the real roots of the r-edge
    characteristics for r = 0..d; every root is certified by the explicit
    pendant construction, and 1 by a canonical balanced vector.
    """
    if k < 3 or d < 2:
        raise InvalidFamilyParameter(f"hyperstar catalog needs k >= 3, d >= 2 (got k={k}, d={d})")
    h = hyperstar(k, d)
    builder = _ReportBuilder()
    for r in range(d + 1):
        f = star_characteristic(k, d, r)
        for root in all_real_roots(f, -1.0, 2.0 * d + 1.0, opts):
            if abs(root - 1.0) <= _UNIT_WINDOW:
                continue
            x = hyperstar_eigenvectors(k, d, root, r, range(r))
            pair = make_pair(h, TensorKind.LAPLACIAN, root, x)
            builder.add(root, f"active-edges r={r}",
                        pair, pair.residual <= opts.tol_residual)
    unit = make_pair(h, TensorKind.LAPLACIAN, 1.0, _hyperstar_unit_witness(k, d))
    builder.add(1.0, "heart-zero balance", unit, unit.residual <= opts.tol_residual)
    return builder.build(FamilySpec("hyperstar", k, d=d).to_dict(), "closed-form", d)


def sunflower_lambda_max(k: int,
                         opts: SolverOptions = DEFAULT_OPTIONS) -> SpectrumEntry:
    """Largest Laplacian H-eigenvalue of the k-uniform sunflower.

    Even k: the unique root in (2, 4) of the sunflower characteristic,
    certified by the positive eigenvector of the signless tensor transferred
    through the cored sign flip.  Odd k: exactly 2, witnessed by an anchor
    indicator.
    """
    if k < 3:
        raise InvalidFamilyParameter(f"sunflower needs k >= 3, got {k}")
    h = sunflower(k)
    if k % 2 == 1:
        pair = make_pair(h, TensorKind.LAPLACIAN, 2.0, _indicator(h.n, 1))
        assert pair.residual == 0.0
        return SpectrumEntry(2.0, "anchor degree", True, pair)
    mu = bisect(sunflower_characteristic(k), 2.0, 4.0, opts)
    qx = sunflower_positive_witness(k, mu)
    qpair = make_pair(h, TensorKind.SIGNLESS, mu, qx)
    assert qpair.residual <= opts.tol_residual
    lpair = make_pair(h, TensorKind.LAPLACIAN, mu, flip_cored_signs(h, qx))
    assert lpair.residual <= opts.tol_residual
    return SpectrumEntry(mu, "positive-eigenvector characteristic", True, lpair)


def odd_family_lambda_max(h: UniformHypergraph,
                          opts: SolverOptions = DEFAULT_OPTIONS,
                          findings: Optional[Sequence[oracle.OracleFinding]] = None
                          ) -> SpectrumEntry:
    """Largest Laplacian H-eigenvalue (= 2) of an odd-uniform sunflower,
    hypercycle of size >= 2, or hyperpath of length >= 3.

    The value is witnessed exactly by a degree-2 indicator vector, and the
    multistart oracle is run (or the supplied findings reused) to confirm no
    certified eigenvalue exceeds 2 + tol_struct.
    """
    if h.k % 2 == 0:
        raise FamilyMismatch("the maximum-degree value holds for odd uniformity")
    cyc = detect_hypercycle(h)
    pth = detect_hyperpath(h)
    if not (detect_sunflower(h) or (cyc is not None and cyc >= 2)
            or (pth is not None and pth >= 3)):
        raise FamilyMismatch(
            "expected a sunflower, a hypercycle of size >= 2, or a hyperpath "
            "of length >= 3")
    deg = degrees(h)
    assert deg.max_degree == 2
    junction = min(v for v in range(1, h.n + 1) if deg.per_vertex[v - 1] == 2)
    pair = make_pair(h, TensorKind.LAPLACIAN, 2.0, _indicator(h.n, junction))
    assert pair.residual == 0.0
    if findings is None:
        findings = oracle.multistart_search(h, opts)
    top = max((f.lam for f in findings), default=2.0)
    if top > 2.0 + opts.tol_struct:
        raise SpectraError(
            f"oracle certified an eigenvalue {top!r} above the maximum degree 2")
    return SpectrumEntry(2.0, "junction degree", True, pair)


def cored_lambda1(h: UniformHypergraph) -> SpectrumEntry:
    """Unit eigenvalue of any cored hypergraph, witnessed by a degree-1
    indicator (exact residual zero)."""
    if cored_structure(h) is None:
        raise NotCored("hypergraph is not cored")
    deg = degrees(h).per_vertex
    pendant = min(v for v in range(1, h.n + 1) if deg[v - 1] == 1)
    pair = make_pair(h, TensorKind.LAPLACIAN, 1.0, _indicator(h.n, pendant))
    assert pair.residual == 0.0
    return SpectrumEntry(1.0, "pendant unit", True, pair)


def _certified_entry(h: UniformHypergraph, lam: float, tag: str,
                     starts: Sequence[np.ndarray], opts: SolverOptions,
                     builder: _ReportBuilder) -> None:
    """Certify lam through the first start vector that converges."""
    for start in starts:
        pair = oracle.certify(h, lam, start, opts)
        if pair is not None:
            builder.add(lam, tag, pair, True)
            return
    builder.add(lam, tag, None, False)


def hyperpath3_spectrum(k: int,
                        opts: SolverOptions = DEFAULT_OPTIONS) -> SpectrumReport:
    """H-spectrum of the odd-uniform hyperpath of length 3.

    Emits 0, 2 and 1 plus the roots of the three case equations, each
    candidate certified from its parametrized start vector; failed
    certifications are kept but flagged.
    """
    if k % 2 == 0 or k < 3:
        raise OddUniformityRequired(f"hyperpath catalog needs odd k >= 3, got {k}")
    h = hyperpath(k, 3)
    builder = _ReportBuilder()
    _certified_entry(h, 0.0, "all-ones kernel",
                     [path3_case_witness(k, 0.0, "all-ones")], opts, builder)
    _certified_entry(h, 2.0, "junction degree",
                     [path3_case_witness(k, 2.0, "junction")], opts, builder)
    unit = cored_lambda1(h)
    builder.add(1.0, unit.case_tag, unit.witness, True)
    for root in all_real_roots(path3_end_branch(k), 0.0, 1.0, opts):
        _certified_entry(h, root, "end-branch",
                         [path3_case_witness(k, root, "end-branch")], opts, builder)
    for root in all_real_roots(path3_center_symmetric(k), 0.0, 1.0, opts):
        _certified_entry(h, root, "center-symmetric",
                         [path3_case_witness(k, root, "center-symmetric")],
                         opts, builder)
    for root in all_real_roots(path3_center_end(k), 0.0, 2.0, opts):
        if root < 1e-9 or root > 2.0 - 1e-9 or abs(root - 1.0) <= _UNIT_WINDOW:
            continue
        starts = [path3_case_witness(k, root, "center-plus-end", sign)
                  for sign in (1, -1)]
        _certified_entry(h, root, "center-plus-end", starts, opts, builder)
    for sign in (1, -1):
        f = path3_both_ends(k, sign)
        for root in all_real_roots(f, 0.0, 1.0 - 1e-12, opts):
            if root > 1.0 - 1e-9:
                continue
            tag = f"both-ends[{'+' if sign == 1 else '-'}]"
            _certified_entry(h, root, tag,
                             [path3_case_witness(k, root, "both-ends", sign)],
                             opts, builder)
    return builder.build(FamilySpec("hyperpath", k, d=3).to_dict(), "closed-form", 2)


def hypercycle3_spectrum(k: int,
                         opts: SolverOptions = DEFAULT_OPTIONS) -> SpectrumReport:
    """H-spectrum of the odd-uniform hypercycle of size 3.

    Emits 2 and 1 plus the one-arc and two-arc roots in (0, 1) and the
    all-arcs candidates in [0, 1).  For the all-arcs case three scalar
    equation variants and both square-root branches are scanned (see
    cycle3_three_arc); the report records which variant produced each root
    and only certification decides what counts.
    """
    if k % 2 == 0 or k < 3:
        raise OddUniformityRequired(f"hypercycle catalog needs odd k >= 3, got {k}")
    h = hypercycle(k, 3)
    builder = _ReportBuilder()
    _certified_entry(h, 2.0, "junction degree",
                     [cycle3_case_witness(k, 2.0, "junction")], opts, builder)
    unit = cored_lambda1(h)
    builder.add(1.0, unit.case_tag, unit.witness, True)
    for root in all_real_roots(cycle3_one_arc(k), 0.0, 1.0, opts):
        _certified_entry(h, root, "one-arc",
                         [cycle3_case_witness(k, root, "one-arc")], opts, builder)
    for variant in _TWO_ARC_VARIANTS:
        for root in all_real_roots(cycle3_two_arc(k, variant), 0.0, 1.0, opts):
            _certified_entry(h, root, f"two-arc[{variant}]",
                             [cycle3_case_witness(k, root, "two-arc")], opts, builder)
    for variant in _CYCLE3_VARIANTS:
        for sign in (1, -1):
            f = cycle3_three_arc(k, variant, sign)
            for root in all_real_roots(f, 0.0, 1.0 - 1e-12, opts):
                if root > 1.0 - 1e-9 or abs(root - 1.0) <= _UNIT_WINDOW:
                    continue
                tag = f"three-arc[{variant},{'+' if sign == 1 else '-'}]"
                starts = [cycle3_case_witness(k, root, "three-arc", sign),
                          cycle3_case_witness(k, root, "three-arc", -sign)]
                _certified_entry(h, root, tag, starts, opts, builder)
    return builder.build(FamilySpec("hypercycle", k, s=3).to_dict(), "closed-form", 2)


# ---------------------------------------------------------------------------
# monotonicity in the uniformity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonotonicityResult:
    """Largest-eigenvalue sequence over increasing uniformity."""

    family: str
    size: int
    k_values: tuple[int, ...]
    lambdas: tuple[float, ...]
    strictly_decreasing: bool
    above_degree: bool


def monotonicity_check(family: str, size: int, k_list: Sequence[int],
                       opts: SolverOptions = DEFAULT_OPTIONS) -> MonotonicityResult:
    """Largest-eigenvalue sequence of a hyperstar or hypercycle family as the
    uniformity grows, plus whether it decreases strictly while staying above
    the maximum degree.

    Hyperstars use the positive-eigenvector characteristic root in (d, 2d]
    (any k >= 3); hypercycles run the power iteration on the generated
    member (even k >= 4).
    """
    ks = list(k_list)
    if not ks or any(b <= a for a, b in zip(ks, ks[1:])):
        raise InvalidFamilyParameter("k_list must be strictly ascending")
    lams: list[float] = []
    if family == "hyperstar":
        if size < 1:
            raise InvalidFamilyParameter("hyperstar size must be >= 1")
        if any(k < 3 for k in ks):
            raise InvalidFamilyParameter("hyperstar check needs k >= 3")
        for k in ks:
            lams.append(bisect(star_positive_characteristic(k, size),
                               float(size), 2.0 * size, opts))
        max_degree = float(size)
    elif family == "hypercycle":
        if size < 2:
            raise InvalidFamilyParameter("hypercycle size must be >= 2")
        if any(k < 4 or k % 2 for k in ks):
            raise InvalidFamilyParameter("hypercycle check needs even k >= 4")
        for k in ks:
            lams.append(power_iteration_q(hypercycle(k, size), opts).lam)
        max_degree = 2.0
    else:
        raise InvalidFamilyParameter(f"unsupported family {family!r}")
    decreasing = all(b < a for a, b in zip(lams, lams[1:]))
    above = all(v > max_degree for v in lams)
    return MonotonicityResult(family=family, size=size, k_values=tuple(ks),
                              lambdas=tuple(lams),
                              strictly_decreasing=decreasing,
                              above_degree=above)
