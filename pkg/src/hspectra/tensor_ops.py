"""Edge-based evaluation of adjacency/Laplacian/signless tensor contractions.

The order-k tensors are never materialized.  For a vector x the contraction
(A x^{k-1})_i is one product of the other k-1 coordinates per incident edge,
so every apply costs O(k * |E|) multiplications.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional

import numpy as np

from .errors import DimensionMismatch, ZeroVector
from .hypergraphs import (
    UniformHypergraph,
    cored_structure,
    degrees,
    intersectional_vertices,
    write_json_atomic,
)


class TensorKind(str, enum.Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS = "signless"


@lru_cache(maxsize=512)
def _edge_index(h: UniformHypergraph) -> np.ndarray:
    arr = np.asarray(h.edges, dtype=np.intp) - 1
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=512)
def _degree_array(h: UniformHypergraph) -> np.ndarray:
    arr = np.asarray(degrees(h).per_vertex, dtype=np.float64)
    arr.setflags(write=False)
    return arr


def _ipow(values: np.ndarray, exponent: int) -> np.ndarray:
    """Entrywise integer power by repeated squaring (bit-exact contract).

    The small exponents are unrolled; they produce the same bits as the
    general square-and-multiply loop.
    """
    if exponent == 1:
        return values.copy()
    if exponent == 2:
        return values * values
    if exponent == 3:
        return values * (values * values)
    if exponent == 4:
        sq = values * values
        return sq * sq
    result = np.ones_like(values)
    base = values.copy()
    e = exponent
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def _leave_one_out(vals: np.ndarray) -> np.ndarray:
    """Row-wise products of all entries except the own column.

    Prefix/suffix products, so zeros are handled without division.
    """
    m, k = vals.shape
    out = np.empty_like(vals)
    fwd = np.cumprod(vals, axis=1)
    out[:, 0] = 1.0
    out[:, 1:] = fwd[:, :-1]
    rev = np.cumprod(vals[:, ::-1], axis=1)[:, ::-1]
    out[:, :-1] *= rev[:, 1:]
    return out


def adjacency_apply(h: UniformHypergraph, x: np.ndarray) -> np.ndarray:
    """(A x^{k-1})_i = sum over edges containing i of prod_{s in e, s != i} x_s."""
    idx = _edge_index(h)
    loo = _leave_one_out(x[idx])
    out = np.zeros(h.n, dtype=np.float64)
    np.add.at(out, idx, loo)
    return out


def apply(h: UniformHypergraph, kind: TensorKind | str, x: np.ndarray) -> np.ndarray:
    """Contract the chosen tensor with x^{k-1}."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (h.n,):
        raise DimensionMismatch(f"vector has shape {x.shape}, hypergraph has n={h.n}")
    kind = TensorKind(kind)
    ax = adjacency_apply(h, x)
    if kind is TensorKind.ADJACENCY:
        return ax
    diag = _degree_array(h) * _ipow(x, h.k - 1)
    if kind is TensorKind.LAPLACIAN:
        return diag - ax
    return diag + ax


def residual(h: UniformHypergraph, kind: TensorKind | str, lam: float, x: np.ndarray) -> float:
    """Infinity-norm eigenpair defect, evaluated on the unit-infinity-norm
    representative of x so the value is scale canonical."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (h.n,):
        raise DimensionMismatch(f"vector has shape {x.shape}, hypergraph has n={h.n}")
    scale = np.abs(x).max() if x.size else 0.0
    if scale == 0.0:
        raise ZeroVector("residual of the zero vector is undefined")
    xn = x / scale
    defect = lam * _ipow(xn, h.k - 1) - apply(h, kind, xn)
    return float(np.abs(defect).max())


@dataclass(frozen=True, eq=False)
class EigenPair:
    """A certified (eigenvalue, eigenvector) candidate for one tensor kind."""

    lam: float
    x: np.ndarray
    kind: TensorKind
    residual: float

    def recomputed_residual(self, h: UniformHypergraph) -> float:
        return residual(h, self.kind, self.lam, self.x)

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "residual": self.residual,
            "kind": self.kind.value,
            "x": [float(v) for v in self.x],
        }

    @staticmethod
    def from_dict(data: Mapping) -> "EigenPair":
        return EigenPair(
            lam=float(data["lambda"]),
            x=np.asarray(data["x"], dtype=np.float64),
            kind=TensorKind(data["kind"]),
            residual=float(data["residual"]),
        )


def make_pair(h: UniformHypergraph, kind: TensorKind | str, lam: float, x: np.ndarray) -> EigenPair:
    """Normalize x to unit infinity norm and package it with its residual."""
    x = np.asarray(x, dtype=np.float64)
    scale = np.abs(x).max() if x.size else 0.0
    if scale == 0.0:
        raise ZeroVector("eigenvector must be nonzero")
    xn = x / scale
    xn.setflags(write=False)
    return EigenPair(lam=float(lam), x=xn, kind=TensorKind(kind),
                     residual=residual(h, kind, lam, xn))


# ---------------------------------------------------------------------------
# structural lemma checks
# ---------------------------------------------------------------------------

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"

# coordinates below this magnitude (after unit-norm scaling) count as zero
# when deciding which lemma predicates bind
_SUPPORT_TOL = 1e-6


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""


@dataclass(frozen=True)
class StructuralReport:
    checks: tuple[CheckResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]


def structural_checks(h: UniformHypergraph, pair: EigenPair,
                      tol_struct: float = 1e-8,
                      tol_residual: float = 1e-9) -> StructuralReport:
    """Evaluate the eigenvector-structure predicates a certified Laplacian
    pair must satisfy on cored hypergraphs.

    Checks (each reported pass/fail/not_applicable):
      equal-cored-values   lambda != 1: degree-1 vertices sharing an edge
                           carry equal magnitudes (equal values for odd k)
      edge-sign-products   lambda >= 1: per-edge coordinate products are
                           nonpositive (for odd k, over the edge minus its
                           designated degree-1 vertex)
      cored-to-junction    odd k, every edge has at most two degree-2+
                           vertices, lambda != 1: nonzero degree-1 values
                           determine the junction values
    """
    if pair.residual > tol_residual:
        raise ValueError("structural checks expect a certified pair "
                         f"(residual {pair.residual:.3e} > {tol_residual:.0e})")
    lam = pair.lam
    scale = np.abs(pair.x).max()
    x = pair.x / scale
    cs = cored_structure(h)
    inter = intersectional_vertices(h)
    checks: list[CheckResult] = []

    def value(v: int) -> float:
        return float(x[v - 1])

    # equal magnitudes among cored vertices of one edge
    if cs is None:
        checks.append(CheckResult("equal-cored-values", NOT_APPLICABLE, "not cored"))
    elif abs(lam - 1.0) <= tol_struct:
        checks.append(CheckResult("equal-cored-values", NOT_APPLICABLE, "lambda = 1"))
    else:
        status, detail = PASS, ""
        for e in h.edges:
            pend = [v for v in e if v not in inter]
            for a, b in zip(pend, pend[1:]):
                if h.k % 2 == 1:
                    gap = abs(value(a) - value(b))
                else:
                    gap = abs(abs(value(a)) - abs(value(b)))
                if gap > tol_struct:
                    status, detail = FAIL, f"edge {e}: |x_{a}| vs |x_{b}| differ by {gap:.3e}"
                    break
            if status == FAIL:
                break
        checks.append(CheckResult("equal-cored-values", status, detail))

    # nonpositive edge products at or above lambda = 1
    if cs is None:
        checks.append(CheckResult("edge-sign-products", NOT_APPLICABLE, "not cored"))
    elif lam < 1.0 - tol_struct:
        checks.append(CheckResult("edge-sign-products", NOT_APPLICABLE, "lambda < 1"))
    else:
        status, detail = PASS, ""
        for e in h.edges:
            if h.k % 2 == 0:
                prod = float(np.prod([value(v) for v in e]))
            else:
                skip = cs[e]
                prod = float(np.prod([value(v) for v in e if v != skip]))
            if prod > tol_struct:
                status, detail = FAIL, f"edge {e}: product {prod:.3e} > 0"
                break
        checks.append(CheckResult("edge-sign-products", status, detail))

    # junction relations forced by nonzero cored coordinates
    power_shaped = cs is not None and all(
        len([v for v in e if v in inter]) <= 2 for e in h.edges)
    if not power_shaped:
        checks.append(CheckResult("cored-to-junction", NOT_APPLICABLE,
                                  "some edge has three or more junction vertices"))
    elif h.k % 2 == 0:
        checks.append(CheckResult("cored-to-junction", NOT_APPLICABLE, "even k"))
    elif abs(lam - 1.0) <= tol_struct:
        checks.append(CheckResult("cored-to-junction", NOT_APPLICABLE, "lambda = 1"))
    else:
        status, detail = PASS, ""
        for e in h.edges:
            ivs = [v for v in e if v in inter]
            supports = [value(v) for v in e if v not in inter and abs(value(v)) > _SUPPORT_TOL]
            if not supports:
                continue
            xs = supports[0]
            if len(ivs) == 1:
                gap = abs((1.0 - lam) * xs - value(ivs[0]))
            elif len(ivs) == 2:
                gap = abs(value(ivs[0]) * value(ivs[1]) - (1.0 - lam) * xs * xs)
            else:
                continue
            if gap > tol_struct:
                status, detail = FAIL, f"edge {e}: junction relation off by {gap:.3e}"
                break
        checks.append(CheckResult("cored-to-junction", status, detail))

    return StructuralReport(checks=tuple(checks))


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

def save_vector(x: np.ndarray, path: str) -> None:
    write_json_atomic(path, {"x": [float(v) for v in np.asarray(x, dtype=np.float64)]})


def load_vector(path: str) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return np.asarray(json.load(fh)["x"], dtype=np.float64)


def save_pair(pair: EigenPair, path: str) -> None:
    write_json_atomic(path, pair.to_dict())


def load_pair(path: str) -> EigenPair:
    with open(path, encoding="utf-8") as fh:
        return EigenPair.from_dict(json.load(fh))
