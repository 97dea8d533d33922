"""General numerical kernels: bracketed scalar root finding and the
Collatz-bounded power iteration for the signless Laplacian.

The power iteration targets the largest signless H-eigenvalue of a connected
hypergraph.  The signless tensor is entrywise nonnegative with positive
diagonal, every iterate stays strictly positive, and the min/max ratio
bounds close monotonically onto the eigenvalue.  On even-uniform cored
hypergraphs the converged eigenvector transfers to a Laplacian eigenpair by
negating one degree-1 coordinate per edge.
"""

from __future__ import annotations

from typing import Callable, Iterable

import numpy as np

from .errors import (
    MaxIterations,
    NoSignChange,
    NotConnected,
    NotCored,
    OddUniformity,
)
from .hypergraphs import UniformHypergraph, cored_structure, degrees, is_connected
from .options import DEFAULT_OPTIONS, SolverOptions
from .tensor_ops import EigenPair, TensorKind, _ipow, apply, make_pair

ScalarFunction = Callable[[float], float]


def _numeric_derivative(f: ScalarFunction, x: float) -> float:
    step = 1e-7 * max(1.0, abs(x))
    return (f(x + step) - f(x - step)) / (2.0 * step)


def _newton_steps(f: ScalarFunction, x0: float, lo: float, hi: float,
                  max_steps: int = 60) -> float:
    """Plain Newton from x0, clamped to [lo, hi]; returns the best |f| point."""
    best_x, best_f = x0, abs(f(x0))
    x = x0
    for _ in range(max_steps):
        df = _numeric_derivative(f, x)
        if df == 0.0 or not np.isfinite(df):
            break
        nxt = x - f(x) / df
        if not np.isfinite(nxt) or nxt < lo or nxt > hi:
            break
        fn = abs(f(nxt))
        if fn < best_f:
            best_x, best_f = nxt, fn
        if nxt == x:
            break
        x = nxt
    return best_x


def bisect(f: ScalarFunction, lo: float, hi: float,
           opts: SolverOptions = DEFAULT_OPTIONS) -> float:
    """Root of f in [lo, hi] bracketed down to width opts.tol_root.

    Requires a sign change between the endpoints.  After bisection a short
    Newton polish runs from the midpoint and is kept only while it stays
    inside the final bracket.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise NoSignChange(f"f({lo}) = {flo:.6g} and f({hi}) = {fhi:.6g} have equal sign")
    a, b, fa = lo, hi, flo
    for _ in range(opts.max_iter):
        if b - a <= opts.tol_root:
            break
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:  # interval at floating point resolution
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if np.sign(fm) == np.sign(fa):
            a, fa = mid, fm
        else:
            b = mid
    else:
        raise MaxIterations("bisection did not reach tol_root", lower=a, upper=b)
    mid = 0.5 * (a + b)
    polished = _newton_steps(f, mid, a, b, max_steps=5)
    return polished if a <= polished <= b else mid


def all_real_roots(f: ScalarFunction, lo: float, hi: float,
                   opts: SolverOptions = DEFAULT_OPTIONS,
                   cells: int = 10_000) -> list[float]:
    """Every real root of f on [lo, hi] found by a uniform sign scan.

    Each sign change is bisected.  Even-multiplicity roots leave no sign
    change, so grid minima of |f| below 1e-6 are additionally polished by
    Newton and accepted when |f| drops below 1e-11.  Roots closer than 1e-8
    are merged; the ascending list is returned (possibly empty).
    """
    xs = np.linspace(lo, hi, cells + 1)
    fs = np.array([f(x) for x in xs])
    found: list[float] = []
    for i in range(cells):
        if fs[i] == 0.0:
            found.append(float(xs[i]))
        elif np.sign(fs[i]) != np.sign(fs[i + 1]) and fs[i + 1] != 0.0:
            found.append(bisect(f, float(xs[i]), float(xs[i + 1]), opts))
    if fs[-1] == 0.0:
        found.append(float(xs[-1]))

    absfs = np.abs(fs)
    for i in range(1, cells):
        if absfs[i] < 1e-6 and absfs[i] <= absfs[i - 1] and absfs[i] <= absfs[i + 1]:
            candidate = _newton_steps(f, float(xs[i]), lo, hi, max_steps=200)
            if abs(f(candidate)) <= 1e-11:
                found.append(candidate)

    found.sort()
    merged: list[float] = []
    for root in found:
        if merged and abs(root - merged[-1]) < 1e-8:
            if abs(f(root)) < abs(f(merged[-1])):
                merged[-1] = root
        else:
            merged.append(root)
    return merged


def power_iteration_q(h: UniformHypergraph,
                      opts: SolverOptions = DEFAULT_OPTIONS) -> EigenPair:
    """Largest signless H-eigenvalue of a connected hypergraph.

    Iterates y = Q x^{k-1}, x <- normalized y^{1/(k-1)} from the all-ones
    start.  At every step min_i y_i / x_i^{k-1} and max_i y_i / x_i^{k-1}
    bracket the eigenvalue; the loop stops once the gap is at most
    opts.tol_iter and returns the bracket midpoint with the current iterate.
    """
    if not is_connected(h):
        raise NotConnected("power iteration requires a connected hypergraph")
    k = h.k
    dmax = float(degrees(h).max_degree)
    x = np.ones(h.n, dtype=np.float64)
    lower, upper = -np.inf, np.inf
    for _ in range(opts.max_iter):
        y = apply(h, TensorKind.SIGNLESS, x)
        assert np.all(y > 0.0), "signless iterate lost positivity"
        ratios = y / _ipow(x, k - 1)
        lo, hi = float(ratios.min()), float(ratios.max())
        slack = 1e-12 * max(1.0, abs(lo), abs(hi))
        assert lo >= lower - slack and hi <= upper + slack, \
            "Collatz bounds failed to tighten monotonically"
        lower, upper = max(lower, lo), min(upper, hi)
        if hi - lo <= opts.tol_iter:
            lam = 0.5 * (lo + hi)
            pair = make_pair(h, TensorKind.SIGNLESS, lam, x)
            assert pair.residual <= opts.tol_residual, \
                f"closed bounds but residual {pair.residual:.3e} above tolerance"
            assert dmax - 1e-9 <= lam <= 2.0 * dmax + 1e-9, \
                f"eigenvalue {lam} outside [d, 2d] = [{dmax}, {2 * dmax}]"
            return pair
        x = np.power(y, 1.0 / (k - 1))
        x /= x.max()
    raise MaxIterations(
        f"Collatz bounds closed to [{lower:.12g}, {upper:.12g}] "
        f"(gap {upper - lower:.3e}) within {opts.max_iter} iterations",
        lower=lower, upper=upper)


def flip_cored_signs(h: UniformHypergraph, x: np.ndarray) -> np.ndarray:
    """Negate the designated degree-1 coordinate of every edge."""
    cs = cored_structure(h)
    if cs is None:
        raise NotCored("sign transfer needs a degree-1 vertex in every edge")
    y = np.array(x, dtype=np.float64)
    for vertex in cs.values():
        y[vertex - 1] = -y[vertex - 1]
    return y


def lambda_l_even_cored(h: UniformHypergraph,
                        opts: SolverOptions = DEFAULT_OPTIONS) -> EigenPair:
    """Largest Laplacian H-eigenvalue of an even-uniform cored hypergraph.

    Equals the signless value; the returned pair reuses the power iteration
    eigenvalue bit for bit and carries the sign-flipped eigenvector.
    """
    if h.k % 2 == 1:
        raise OddUniformity("the signless/Laplacian transfer needs even k")
    if cored_structure(h) is None:
        raise NotCored("hypergraph is not cored")
    qpair = power_iteration_q(h, opts)
    flipped = flip_cored_signs(h, qpair.x)
    pair = make_pair(h, TensorKind.LAPLACIAN, qpair.lam, flipped)
    assert pair.lam == qpair.lam
    assert pair.residual <= opts.tol_residual, \
        f"sign-flipped pair residual {pair.residual:.3e} above tolerance"
    return pair
