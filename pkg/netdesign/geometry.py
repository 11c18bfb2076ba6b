import enum
import math
import warnings
from itertools import combinations

import numpy as np

from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

__version__ = '0.1'
__all__ = ['Point', 'BalancedInstance', 'PolygonInstance', 'TriangleInstance',
           'AxisStatus', 'ReconstructionResult', 'Triangle', 'NoTriangleError',
           'DegenerateTriangleWarning', 'triangle_area', 'balanced_arrangement',
           'balanced_check', 'polygon_forward', 'polygon_reconstruct',
           'triangle_from_median_closed', 'triangle_from_median_search']


DEFAULT_LEPS = 1e-12
DEFAULT_UEPS = 1e-12

# Ratios smaller than this (in magnitude) are treated as exactly zero
ZERO_RATIO_TOL = 1e-12

# Bisection safety net for when the interval can no longer shrink in floating point
_MAX_BISECTIONS = 200


class Point(NamedTuple):
    x: float
    y: float


class BalancedInstance(NamedTuple):
    weights: Sequence


class PolygonInstance(NamedTuple):
    points: Sequence[Tuple[float, float]]
    ratios: Sequence[float]


class TriangleInstance(NamedTuple):
    lb: float
    lc: float
    lm: float


class AxisStatus(enum.Enum):
    UNIQUE = 'UNIQUE'
    FREE = 'FREE'
    NONE = 'NONE'


class ReconstructionResult(NamedTuple):
    """
    Outcome of a polygon reconstruction.  Each coordinate axis is solved
    independently; a FREE axis has its free coordinates set to zero.
    `vertices` is None if either axis has no solution.
    """

    x_status: AxisStatus
    y_status: AxisStatus
    vertices: Optional[List[Point]]


class Triangle(NamedTuple):
    A: Point
    B: Point
    C: Point


class NoTriangleError(RuntimeError):
    """
    Raised when no triangle has the requested side and median lengths.
    """

    pass


class DegenerateTriangleWarning(RuntimeWarning):
    pass


def triangle_area(a: Sequence[float], b: Sequence[float], c: Sequence[float]) -> float:
    """
    Absolute area of the triangle abc from the shoelace formula.
    """

    return abs((b[0] - a[0])*(c[1] - a[1]) - (c[0] - a[0])*(b[1] - a[1])) / 2.0


def balanced_arrangement(inst: Union[BalancedInstance, Sequence]) -> Optional[List[Point]]:
    """
    Place N weighted points so that every triangle formed by three of them has
    an area equal to the sum of the three weights.  The last two weights must
    be equal.  Returns the list of points or None if no arrangement exists
    (N >= 5, or N = 4 with neither w1 = w2 nor w1 + w2 = 2*w4).  Comparisons
    between weights are exact, so pass Fraction/Decimal weights to avoid
    floating point surprises.
    """

    weights = list(inst.weights if isinstance(inst, BalancedInstance) else inst)
    N = len(weights)
    if N < 3:
        raise ValueError(f"Need at least 3 weights, found {N}")
    for i,w in enumerate(weights):
        if not w > 0:
            raise ValueError(f"Weight {i+1} must be positive, found {w}")
    if weights[-2] != weights[-1]:
        raise ValueError(f"The last two weights must be equal, found {weights[-2]} and {weights[-1]}")

    if N == 3:
        w1, w2, w3 = weights
        return [Point(0.0, float(w1 + w2 + w3)), Point(0.0, 0.0), Point(2.0, 0.0)]

    if N == 4:
        w1, w2, w3, w4 = weights
        if w1 == w2:
            ## Points 1 and 2 on the same side of 3-4, segment 1-2 parallel to 3-4
            h = w1 + w3 + w4
            return [Point(0.0, float(h)), Point(float(2*(w1 + w2 + w4)/h), float(h)),
                    Point(0.0, 0.0), Point(2.0, 0.0)]
        if w1 + w2 == 2*w4:
            ## Points 1 and 2 on opposite sides, segment 1-2 crossing the midpoint of 3-4
            return [Point(1.0, float(w1 + w3 + w4)), Point(1.0, -float(w2 + w3 + w4)),
                    Point(0.0, 0.0), Point(2.0, 0.0)]

    return None


def balanced_check(points: Sequence[Tuple[float, float]], weights: Sequence, tol: float=1e-9) -> bool:
    """
    Check that every triple of distinct points has a triangle area equal to
    the sum of its weights within tol * max(1, weight sum).
    """

    if len(points) != len(weights):
        raise ValueError(f"Got {len(points)} points but {len(weights)} weights")

    for i,j,k in combinations(range(len(points)), 3):
        target = float(weights[i] + weights[j] + weights[k])
        area = triangle_area(points[i], points[j], points[k])
        if abs(area - target) > tol*max(1.0, target):
            return False
    return True


def polygon_forward(vertices: Sequence[Tuple[float, float]], t: Sequence[float]) -> List[Point]:
    """
    Compute the ratio points p(i) = (1 - t(i))*V(i) + t(i)*V(i+1) of a closed
    polygon (indices are cyclic).
    """

    if len(vertices) != len(t):
        raise ValueError(f"Got {len(vertices)} vertices but {len(t)} ratios")

    v = np.asarray(vertices, dtype=np.float64).reshape(-1, 2)
    r = np.asarray(t, dtype=np.float64)[:,None]
    p = (1 - r)*v + r*np.roll(v, -1, axis=0)
    return [Point(float(x), float(y)) for x,y in p]


def _solve_cycle(p: np.ndarray, t: np.ndarray) -> Tuple[AxisStatus, np.ndarray]:
    """
    One axis, no zero ratios:  write x(i) = a(i)*x(1) + b(i) around the cycle
    and close it with x(N+1) = x(1).
    """

    N = p.size
    a = np.empty(N+1)
    b = np.empty(N+1)
    a[0], b[0] = 1.0, 0.0
    for k in range(N):
        r = (t[k] - 1) / t[k]
        a[k+1] = r*a[k]
        b[k+1] = r*b[k] + p[k]/t[k]

    scale = max(1.0, float(np.max(np.abs(b))))
    if abs(a[N] - 1) > ZERO_RATIO_TOL*max(1.0, abs(a[N])):
        status = AxisStatus.UNIQUE
        x1 = -b[N] / (a[N] - 1)
    elif abs(b[N]) <= 1e-9*scale:
        status = AxisStatus.FREE
        x1 = 0.0
    else:
        return AxisStatus.NONE, np.full(N, np.nan)

    return status, a[:N]*x1 + b[:N]


def _solve_chains(p: np.ndarray, t: np.ndarray, zero: np.ndarray) -> Tuple[AxisStatus, np.ndarray]:
    """
    One axis with some zero ratios.  Every zero ratio t(j) = 0 pins
    x(j) = p(j) and closes the chain that starts right after the previous
    zero ratio; inside the chain x(k) is linear in the chain's first vertex.
    """

    N = p.size
    x = np.zeros(N)
    status = AxisStatus.UNIQUE
    zeros = np.flatnonzero(zero)
    for idx,j in enumerate(zeros):
        i = (zeros[idx-1] + 1) % N
        ## Chain i..j (cyclic); a/b hold the coefficients of the chain vertices
        chain = [(i + k) % N for k in range(((j - i) % N) + 1)]
        a = np.empty(len(chain))
        b = np.empty(len(chain))
        a[0], b[0] = 1.0, 0.0
        for k in range(1, len(chain)):
            q = chain[k-1]
            r = (t[q] - 1) / t[q]
            a[k] = r*a[k-1]
            b[k] = r*b[k-1] + p[q]/t[q]

        residual = p[j] - b[-1]
        scale = max(1.0, float(np.max(np.abs(b))), abs(float(p[j])))
        if a[-1] != 0:
            first = residual / a[-1]
        elif abs(residual) <= 1e-9*scale:
            status = AxisStatus.FREE if status is AxisStatus.UNIQUE else status
            first = 0.0
        else:
            return AxisStatus.NONE, np.full(N, np.nan)

        x[chain] = a*first + b
        x[j] = p[j]

    return status, x


def _solve_axis(p: np.ndarray, t: np.ndarray, zero: np.ndarray) -> Tuple[AxisStatus, np.ndarray]:
    if zero.any():
        return _solve_chains(p, t, zero)
    return _solve_cycle(p, t)


def polygon_reconstruct(inst: PolygonInstance, refine: int=2) -> ReconstructionResult:
    """
    Reconstruct a closed polygon from its ratio points p(i) and ratios t(i).
    The x and y coordinates are solved independently by propagating the
    linear coefficients x(i) = a(i)*x(1) + b(i) around the polygon; zero
    ratios split the polygon into chains anchored at x(j) = p(j).  Each axis
    is UNIQUE, FREE (free coordinates set to zero) or NONE.  UNIQUE axes get
    `refine` passes of iterative refinement against the residual
    p - polygon_forward(x).  Runs in O(N) per pass.
    """

    points = np.asarray(inst.points, dtype=np.float64).reshape(-1, 2)
    t = np.asarray(inst.ratios, dtype=np.float64).copy()
    N = t.size
    if N < 3:
        raise ValueError(f"Need at least 3 points, found {N}")
    if points.shape[0] != N:
        raise ValueError(f"Got {points.shape[0]} points but {N} ratios")
    if not (np.all(np.isfinite(points)) and np.all(np.isfinite(t))):
        raise ValueError("Points and ratios must be finite")

    zero = np.abs(t) < ZERO_RATIO_TOL
    near = zero & (t != 0)
    if near.any():
        warnings.warn(f"Treating {int(near.sum())} near-zero ratio(s) as exactly zero", RuntimeWarning)
        t[near] = 0.0

    statuses = []
    coords = []
    for axis in (0, 1):
        p = points[:,axis]
        status, x = _solve_axis(p, t, zero)
        if status is AxisStatus.UNIQUE:
            for _ in range(refine):
                fitted = (1 - t)*x + t*np.roll(x, -1)
                _, correction = _solve_axis(p - fitted, t, zero)
                x = x + correction
        statuses.append(status)
        coords.append(x)

    vertices = None
    if AxisStatus.NONE not in statuses:
        vertices = [Point(float(x), float(y)) for x,y in zip(coords[0], coords[1])]
    return ReconstructionResult(statuses[0], statuses[1], vertices)


def _check_lengths(inst: TriangleInstance):
    for name in ('lb', 'lc', 'lm'):
        value = getattr(inst, name)
        if not (value > 0 and math.isfinite(value)):
            raise ValueError(f"{name} must be a positive finite length, found {value}")


def _place(a: float, lm: float, cos_alpha: float) -> Triangle:
    sin_alpha = math.sqrt(max(0.0, 1.0 - cos_alpha*cos_alpha))
    return Triangle(Point(a - lm*cos_alpha, lm*sin_alpha), Point(0.0, 0.0), Point(2*a, 0.0))


def triangle_from_median_closed(inst: TriangleInstance) -> Triangle:
    """
    Build triangle ABC from |AC| = lb, |AB| = lc and the median |AM| = lm with
    B = (0, 0), C = (2a, 0) and A above BC.  Adding the law of cosines in
    triangles ABM and ACM gives a = sqrt((lc^2 + lb^2)/2 - lm^2) and then
    cos(AMB) = (lm^2 + a^2 - lc^2) / (2 lm a).  Raises NoTriangleError if no
    such triangle exists and warns with DegenerateTriangleWarning when the
    triangle is flat.
    """

    inst = TriangleInstance(*(float(v) for v in inst))
    _check_lengths(inst)
    lb, lc, lm = inst

    a2 = (lc*lc + lb*lb)/2 - lm*lm
    if a2 <= 0:
        raise NoTriangleError(f"No triangle with lb={lb}, lc={lc}, lm={lm}: BC would have length zero")
    a = math.sqrt(a2)

    cos_alpha = (lm*lm + a*a - lc*lc) / (2*lm*a)
    if abs(cos_alpha) > 1 + 1e-12:
        raise NoTriangleError(f"No triangle with lb={lb}, lc={lc}, lm={lm}: |cos(AMB)| = {abs(cos_alpha)} > 1")
    cos_alpha = min(1.0, max(-1.0, cos_alpha))
    if abs(cos_alpha) >= 1 - 1e-12:
        warnings.warn(f"Triangle with lb={lb}, lc={lc}, lm={lm} is degenerate (collinear)",
                      DegenerateTriangleWarning)

    return _place(a, lm, cos_alpha)


def _search_angle(a: float, lm: float, lc: float, ueps: float) -> float:
    """
    Bisect the angle AMB in [0, pi] until c' = |AB| matches lc.  c' grows with
    the angle.
    """

    lo, hi = 0.0, math.pi
    for _ in range(_MAX_BISECTIONS):
        if hi - lo < ueps:
            break
        mid = (lo + hi)/2
        if mid <= lo or mid >= hi:
            break
        c = math.sqrt(max(0.0, lm*lm + a*a - 2*lm*a*math.cos(mid)))
        if c < lc:
            lo = mid
        else:
            hi = mid
    return (lo + hi)/2


def triangle_from_median_search(inst: TriangleInstance, leps: float=DEFAULT_LEPS,
                                ueps: float=DEFAULT_UEPS) -> Triangle:
    """
    Build the same triangle as triangle_from_median_closed with two nested
    bisections:  the outer one on the length 2a of BC over (0, LMAX] with
    LMAX = 2*(lm + max(lb, lc)), the inner one on the angle AMB.  A length is
    too small when lm + a < lc or lm + a < lb, or when the angle search cannot
    reach lc with a < lm; otherwise it is steered by comparing
    b' = sqrt(lm^2 + a^2 - 2 lm a cos(pi - alpha)) with lb.  The result is
    checked against the requested lengths and NoTriangleError is raised if
    they are not reproduced.  Runs in O(log(LMAX/leps) * log(pi/ueps)).
    """

    inst = TriangleInstance(*(float(v) for v in inst))
    _check_lengths(inst)
    lb, lc, lm = inst

    lo, hi = 0.0, 2*(lm + max(lb, lc))
    for _ in range(_MAX_BISECTIONS):
        if hi - lo < leps:
            break
        mid = (lo + hi)/2
        if mid <= lo or mid >= hi:
            break
        a = mid/2

        if lm + a < lc or lm + a < lb:
            too_small = True
        elif abs(lm - a) > lc:
            ## The angle search cannot reach lc at all
            too_small = (a < lm)
        else:
            alpha = _search_angle(a, lm, lc, ueps)
            b = math.sqrt(max(0.0, lm*lm + a*a - 2*lm*a*math.cos(math.pi - alpha)))
            too_small = (b < lb)

        if too_small:
            lo = mid
        else:
            hi = mid

    a = (lo + hi)/4
    if a <= max(leps, 1e-9*lm):
        raise NoTriangleError(f"No triangle with lb={lb}, lc={lc}, lm={lm}: BC would have length zero")
    alpha = _search_angle(a, lm, lc, ueps)
    triangle = _place(a, lm, math.cos(alpha))

    ## Verify the construction reproduces the requested lengths
    A, B, C = triangle
    M = ((B.x + C.x)/2, (B.y + C.y)/2)
    tol = max(1e-6, 4*(leps + ueps*lm))
    for measured,wanted in ((math.dist(A, B), lc), (math.dist(A, C), lb), (math.dist(A, M), lm)):
        if abs(measured - wanted) > tol*max(1.0, wanted):
            raise NoTriangleError(f"No triangle with lb={lb}, lc={lc}, lm={lm}")

    if abs(math.cos(alpha)) >= 1 - 1e-12:
        warnings.warn(f"Triangle with lb={lb}, lc={lc}, lm={lm} is degenerate (collinear)",
                      DegenerateTriangleWarning)
    return triangle
