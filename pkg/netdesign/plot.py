import numpy as np

from typing import Optional, Sequence, Tuple

from matplotlib.figure import Figure
from matplotlib import pyplot as plt

from .geometry import Triangle

__version__ = '0.1'
__all__ = ['plot_points', 'plot_polygon', 'plot_triangle']


def plot_points(points: Sequence[Tuple[float, float]], labels: Optional[Sequence[str]]=None,
                fig: Optional[Figure]=None) -> Figure:
    """
    Scatter plot of a balanced arrangement with every point labeled by its
    number (and weight, if `labels` is given).
    """

    xy = np.asarray(points, dtype=np.float64).reshape(-1, 2)

    if fig is None:
        fig = plt.figure()
    ax = fig.gca()

    ax.scatter(xy[:,0], xy[:,1], marker='o', color='C0', zorder=3)
    for i,(x,y) in enumerate(xy):
        text = f"{i+1}" if labels is None else f"{i+1} (w={labels[i]})"
        ax.annotate(text, (x, y), textcoords='offset points', xytext=(4, 4))
    ax.set_aspect('equal', adjustable='datalim')
    ax.set_xlabel('x')
    ax.set_ylabel('y')
    ax.set_title(f"Balanced arrangement, N={xy.shape[0]}")

    return fig


def plot_polygon(vertices: Sequence[Tuple[float, float]],
                 ratio_points: Optional[Sequence[Tuple[float, float]]]=None,
                 fig: Optional[Figure]=None) -> Figure:
    """
    Draw a closed polygon and, optionally, the ratio points it was
    reconstructed from.
    """

    v = np.asarray(vertices, dtype=np.float64).reshape(-1, 2)
    closed = np.vstack([v, v[:1]])

    if fig is None:
        fig = plt.figure()
    ax = fig.gca()

    ax.plot(closed[:,0], closed[:,1], linestyle='-', marker='o', color='C0', label='vertices')
    if ratio_points is not None:
        p = np.asarray(ratio_points, dtype=np.float64).reshape(-1, 2)
        ax.scatter(p[:,0], p[:,1], marker='x', color='C1', zorder=3, label='ratio points')
    ax.set_aspect('equal', adjustable='datalim')
    ax.legend(loc=0)
    ax.set_xlabel('x')
    ax.set_ylabel('y')
    ax.set_title(f"Reconstructed polygon, N={v.shape[0]}")

    return fig


def plot_triangle(triangle: Triangle, fig: Optional[Figure]=None) -> Figure:
    """
    Draw triangle ABC with the median from A to the midpoint of BC.
    """

    A, B, C = triangle
    M = ((B.x + C.x)/2, (B.y + C.y)/2)

    if fig is None:
        fig = plt.figure()
    ax = fig.gca()

    ax.plot([A.x, B.x, C.x, A.x], [A.y, B.y, C.y, A.y], linestyle='-', color='C0')
    ax.plot([A.x, M[0]], [A.y, M[1]], linestyle='--', color='C1', label='median')
    for name,(x,y) in (('A', A), ('B', B), ('C', C), ('M', M)):
        ax.annotate(name, (x, y), textcoords='offset points', xytext=(4, 4))
    ax.set_aspect('equal', adjustable='datalim')
    ax.legend(loc=0)
    ax.set_xlabel('x')
    ax.set_ylabel('y')

    return fig
