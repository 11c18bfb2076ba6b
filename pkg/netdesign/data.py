import gzip

from typing import Iterator, List, Optional, TextIO, Tuple

from .graph import Multigraph
from .matching import BipartiteGraph
from .flow import FlowNetwork
from .geometry import PolygonInstance
from .typehints import FilenameOrFile
from .util import format_scaled, parse_decimal, parse_integer, scale_decimals

__version__ = '0.1'
__all__ = ['FormatError', 'read_bipartite', 'read_multigraph', 'read_flow',
           'read_polygon', 'write_bipartite', 'write_multigraph', 'write_flow',
           'write_polygon']


class FormatError(ValueError):
    """
    Malformed input file.  The message starts with the offending line number.
    """

    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        ValueError.__init__(self, f"line {lineno}: {message}")


class DummyFileOpener(object):
    """
    Wrapper class to make it easier to pass in a filename or open file handle.
    """

    def __init__(self, fh: TextIO, mode: Optional[str]=None):
        self._fh = fh

    def __enter__(self):
        return self._fh

    def __exit__(self, exc_type, exc_value, exc_tb):
        pass


def _opener(filename_or_fh: FilenameOrFile, mode: str):
    if isinstance(filename_or_fh, str):
        if filename_or_fh.lower().endswith('.gz'):
            return gzip.open(filename_or_fh, mode+'t', encoding='utf-8')
        return open(filename_or_fh, mode, encoding='utf-8')
    return DummyFileOpener(filename_or_fh)


class _Records(object):
    """
    Iterate over the non-empty lines of a file as (line number, tokens) with
    '#' comments removed.
    """

    def __init__(self, fh: TextIO):
        self._lines: Iterator[Tuple[int, List[str]]] = self._scan(fh)
        self.lineno = 0

    @staticmethod
    def _scan(fh):
        for lineno,line in enumerate(fh, 1):
            tokens = line.split('#', 1)[0].split()
            if tokens:
                yield lineno, tokens

    def next(self, what: str, counts: Tuple[int, ...]) -> List[str]:
        try:
            self.lineno, tokens = next(self._lines)
        except StopIteration:
            raise FormatError(self.lineno+1, f"unexpected end of file, expected {what}")
        if len(tokens) not in counts:
            expected = ' or '.join(str(c) for c in counts)
            raise FormatError(self.lineno, f"expected {expected} fields for {what}, found {len(tokens)}")
        return tokens

    def integers(self, tokens: List[str]) -> List[int]:
        try:
            return [parse_integer(token) for token in tokens]
        except ValueError as e:
            raise FormatError(self.lineno, str(e))

    def finish(self):
        for lineno,tokens in self._lines:
            raise FormatError(lineno, f"unexpected trailing data '{' '.join(tokens)}'")


def _scaled_costs(tokens: List[Optional[str]], linenos: List[int]) -> Tuple[List[Optional[int]], int]:
    present = [(token, lineno) for token,lineno in zip(tokens, linenos) if token is not None]
    for token,lineno in present:
        try:
            parse_decimal(token)
        except ValueError as e:
            raise FormatError(lineno, str(e))

    scaled, scale = scale_decimals([token for token,_ in present])
    values = iter(scaled)
    return [next(values) if token is not None else None for token in tokens], scale


def read_bipartite(filename_or_fh: FilenameOrFile, weighted: bool=False) -> BipartiteGraph:
    """
    Read a bipartite multigraph:  a line 'nL nR m' followed by m lines
    'u v [cost]'.  Costs are required when `weighted` is True.  Decimal costs
    are scaled to integers by a shared power of ten (kept as cost_scale).
    """

    with _opener(filename_or_fh, 'r') as fh:
        records = _Records(fh)
        nL, nR, m = records.integers(records.next('the header "nL nR m"', (3,)))
        if nL < 0 or nR < 0 or m < 0:
            raise FormatError(records.lineno, "vertex and edge counts must be non-negative")

        ends, costs, linenos = [], [], []
        for i in range(m):
            tokens = records.next(f'edge {i}', (3,) if weighted else (2, 3))
            u, v = records.integers(tokens[:2])
            if not 1 <= u <= nL:
                raise FormatError(records.lineno, f"left vertex {u} out of range 1..{nL}")
            if not 1 <= v <= nR:
                raise FormatError(records.lineno, f"right vertex {v} out of range 1..{nR}")
            ends.append((u, v))
            costs.append(tokens[2] if len(tokens) > 2 else None)
            linenos.append(records.lineno)
        records.finish()

    if weighted:
        scaled, scale = _scaled_costs(costs, linenos)
        for value,lineno in zip(scaled, linenos):
            if value < 0:
                raise FormatError(lineno, "edge costs must be non-negative")
        return BipartiteGraph(nL, nR, [(u, v, c) for (u,v),c in zip(ends, scaled)], cost_scale=scale)
    return BipartiteGraph(nL, nR, ends)


def read_multigraph(filename_or_fh: FilenameOrFile, costs: bool=True) -> Multigraph:
    """
    Read an undirected multigraph:  a line 'n m' followed by m lines
    'u v cost' ('u v' when `costs` is False).  Decimal costs are scaled to
    integers by a shared power of ten (kept as cost_scale).
    """

    with _opener(filename_or_fh, 'r') as fh:
        records = _Records(fh)
        n, m = records.integers(records.next('the header "n m"', (2,)))
        if n < 0 or m < 0:
            raise FormatError(records.lineno, "vertex and edge counts must be non-negative")

        ends, tokens_cost, linenos = [], [], []
        for i in range(m):
            tokens = records.next(f'edge {i}', (3,) if costs else (2, 3))
            u, v = records.integers(tokens[:2])
            for x in (u, v):
                if not 1 <= x <= n:
                    raise FormatError(records.lineno, f"vertex {x} out of range 1..{n}")
            ends.append((u, v))
            tokens_cost.append(tokens[2] if costs else None)
            linenos.append(records.lineno)
        records.finish()

    if costs:
        scaled, scale = _scaled_costs(tokens_cost, linenos)
        return Multigraph(n, [(u, v, c) for (u,v),c in zip(ends, scaled)], cost_scale=scale)
    return Multigraph(n, ends)


def read_flow(filename_or_fh: FilenameOrFile, directed: bool=True) -> FlowNetwork:
    """
    Read a flow network:  a line 'n m nS nT', a line with the nS sources, a
    line with the nT sinks, then m lines 'u v cap' with integer capacities.
    """

    with _opener(filename_or_fh, 'r') as fh:
        records = _Records(fh)
        n, m, nS, nT = records.integers(records.next('the header "n m nS nT"', (4,)))
        if min(n, m, nS, nT) < 0:
            raise FormatError(records.lineno, "counts must be non-negative")
        sources = records.integers(records.next('the source list', (nS,)))
        sources_line = records.lineno
        sinks = records.integers(records.next('the sink list', (nT,)))
        sinks_line = records.lineno

        arcs = []
        for i in range(m):
            u, v, cap = records.integers(records.next(f'arc {i}', (3,)))
            for x in (u, v):
                if not 1 <= x <= n:
                    raise FormatError(records.lineno, f"vertex {x} out of range 1..{n}")
            if cap < 0:
                raise FormatError(records.lineno, "capacities must be non-negative")
            arcs.append((u, v, cap))
        records.finish()

    for x in sources:
        if not 1 <= x <= n:
            raise FormatError(sources_line, f"source {x} out of range 1..{n}")
    for x in sinks:
        if not 1 <= x <= n:
            raise FormatError(sinks_line, f"sink {x} out of range 1..{n}")
    try:
        return FlowNetwork(n, arcs, sources, sinks, directed=directed)
    except ValueError as e:
        raise FormatError(sinks_line, str(e))


def read_polygon(filename_or_fh: FilenameOrFile) -> PolygonInstance:
    """
    Read a polygon reconstruction instance:  a line 'N' followed by N lines
    'xp yp t'.
    """

    with _opener(filename_or_fh, 'r') as fh:
        records = _Records(fh)
        N, = records.integers(records.next('the header "N"', (1,)))
        if N < 3:
            raise FormatError(records.lineno, f"a polygon needs at least 3 vertices, found {N}")

        points, ratios = [], []
        for i in range(N):
            tokens = records.next(f'point {i+1}', (3,))
            try:
                xp, yp, t = (float(parse_decimal(token)) for token in tokens)
            except ValueError as e:
                raise FormatError(records.lineno, str(e))
            points.append((xp, yp))
            ratios.append(t)
        records.finish()

    return PolygonInstance(points, ratios)


def write_bipartite(g: BipartiteGraph, filename_or_fh: FilenameOrFile):
    """
    Write a bipartite multigraph in the format read by read_bipartite.
    """

    with _opener(filename_or_fh, 'w') as fh:
        fh.write(f"{g.nL} {g.nR} {g.m}\n")
        for edge in g.edges:
            if edge.cost is None:
                fh.write(f"{edge.u} {edge.v}\n")
            else:
                fh.write(f"{edge.u} {edge.v} {format_scaled(edge.cost, g.cost_scale)}\n")


def write_multigraph(g: Multigraph, filename_or_fh: FilenameOrFile):
    """
    Write a multigraph in the format read by read_multigraph.
    """

    with _opener(filename_or_fh, 'w') as fh:
        fh.write(f"{g.n} {g.m}\n")
        for edge in g.edges:
            if edge.cost is None:
                fh.write(f"{edge.u} {edge.v}\n")
            else:
                fh.write(f"{edge.u} {edge.v} {format_scaled(edge.cost, g.cost_scale)}\n")


def write_flow(net: FlowNetwork, filename_or_fh: FilenameOrFile):
    """
    Write a flow network in the format read by read_flow.
    """

    with _opener(filename_or_fh, 'w') as fh:
        fh.write(f"{net.n} {net.m} {len(net.sources)} {len(net.sinks)}\n")
        fh.write(' '.join(str(s) for s in net.sources)+'\n')
        fh.write(' '.join(str(t) for t in net.sinks)+'\n')
        for arc in net.arcs:
            fh.write(f"{arc.u} {arc.v} {arc.cap}\n")


def write_polygon(inst: PolygonInstance, filename_or_fh: FilenameOrFile):
    """
    Write a polygon instance in the format read by read_polygon.  Values are
    written with repr() so they read back exactly.
    """

    with _opener(filename_or_fh, 'w') as fh:
        fh.write(f"{len(inst.ratios)}\n")
        for (xp,yp),t in zip(inst.points, inst.ratios):
            fh.write(f"{float(xp)!r} {float(yp)!r} {float(t)!r}\n")
