from fractions import Fraction

from typing import Callable, Tuple, TextIO, Union

Cost = Union[int, Fraction]
VertexKey = Tuple[str, int]
FilenameOrFile = Union[str, TextIO]
ArcFilter = Callable[..., bool]
