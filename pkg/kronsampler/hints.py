import os
import typing

import numpy as np

if typing.TYPE_CHECKING:
    from .linalg import IndexSet
    from .types import FactorMatrix

MatrixLike = typing.Union[np.ndarray, typing.Sequence[typing.Sequence[float]]]
VectorLike = typing.Union[np.ndarray, typing.Sequence[float]]

FactorLike = typing.Union['FactorMatrix', MatrixLike]
FactorsLike = typing.Sequence[FactorLike]

IndexLike = typing.Union['IndexSet', typing.Iterable[int]]

SeedLike = typing.Optional[typing.Union[int, np.random.Generator]]

# 'fp' or 'mse'
Objective = str

LocalPath = typing.Union[str, os.PathLike]

# Called with (done, total) as benchmark trials finish
ProgressCallback = typing.Callable[[int, int], None]
