from .client.samplingclient import SamplingClient
from .types import FactorMatrix, ProblemInstance, Selection
from .linalg import IndexSet
from . import version, errors, helpers, samplers, bounds, recon, instances, suites

__version__ = version.__version__

__all__ = [
    'SamplingClient', 'FactorMatrix', 'ProblemInstance', 'Selection',
    'IndexSet', 'errors', 'helpers', 'samplers', 'bounds', 'recon',
    'instances', 'suites'
]
