"""
This package defines clients as subclasses of others, and then a single
`kronsampler.client.samplingclient.SamplingClient` which is subclass of
them all to provide the final unified interface while the methods can live
in different subclasses to be more maintainable.

The ABC is `kronsampler.client.samplingbaseclient.SamplingBaseClient` and
the first implementor is `kronsampler.client.selection.SelectionMethods`,
since every other method evaluates or builds on a selection.
"""
from .samplingbaseclient import SamplingBaseClient
from .selection import SelectionMethods  # Required for everything
from .evaluation import EvaluationMethods  # Required for benchmarks
from .bounds import BoundMethods  # Required for evaluation with bounds
from .reconstruction import ReconstructionMethods, ImageResult
from .bench import BenchMethods, BenchResult
from .samplingclient import SamplingClient
