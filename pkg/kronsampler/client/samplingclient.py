from . import (
    SelectionMethods, EvaluationMethods, BoundMethods, ReconstructionMethods,
    BenchMethods, SamplingBaseClient
)


class SamplingClient(
    BenchMethods, ReconstructionMethods, BoundMethods, EvaluationMethods,
    SelectionMethods, SamplingBaseClient
):
    pass
