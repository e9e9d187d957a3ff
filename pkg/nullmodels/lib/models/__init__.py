from .graph import SimpleGraph, build_simple_graph, degree_histogram
from .schemas import PowerLawSpec, HrgParams, EcmOutcome, IrgOutcome, HrgOutcome, GraphSidecar
from .curves import (
    EpsilonRule,
    Binning,
    CurvePoint,
    DegreeCurve,
    AnndCurve,
    ClusteringCurve,
    BandResult,
    ContributionShare,
    FitResult,
    EnsembleRow,
    EnsembleSummary,
    FitReport,
)
from .experiment import ModelSpec, ExperimentConfig
from .prediction import TheoryPrediction, PredictedPoint

__all__ = [
    'SimpleGraph',
    'build_simple_graph',
    'degree_histogram',
    'PowerLawSpec',
    'HrgParams',
    'EcmOutcome',
    'IrgOutcome',
    'HrgOutcome',
    'GraphSidecar',
    'EpsilonRule',
    'Binning',
    'CurvePoint',
    'DegreeCurve',
    'AnndCurve',
    'ClusteringCurve',
    'BandResult',
    'ContributionShare',
    'FitResult',
    'EnsembleRow',
    'EnsembleSummary',
    'FitReport',
    'ModelSpec',
    'ExperimentConfig',
    'TheoryPrediction',
    'PredictedPoint'
]
