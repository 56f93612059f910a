from hamcomp.models.graph import Graph, EdgeStream
from hamcomp.models.partition import CorePartition, ABComponent, Colour
from hamcomp.models.cover import CoverResult, CoverMethod, MuPrime
from hamcomp.models.motifs import MotifCounts
from hamcomp.models.estimator import LocalCore, EstimatorReport
from hamcomp.models.certificate import CompletionCertificate, CertificateStatus, EngineResult
from hamcomp.models.oracle import OracleReport
from hamcomp.models.trace import ProcessTrace, TraceRecord
from hamcomp.models.experiment import ExperimentConfig

__all__ = [
    'Graph',
    'EdgeStream',
    'CorePartition',
    'ABComponent',
    'Colour',
    'CoverResult',
    'CoverMethod',
    'MuPrime',
    'MotifCounts',
    'LocalCore',
    'EstimatorReport',
    'CompletionCertificate',
    'CertificateStatus',
    'EngineResult',
    'OracleReport',
    'ProcessTrace',
    'TraceRecord',
    'ExperimentConfig'
]
