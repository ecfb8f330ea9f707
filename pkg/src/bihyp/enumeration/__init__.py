from .canon import CanonicalForm, canonical_form
from .certificate import IncompleteCertificateError, M3Certificate, m3_sweep_specs, verify_m3
from .generate import Orderly, count_classes_burnside
from .store import ContradictionError, VerdictRecord, VerdictStore
from .sweep import SweepSpec, SweepSummary, SweepTimeout, enumerate_bihypergraphs, run_sweep

__all__ = [
    "CanonicalForm",
    "ContradictionError",
    "IncompleteCertificateError",
    "M3Certificate",
    "Orderly",
    "SweepSpec",
    "SweepSummary",
    "SweepTimeout",
    "VerdictRecord",
    "VerdictStore",
    "canonical_form",
    "count_classes_burnside",
    "enumerate_bihypergraphs",
    "m3_sweep_specs",
    "run_sweep",
    "verify_m3",
]
