from goldbach_toolkit.verifier.witness import Witness, goldbach_witness, build_AB
from goldbach_toolkit.verifier.report import VerificationReport
from goldbach_toolkit.verifier.runner import sweep_witnesses, verify_range, verify_shift_theorem

__all__ = [
    "Witness",
    "goldbach_witness",
    "build_AB",
    "VerificationReport",
    "sweep_witnesses",
    "verify_range",
    "verify_shift_theorem",
]
