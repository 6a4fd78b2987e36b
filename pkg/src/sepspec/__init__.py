"""Spectral separability criteria for bipartite quantum states.

Region tests on spectra (theorem 1 region, purity ball, Verstraete region,
theorem 2, Gurvits-Barnum), the gap representation, the Wootters operator and
the modulus of separability for two qubits.
"""

from .criteria import (evaluate_all, gurvits_barnum, region_a, region_b, region_c,
                       theorem2)
from .errors import SepspecError
from .gap import (GapRepresentation, PVector, gap_decompose, proposition_check,
                  theorem1_from_proposition, theorem2_from_proposition, two_qubit_lhat,
                  vidal_tarrach)
from .io import parse_spectrum, parse_state, write_report, write_spectrum, write_state
from .kernels import BACKEND
from .linalg import conj_entrywise, eig_hermitian, kron, partial_transpose, sqrt_psd
from .robustness import (ModulusResult, criterion2_check, lhat_constants, modulus,
                         modulus_bisect, segment_state, vidal_tarrach_floor)
from .sampling import (SampleConfig, haar_unitary, spectrum_in_region, spectrum_uniform,
                       state_with_spectrum)
from .states import (CriteriaReport, DensityMatrix, RegionVerdict, Spectrum, make_density,
                     maximally_mixed, purity, spectrum_of)
from .wootters import (Rank2Analysis, WoottersResult, rank2_closed_form,
                       separability_threshold, w2_matrix, wootters_check, wootters_operator,
                       zeta_pm)

__version__ = "0.1.0"
