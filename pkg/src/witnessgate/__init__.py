"""witnessgate: exact block-positivity and entanglement-witness decisions.

Two-qubit operators over Q(i) are classified exactly as positive
semidefinite, entanglement witnesses, or not block-positive with a
verified product-vector certificate.  For qudit-qubit systems the package
provides an exact necessary criterion (trace plus order-2 minors) and a
sufficient one (critical-point elimination for higher minors).
"""
from .bipartite import (BipartiteHermitian, EigenSignature, HermiticityError,
                        char_poly, eigen_signature, hermitian_psd)
from .families import build_family, family_E, family_F
from .groebner import (GroebnerBasis, GroebnerOptions, MultiPoly,
                       ResourceCapExceeded, buchberger, lagrange_system,
                       minors_sum, sufficient_block_positive)
from .oracle import OracleEstimate, estimate_mu
from .quartic import (GBundle, Quartic, build_chi, build_g_bundle,
                      build_lambda, quartic_nonneg, quartic_nonneg_symmetric,
                      reverse_quartic)
from .quditqubit import (NecessaryResult, PairSelector,
                         necessary_block_positive, pair_c_coefficients)
from .scalars import (GaussRational, Q, QuadSurd, RadicandMismatch, Sign,
                      sign_of, surd_sign)
from .unipoly import (EndpointRootError, Interval, SturmChain, UniPoly,
                      cauchy_bound, count_roots, eval_alternative,
                      eval_alternative_all_reals, generate_mesh,
                      multiplicity_sequence, nonneg, odd_multiplicity_part,
                      poly_gcd, precedence, squarefree_part, sturm_chain)
from .witness2x2 import (CCoefficients, DetFailure, DetResult,
                         ProductCertificate, TraceData, Verdict, VerdictKind,
                         build_V, build_W, c_coefficients, classify,
                         det_nonneg_all_w, extract_certificate,
                         trace_condition, trace_tau_xi,
                         weak_optimality_necessary)

__version__ = "0.1.0"
