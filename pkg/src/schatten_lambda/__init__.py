"""Lambda function and extreme-point decompositions on Schatten unit balls.

Core routines: a hand-rolled one-sided Jacobi SVD with deterministic sign and
ordering conventions, closed-form evaluation of the lambda function on the
trace-norm and operator-norm balls (plus the ell_1 / ell_inf sequence
analogues), constructive witnesses a = t e + (1 - t) y with e a rank-one
partial isometry and y in the unit ball, and independent brute-force /
randomized oracles for validating every closed form.
"""

from .errors import (
    DegenerateInputError,
    FormatError,
    InvalidInputError,
    InvalidParameterError,
    OutsideUnitBallError,
    VerificationError,
)
from .forms import (
    AmenableTriplet,
    LambdaResult,
    MinRankOne,
    attaining_decomposition,
    counterexample_sequence,
    greedy_decomposition,
    invertibility_margin,
    lambda_dispatch,
    lambda_ell1,
    lambda_ellinf,
    lambda_operator_norm,
    lambda_schatten_p,
    lambda_trace_class,
    min_rank_one_distance,
)
from .interchange import load_matrix, matrix_from_dict, matrix_to_dict, save_matrix
from .linalg import (
    EigenEnumeration,
    SingularSystem,
    eigen_enumeration,
    hermitian_eig,
    hermitian_eigenvalues,
    orthogonality_defect,
    rank_one,
    schatten_norm,
    singular_values,
    svd,
    wielandt_dilation,
)
from .oracle import (
    AmenabilityReport,
    BruteForceResult,
    CampaignSummary,
    SearchBudget,
    SlackReport,
    amenability_check,
    brute_force_lambda,
    fuzz_campaign,
    markus_singular_slack,
    markus_slack,
    mirsky_slack,
    wielandt_match,
)

__version__ = "0.1.0"

__all__ = [
    "AmenabilityReport",
    "AmenableTriplet",
    "BruteForceResult",
    "CampaignSummary",
    "DegenerateInputError",
    "EigenEnumeration",
    "FormatError",
    "InvalidInputError",
    "InvalidParameterError",
    "LambdaResult",
    "MinRankOne",
    "OutsideUnitBallError",
    "SearchBudget",
    "SingularSystem",
    "SlackReport",
    "VerificationError",
    "__version__",
    "amenability_check",
    "attaining_decomposition",
    "brute_force_lambda",
    "counterexample_sequence",
    "eigen_enumeration",
    "fuzz_campaign",
    "greedy_decomposition",
    "hermitian_eig",
    "hermitian_eigenvalues",
    "invertibility_margin",
    "lambda_dispatch",
    "lambda_ell1",
    "lambda_ellinf",
    "lambda_operator_norm",
    "lambda_schatten_p",
    "lambda_trace_class",
    "load_matrix",
    "markus_singular_slack",
    "markus_slack",
    "matrix_from_dict",
    "matrix_to_dict",
    "min_rank_one_distance",
    "mirsky_slack",
    "orthogonality_defect",
    "rank_one",
    "save_matrix",
    "schatten_norm",
    "singular_values",
    "svd",
    "wielandt_dilation",
    "wielandt_match",
]
