class ErrorMessages:
    # Spaces
    INVALID_EXPONENT = "Exponent p must satisfy 1 < p < inf"
    INVALID_WEIGHTS = "Weights must be strictly positive and of length dim"
    INVALID_DIMENSION = "Dimension must be a positive integer"
    DIMENSION_MISMATCH = "Dimension mismatch"
    SPACE_MISMATCH = "Arguments belong to different spaces"
    CONJUGATE_MISMATCH = "Conjugate exponent check failed"

    # Solver
    EMPTY_PROBLEM = "At least one constraint functional is required"
    ZERO_FUNCTIONAL = "Constraint functionals must be nonzero"
    TARGET_LENGTH = "Number of targets must equal the number of functionals"
    INFEASIBLE = "Constraints are inconsistent"
    NON_CONVERGENCE = "Solver did not reach the requested tolerance"
    NULL_SPACE_TOO_LARGE = "Null-space dimension exceeds the oracle limit"
    COMPLEX_UNSUPPORTED = "Operation is only defined for real spaces"
    INVALID_LAMBDA = "Regularisation parameter must be positive"
    LAMBDAS_NOT_DECREASING = "Lambda list must be strictly decreasing and positive"

    # Regularisers
    NON_MONOTONE_TABLE = "Custom table must be nondecreasing"
    INVALID_TABLE = "Custom table needs increasing knots starting at 0 and matching values"
    NOT_ADMISSIBLE = "Regulariser does not claim admissibility with strictly increasing h"
    NO_REGULARISERS = "At least one regulariser is required"
    EVALUATION_FAILED = "Regulariser evaluation failed"
    COORD_OUT_OF_RANGE = "Coordinate index out of range"
    NOT_UNIT_DIRECTION = "Direction must have unit norm"
    NEGATIVE_RADIUS = "Radius s must be non-negative"
    QUADRATURE_ORDER = "Quadrature order must be at least 2"
    ZERO_ELEMENT = "Element must be nonzero"
    LAMBDA_NOT_ABOVE_ONE = "Walk factor lambda must exceed 1"
    BRACKET_NOT_FOUND = "No sign change found below the guaranteed bound"
    DEPENDENT_BASIS = "Subspace basis must be linearly independent"

    # RKBS
    INVALID_NODE_COUNT = "Node count must be at least 2"
    INVALID_GRID = "Grid must lie in [-1/2, 1/2], be symmetric and carry weights summing to 1"
    IMAG_TOO_LARGE = "Imaginary part exceeds quadrature tolerance"
    DUPLICATE_POINTS = "Interpolation points must be distinct"

    # Non-reflexive demo
    TRUNCATION_TOO_SHORT = "Truncation length must be at least 2"
    ZERO_COEFFICIENTS = "Coefficients (c1, c2) must not both vanish"

    # CLI
    SCHEMA_INVALID = "Invalid input file"
    FILE_UNREADABLE = "Cannot read file"
    CERTIFICATE_MISMATCH = "Stored residuals disagree with recomputed residuals"
    CERTIFICATE_FAILED = "Certificate does not verify"
    REGULARISER_DEPENDENT = "Solutions differ across regularisers"

class SuccessMessages:
    CERTIFICATE_WRITTEN = "Certificate written"
    CERTIFICATE_VERIFIED = "Certificate verified"
    REPORT_WRITTEN = "Report written"
    TABLE_WRITTEN = "Table written"

class ExitCodes:
    OK = 0
    USAGE = 1
    INFEASIBLE = 2
    NON_CONVERGENCE = 3
    COUNTEREXAMPLE = 4

class Tolerances:
    RANK = 1e-10
    CONJUGATE = 1e-15
    TANGENCY = 1e-10
    UNIT_NORM = 1e-10
    KERNEL_IMAG = 1e-8
    WEIGHT_SUM = 1e-12
    CERTIFICATE_MATCH = 1e-12
    ORACLE_NULL_DIM = 3
