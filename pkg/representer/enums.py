from enum import Enum

class ScalarField(str, Enum):
    real = "real"
    complex = "complex"

class LossKind(str, Enum):
    square = "square"
    absolute = "absolute"

class MonotoneKind(str, Enum):
    identity = "identity"
    square = "square"
    exp_minus_one = "exp-minus-one"
    table = "table"

class TableMode(str, Enum):
    linear = "linear"
    step = "step"

class Verdict(str, Enum):
    passed = "pass"
    counterexample = "counterexample"

class Evidence(str, Enum):
    # a pass is sampled evidence, a counterexample is a proof
    statistical = "statistical"
    proof = "proof"
