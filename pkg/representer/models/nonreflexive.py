from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple


@dataclass(frozen=True)
class L1Truncation:
    """
    First n coordinates of L1 = (1/2, 0, 3/4, 0, ...) and L2 = (0, 2/3, 0, 4/5, ...).

    Entries are exact fractions stored 0-based; entry k holds coordinate i = k + 1.
    """
    n: int
    L1: Tuple[Fraction, ...]
    L2: Tuple[Fraction, ...]


@dataclass(frozen=True)
class NormingAnalysis:
    sup_norm: Fraction
    # 1-based, smallest maximiser
    attaining_index: int
    gap_to_limit: Fraction


@dataclass(frozen=True)
class SpanScanRow:
    n: int
    c1: Fraction
    c2: Fraction
    analysis: NormingAnalysis


@dataclass(frozen=True)
class SpanScanReport:
    c1: Fraction
    c2: Fraction
    rows: List[SpanScanRow]
    escaping: bool

    @property
    def indices(self) -> List[int]:
        return [row.analysis.attaining_index for row in self.rows]
