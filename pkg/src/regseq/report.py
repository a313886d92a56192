"""Outcome records shared by the decision procedure and the certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class Verdict(str, Enum):
    REGULAR = "Regular"
    NOT_REGULAR = "NotRegular"
    # a certificate whose hypotheses fail says nothing either way
    NOT_CERTIFIED = "NotCertified"


class Method(str, Enum):
    MACAULAY_RANK = "MacaulayRank"
    AP_CERTIFICATE = "APCertificate"
    NEAR_POWERS_CERTIFICATE = "NearPowersCertificate"
    NECESSARY_CONDITION_FAILED = "NecessaryConditionFailed"
    ROOT_OF_UNITY_WITNESS = "RootOfUnityWitness"


@dataclass
class RegularityReport:
    verdict: Verdict
    method: Method
    N: int | None = None
    p: int | None = None
    rank: int | None = None
    q: int | None = None
    notes: str = ""
    evidence: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.method is Method.MACAULAY_RANK:
            if self.rank is None or self.p is None:
                raise ValueError("a Macaulay report needs rank and p")
            if (self.verdict is Verdict.REGULAR) != (self.rank == self.p):
                raise ValueError("Macaulay verdict inconsistent with rank")

    @property
    def is_regular(self) -> bool | None:
        """True / False when decided, None when not certified."""
        if self.verdict is Verdict.NOT_CERTIFIED:
            return None
        return self.verdict is Verdict.REGULAR


class RegSeqError(ValueError):
    """Invalid input to one of the procedures."""


class MatrixTooLarge(RegSeqError):
    """The Macaulay matrix would exceed the configured row cap."""

    def __init__(self, p: int, max_p: int):
        self.p = p
        self.max_p = max_p
        super().__init__(f"Macaulay matrix has p = {p} rows, above the cap of {max_p}")


class SearchTooLarge(RegSeqError):
    """An exhaustive search would exceed its configured size."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"search space of {size} tuples exceeds the cap of {cap}")


class Inconclusive(ArithmeticError):
    """A rigorous comparison could not be decided at the allowed precision."""
