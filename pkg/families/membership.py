from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator

from graph_core.graph_interface import Bipartition, Graph, bipartition_of, is_connected


class FailureReason(str, Enum):
    NOT_CONNECTED = "not connected"
    NOT_BIPARTITE = "not bipartite"
    A_SIDE_NOT_D_REGULAR = "A-side not d-regular"
    B_SIDE_NOT_REGULAR = "B-side not regular"
    SIZE_GAP_MISMATCH = "size gap mismatch"


class MembershipReport(BaseModel):
    """Outcome of deciding membership in the family for some (d, k).

    ``bipartition`` lists the degree-d side A as ``side_a``.
    """
    model_config = ConfigDict(frozen=True)

    is_member: bool
    bipartition: Optional[Bipartition] = None
    d_found: Optional[int] = None
    k_found: Optional[int] = None
    failure_reason: Optional[FailureReason] = None

    @model_validator(mode="after")
    def _consistent(self) -> "MembershipReport":
        if self.is_member != (self.failure_reason is None):
            raise ValueError("is_member must hold exactly when no failure reason is given")
        if self.is_member and (self.d_found is None or self.k_found is None):
            raise ValueError("Members must report d and k")
        return self


def _fail(reason: FailureReason, bipartition: Optional[Bipartition] = None) -> MembershipReport:
    return MembershipReport(is_member=False, bipartition=bipartition, failure_reason=reason)


def membership_report(g: Graph, d: Optional[int] = None, k: Optional[int] = None) -> MembershipReport:
    """Decide membership, inferring (d, k) unless they are given.

    A is the larger side; with equal sides the side holding vertex 0 is A.
    """
    if g.n == 0 or not is_connected(g):
        return _fail(FailureReason.NOT_CONNECTED)
    found = bipartition_of(g)
    if found is None:
        return _fail(FailureReason.NOT_BIPARTITE)

    side_a, side_b = found.side_a, found.side_b
    if len(side_b) > len(side_a):
        side_a, side_b = side_b, side_a
    oriented = Bipartition(side_a=side_a, side_b=side_b)

    a_degrees = {g.degree(v) for v in side_a}
    b_degrees = {g.degree(v) for v in side_b}
    if len(a_degrees) != 1 or 0 in a_degrees or (d is not None and a_degrees != {d}):
        return _fail(FailureReason.A_SIDE_NOT_D_REGULAR, oriented)
    if len(b_degrees) != 1:
        return _fail(FailureReason.B_SIDE_NOT_REGULAR, oriented)
    gap = len(side_a) - len(side_b)
    if k is not None and gap != k:
        return _fail(FailureReason.SIZE_GAP_MISMATCH, oriented)
    return MembershipReport(is_member=True, bipartition=oriented, d_found=a_degrees.pop(), k_found=gap)
