import json
import re
from dataclasses import dataclass

from ..core.errors import UnsupportedTypeError
from . import constants

kLabelPattern = re.compile(r"^([A-Ga-g])(\d+)~([123])$")


def _rank_of(family: str, n: int, twist: int) -> int:
    if twist == 1:
        minimum = {
            constants.FAMILY_A: 1,
            constants.FAMILY_B: 3,
            constants.FAMILY_C: 2,
            constants.FAMILY_D: 4,
        }
        if family in minimum:
            if n < minimum[family]:
                return 0
            return n
        if family == constants.FAMILY_E and n in (6, 7, 8):
            return n
        if family == constants.FAMILY_F and n == 4:
            return 4
        if family == constants.FAMILY_G and n == 2:
            return 2
        return 0

    if twist == 2:
        if family == constants.FAMILY_A:
            if n % 2 == 0 and n >= 2:
                return n // 2
            # A_3^(2) coincides with D_3^(2)
            if n % 2 == 1 and n >= 5:
                return (n + 1) // 2
            return 0
        if family == constants.FAMILY_D and n >= 3:
            return n - 1
        if family == constants.FAMILY_E and n == 6:
            return 4
        return 0

    if family == constants.FAMILY_D and n == 4:
        return 2
    return 0


@dataclass(frozen=True)
class AffineType:
    family: str
    n: int
    twist: int
    rank: int

    @classmethod
    def parse(cls, label: str) -> "AffineType":
        match = kLabelPattern.match(label.strip()) if label is not None else None
        if match is None:
            raise UnsupportedTypeError("malformed affine type label. [label={}]".format(label))

        family = match.group(1).upper()
        n = int(match.group(2))
        twist = int(match.group(3))

        rank = _rank_of(family, n, twist)
        if rank == 0:
            raise UnsupportedTypeError("unknown affine type. [label={}]".format(label))
        if rank > constants.MAX_RANK:
            raise UnsupportedTypeError("affine type rank exceeds support. [label={}] [rank={}] [max_rank={}]".format(
                label, rank, constants.MAX_RANK))

        return cls(family=family, n=n, twist=twist, rank=rank)

    @property
    def label(self) -> str:
        return "{}{}{}{}".format(self.family, self.n, constants.LABEL_SEPARATOR, self.twist)

    @property
    def nontwisted(self) -> bool:
        return self.twist == 1

    @property
    def is_a_even_twisted(self) -> bool:
        return self.family == constants.FAMILY_A and self.twist == 2 and self.n % 2 == 0

    @property
    def get_dict(self):
        return {
            "type": self.label,
            "rank": self.rank,
        }

    @property
    def get_json(self):
        return json.dumps(self.get_dict)

    def __str__(self):
        return self.label
