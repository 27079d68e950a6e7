"""ADE labels for du Val (rational double point) singularities.

A label names a finite subgroup of SU(2) together with the resolution data
of the corresponding quotient singularity C^2/G.  The stored parameter is
the family parameter n: type A_{n-1} is stored as n >= 1 (cyclic of order
n, with n = 1 the smooth point), type D_{n+2} as n >= 2 (binary dihedral of
order 4n), and types E6/E7/E8 store their own subscript.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidLabel

_LABEL_RE = re.compile(r"^([ADE])(\d+)$")

_E_DATA = {
    # subscript -> (node count, group order)
    6: (6, 24),
    7: (7, 48),
    8: (8, 120),
}


@dataclass(frozen=True, order=True)
class AdeLabel:
    kind: str
    parameter: int

    def __post_init__(self) -> None:
        if self.kind == "A":
            if self.parameter < 1:
                raise InvalidLabel(f"type A needs n >= 1, got n={self.parameter}")
        elif self.kind == "D":
            if self.parameter < 2:
                raise InvalidLabel(f"type D needs n >= 2, got n={self.parameter}")
        elif self.kind == "E":
            if self.parameter not in _E_DATA:
                raise InvalidLabel(f"type E subscript must be 6, 7 or 8, got {self.parameter}")
        else:
            raise InvalidLabel(f"unknown family {self.kind!r}")

    @property
    def subscript(self) -> int:
        """The Dynkin subscript: A_{n-1}, D_{n+2}, E_k."""
        if self.kind == "A":
            return self.parameter - 1
        if self.kind == "D":
            return self.parameter + 2
        return self.parameter

    @classmethod
    def from_string(cls, text: str) -> "AdeLabel":
        match = _LABEL_RE.match(text.strip()) if isinstance(text, str) else None
        if not match:
            raise InvalidLabel(f"not an ADE label: {text!r}")
        kind, sub = match.group(1), int(match.group(2))
        if kind == "A":
            return cls("A", sub + 1)
        if kind == "D":
            if sub < 4:
                raise InvalidLabel(f"type D subscript must be >= 4, got {sub}")
            return cls("D", sub - 2)
        return cls("E", sub)

    def __str__(self) -> str:
        return f"{self.kind}{self.subscript}"


@dataclass(frozen=True)
class AdeResolutionData:
    """Resolution data of the quotient singularity named by ``label``.

    ``node_count`` is the number of exceptional (-2)-curves in the minimal
    resolution (the number of Dynkin nodes), ``chi_exceptional`` the
    topological Euler number of the exceptional fiber (a tree of
    node_count spheres, so node_count + 1), and ``group_order`` the order
    of the finite subgroup of SU(2).
    """

    label: AdeLabel
    node_count: int
    group_order: int
    chi_exceptional: int


def resolution_data(label: AdeLabel) -> AdeResolutionData:
    n = label.parameter
    if label.kind == "A":
        nodes, order = n - 1, n
    elif label.kind == "D":
        nodes, order = n + 2, 4 * n
    else:
        nodes, order = _E_DATA[n]
    return AdeResolutionData(label, nodes, order, nodes + 1)
