import logging
from typing import List, Optional

from sympy import factorint


class InvalidParamsError(ValueError):
    pass


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(factorint(n)) == 1


class BalancedParams:
    """
    Parameters of the balanced colored Tverberg setting:
    k = ceil((r-1)d/r), s = (r-1)d - r(k-1), m = (2r-1)(k+1).
    """

    def __init__(self, r: int, d: int, k: int, s: int, m: int) -> None:
        self.r = r
        self.d = d
        self.k = k
        self.s = s
        self.m = m
        if r * (k - 1) + s != (r - 1) * d:
            raise InvalidParamsError(f"r(k-1)+s should equal (r-1)d for {self}")
        if not 0 < s <= r:
            raise InvalidParamsError(f"s should lie in (0, r] for {self}")

    @property
    def colors(self) -> int:
        return self.k + 1

    @property
    def class_size(self) -> int:
        return 2 * self.r - 1

    @property
    def top_dimension(self) -> int:
        return self.r * self.k + self.s - 1

    @property
    def target_connectivity(self) -> int:
        return self.r * self.k + self.s - 2

    def to_json(self) -> dict:
        return {"r": self.r, "d": self.d, "k": self.k, "s": self.s, "m": self.m}

    def __eq__(self, other) -> bool:
        return isinstance(other, BalancedParams) and self.to_json() == other.to_json()

    def __repr__(self) -> str:
        return f"BalancedParams(r={self.r}, d={self.d}, k={self.k}, s={self.s}, m={self.m})"


def balanced_params(r: int, d: int) -> BalancedParams:
    if not is_prime_power(r):
        raise InvalidParamsError(f"r should be a prime power, got {r}")
    if d < 1:
        raise InvalidParamsError(f"d should be at least 1, got {d}")
    k = -(-(r - 1) * d // r)
    s = (r - 1) * d - r * (k - 1)
    return BalancedParams(r, d, k, s, (2 * r - 1) * (k + 1))


class VerifyParams:
    def __init__(self, framework_name: str) -> None:
        self.logger = logging.getLogger("forge")
        self.framework_name = framework_name
        self.r = None
        self.size_caps: Optional[List[int]] = None
        self.k = None
        self.s = None
        self.reverse = False
        self.seed = None

    def set_r(self, r: int):
        if r < 2:
            raise InvalidParamsError(f"The number of parts should be at least 2, got {r}")
        self.r = r

    def set_size_caps(self, caps: List[int]):
        if any(cap < 1 for cap in caps):
            raise InvalidParamsError(f"Part size caps should be positive, got {caps}")
        self.size_caps = list(caps)

    def set_dim_caps(self, k: int, s: int):
        if k < 0 or s < 0:
            raise InvalidParamsError(f"Dimension caps should be non-negative, got k={k}, s={s}")
        self.k = k
        self.s = s

    def set_reverse(self):
        self.reverse = True

    def set_seed(self, seed: int):
        self.seed = seed

    def to_json(self) -> dict:
        return {
            "framework": self.framework_name,
            "r": self.r,
            "size_caps": self.size_caps,
            "k": self.k,
            "s": self.s,
            "reverse": self.reverse,
        }
