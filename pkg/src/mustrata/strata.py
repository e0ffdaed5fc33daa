"""Combinatorics of mu-strata.

Everything here is integer arithmetic on ascending partitions: the
prefix-sum order, stratum dimensions and codimensions, closures, extremal
types, the Hilbert-function dictionary and Hasse diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .errors import HilbertShapeError, PartitionError


def dim_R(ell: int) -> int:
    """Dimension of the space of binary forms of degree ``ell``."""
    return max(0, ell + 1)


def as_partition(parts) -> tuple:
    parts = tuple(int(x) for x in parts)
    if not parts:
        raise PartitionError("empty partition")
    if any(x < 1 for x in parts):
        raise PartitionError(f"partition {parts} has a part < 1")
    if list(parts) != sorted(parts):
        raise PartitionError(f"partition {parts} is not ascending")
    return parts


def partitions(total: int, length: int, min_part: int = 1):
    """Ascending ``length``-part partitions of ``total``, in lex order."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(min_part, total // length + 1):
        for rest in partitions(total - first, length - 1, first):
            yield (first,) + rest


def mu_leq(mu1, mu2) -> bool:
    """Prefix-sum (dominance) order on equal-length ascending partitions."""
    if len(mu1) != len(mu2):
        raise PartitionError(f"length mismatch: {tuple(mu1)} vs {tuple(mu2)}")
    return all(a <= b for a, b in zip(accumulate(mu1), accumulate(mu2)))


def gap_sum(mu) -> int:
    """sum over i > j of max(0, mu_i - mu_j - 1)."""
    return sum(max(0, mu[i] - mu[j] - 1) for i in range(len(mu)) for j in range(i))


def _check_range(mu, n, d):
    if len(mu) != d:
        raise PartitionError(f"{mu} does not have {d} parts")
    if not d <= sum(mu) <= n:
        raise PartitionError(f"|mu| = {sum(mu)} outside [{d}, {n}]")


def stratum_dim(mu, n: int, d: int) -> int:
    mu = as_partition(mu)
    _check_range(mu, n, d)
    return d * sum(mu) + d + n + 1 - gap_sum(mu)


def grass_codim(mu, n: int, d: int) -> int:
    """Codimension of the stratum, in the Grassmannian or in the space of tuples."""
    mu = as_partition(mu)
    _check_range(mu, n, d)
    return (n - sum(mu)) * d + gap_sum(mu)


def extremal_mu(n: int, d: int):
    if not n >= d >= 2:
        raise PartitionError(f"need n >= d >= 2, got n={n}, d={d}")
    k, r = divmod(n, d)
    mu_min = (1,) * (d - 1) + (n - d + 1,)
    mu_max = (k,) * (d - r) + (k + 1,) * r
    return mu_min, mu_max


def enumerate_mu_types(n: int, d: int, with_common_factor: bool = False):
    if not n >= d >= 2:
        raise PartitionError(f"need n >= d >= 2, got n={n}, d={d}")
    sizes = range(d, n + 1) if with_common_factor else (n,)
    return sorted(mu for size in sizes for mu in partitions(size, d))


def closure_set(mu, n: int, d: int, in_cp: bool = False):
    mu = as_partition(mu)
    _check_range(mu, n, d)
    pool = enumerate_mu_types(n, d, True) if in_cp else enumerate_mu_types(sum(mu), d)
    return [m for m in pool if mu_leq(m, mu)]


@dataclass(frozen=True)
class StratumDescriptor:
    mu: tuple
    n: int
    d: int
    dim: int
    codim: int

    @property
    def common_factor_degree(self) -> int:
        return self.n - sum(self.mu)

    @property
    def label(self) -> str:
        return "(" + ",".join(map(str, self.mu)) + ")"


def descriptor(mu, n, d) -> StratumDescriptor:
    mu = as_partition(mu)
    return StratumDescriptor(mu, n, d, stratum_dim(mu, n, d), grass_codim(mu, n, d))


@dataclass
class HasseDiagram:
    nodes: list
    edges: list  # (upper, lower) covering pairs of mu tuples

    def covers_of(self, mu):
        return [lo for up, lo in self.edges if up == tuple(mu)]

    def to_dot(self) -> str:
        lines = ["digraph strata {", "  rankdir=TB;"]
        for node in self.nodes:
            lines.append(f'  "{node.label}" [label="{node.label} dim={node.dim}"];')
        for up, lo in self.edges:
            lines.append(f'  "{_label(up)}" -> "{_label(lo)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "nodes": [
                {"mu": list(x.mu), "dim": x.dim, "codim": x.codim,
                 "commonFactorDegree": x.common_factor_degree}
                for x in self.nodes
            ],
            "edges": [[list(up), list(lo)] for up, lo in self.edges],
        }

    def to_text(self) -> str:
        out = []
        for node in self.nodes:
            below = ", ".join(_label(lo) for lo in self.covers_of(node.mu))
            out.append(f"{node.label} dim={node.dim}" + (f"  covers {below}" if below else ""))
        return "\n".join(out) + "\n"


def _label(mu):
    return "(" + ",".join(map(str, mu)) + ")"


def hasse_diagram(n: int, d: int, in_cp: bool = False) -> HasseDiagram:
    nodes = [descriptor(mu, n, d) for mu in enumerate_mu_types(n, d, in_cp)]
    nodes.sort(key=lambda x: (x.dim, x.mu), reverse=True)
    mus = [x.mu for x in nodes]
    below = {a: {b for b in mus if b != a and mu_leq(b, a)} for a in mus}
    edges = []
    for a in mus:
        for b in mus:
            if b in below[a] and not any(b in below[c] for c in below[a]):
                edges.append((a, b))
    return HasseDiagram(nodes, edges)


@dataclass(frozen=True)
class HilbertFunction:
    """Eventually constant function m -> H(m) on m >= 0.

    ``values[m]`` for ``m <= stabilization_degree``; ``values[-1]`` is the
    tail value, taken for every larger m as well.
    """

    values: tuple

    def __post_init__(self):
        vals = list(self.values)
        while len(vals) > 1 and vals[-2] == vals[-1]:
            vals.pop()
        object.__setattr__(self, "values", tuple(vals))

    @property
    def tail(self) -> int:
        return self.values[-1]

    @property
    def stabilization_degree(self) -> int:
        return len(self.values) - 1

    def __call__(self, m: int) -> int:
        if m < 0:
            raise ValueError("Hilbert functions start at degree 0")
        return self.values[m] if m < len(self.values) else self.values[-1]

    def upto(self, m: int):
        return [self(i) for i in range(m + 1)]

    def __ge__(self, other):
        top = max(self.stabilization_degree, other.stabilization_degree)
        return all(self(m) >= other(m) for m in range(top + 1))

    def __le__(self, other):
        return other >= self


def ideal_hilbert_value(mu, n: int, d: int, m: int) -> int:
    return dim_R(m) - (d + 1) * dim_R(m - n) + sum(dim_R(m - n - x) for x in mu)


def tail_hilbert_from_mu(mu, n: int, d: int) -> HilbertFunction:
    mu = as_partition(mu)
    _check_range(mu, n, d)
    top = n + max(mu)
    return HilbertFunction(tuple(ideal_hilbert_value(mu, n, d, m) for m in range(top + 1)))


def mu_from_hilbert(T: HilbertFunction, n: int, d: int):
    """Invert :func:`tail_hilbert_from_mu` using second differences past degree n."""
    if any(T(m) != m + 1 for m in range(n)):
        raise HilbertShapeError("T(m) must equal m+1 below degree n")
    if T(n) != n - d:
        raise HilbertShapeError(f"T(n) must equal n-d = {n - d}, got {T(n)}")
    top = max(T.stabilization_degree, n) + 1
    # e(n+j) = d - #{i : mu_i <= j}
    counts = [d - (T(n + j - 1) - T(n + j)) for j in range(1, top - n + 1)]
    if counts and (counts[-1] != d or any(b < a for a, b in zip(counts, counts[1:]))
                   or counts[0] < 0):
        raise HilbertShapeError("second differences are not those of a d-part partition")
    mu = []
    prev = 0
    for j, c in enumerate(counts, start=1):
        mu.extend([j] * (c - prev))
        prev = c
    mu = tuple(mu)
    if len(mu) != d or sum(mu) > n:
        raise HilbertShapeError("T is not the Hilbert function of any mu-type")
    if tail_hilbert_from_mu(mu, n, d) != T:
        raise HilbertShapeError("T is not the Hilbert function of any mu-type")
    return mu
