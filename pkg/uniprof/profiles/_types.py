"""Profile value types.

Counts are Python integers; densities are a derived floating view.
"""

from dataclasses import dataclass
from math import comb

import numpy as np
from scipy.stats import norm

from ..exceptions import VerificationError

# two-sided 99% normal quantile
Z99 = float(norm.ppf(0.995))


@dataclass(frozen=True)
class Profile3:
    """Induced 3-vertex graph counts ``(N0, N1, N2, N3)``.

    ``Ni`` is the number of vertex triples spanning exactly ``i`` edges.
    """
    n: int
    counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != 4 or min(counts) < 0:
            raise VerificationError(f"invalid 3-profile counts {counts}")
        if sum(counts) != comb(self.n, 3):
            raise VerificationError(
                f"3-profile counts {counts} do not sum to C({self.n},3)")

    @property
    def total(self):
        return comb(self.n, 3)

    @property
    def densities(self):
        total = self.total
        return tuple(c / total for c in self.counts)

    def reversed(self):
        """Counts of the complement graph."""
        return Profile3(self.n, self.counts[::-1])


@dataclass(frozen=True)
class TournamentProfile4:
    """Induced 4-vertex tournament counts ``(T4, C4, W4, L4)``.

    ``counts3`` holds ``(trans3, cyc3)``.  W4 counts 4-sets with a vertex
    beating a cyclic triangle, L4 those with a cyclic triangle beating
    the fourth vertex.
    """
    n: int
    counts4: tuple
    counts3: tuple

    def __post_init__(self):
        counts4 = tuple(int(c) for c in self.counts4)
        counts3 = tuple(int(c) for c in self.counts3)
        object.__setattr__(self, "counts4", counts4)
        object.__setattr__(self, "counts3", counts3)
        n = self.n
        if min(counts4) < 0 or min(counts3) < 0:
            raise VerificationError(f"negative tournament counts "
                                    f"{counts4}, {counts3}")
        if sum(counts4) != comb(n, 4) or sum(counts3) != comb(n, 3):
            raise VerificationError("tournament counts do not sum to "
                                    f"C({n},4), C({n},3)")
        T4, C4, W4, L4 = counts4
        if counts3[1] * (n - 3) != 2 * C4 + W4 + L4:
            raise VerificationError("cyc3*(n-3) != 2*C4 + W4 + L4")

    @property
    def densities4(self):
        total = comb(self.n, 4)
        return tuple(c / total for c in self.counts4)

    @property
    def density_c3(self):
        return self.counts3[1] / comb(self.n, 3)

    @property
    def cyc3(self):
        return self.counts3[1]


@dataclass(frozen=True, eq=False)
class ArcCycleCounts:
    """Per-arc cyclic triangle counts.

    ``s[k]`` is the number of cyclic triangles through the arc
    ``tails[k] -> heads[k]``; arcs are ordered by tail, then head.
    """
    n: int
    tails: np.ndarray
    heads: np.ndarray
    s: np.ndarray

    @property
    def total(self):
        """Sum of s, three times the cyclic triangle count."""
        return int(self.s.sum())

    def pair_sum(self):
        """Sum of C(s_e, 2), the C4 count."""
        s = self.s.astype(np.int64)
        return int((s * (s - 1) // 2).sum())

    def __len__(self):
        return len(self.s)


@dataclass(frozen=True, eq=False)
class ProfileEstimate:
    """Sampled class frequencies with 99% normal-approximation intervals.

    For orders up to 5 ``classes`` lists every class (unseen ones with a
    zero count); for orders 6 to 8 only the observed classes.
    """
    kind: str
    l: int
    classes: tuple
    counts: np.ndarray
    samples: int
    seed: int

    @property
    def densities(self):
        return self.counts / self.samples

    @property
    def half_widths(self):
        p = self.densities
        return Z99 * np.sqrt(p * (1 - p) / self.samples)

    def as_dict(self):
        return dict(zip(self.classes, self.densities.tolist()))

    def density(self, name):
        """Estimated density of the class called ``name``."""
        for cls, p in zip(self.classes, self.densities):
            if cls.name == name:
                return float(p)
        return 0.0
