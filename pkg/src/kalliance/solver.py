"""Exact minimum-cardinality solvers for the alliance and domination
parameters, plus an independent brute-force oracle.

``solve`` enumerates cardinalities from a sound lower bound upward; within a
cardinality, subsets are visited in lexicographic order and the first
feasible one wins, which pins the witness to the lexicographically least
minimum-cardinality set no matter how many workers run. The oracle shares no
search code with ``solve``: it walks every nonempty subset with
``itertools.combinations`` and checks the definitions with plain set
arithmetic.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import bounds as bounds_mod
from .alliances import VertexSet
from .graphs import Graph

PARAM_A_K = "a_k"
PARAM_GAMMA_K_A = "gamma_k_a"
PARAM_GAMMA_K_CA = "gamma_k_ca"
PARAM_GAMMA = "gamma"
PARAM_GAMMA_T = "gamma_t"
PARAMETERS = (PARAM_A_K, PARAM_GAMMA_K_A, PARAM_GAMMA_K_CA, PARAM_GAMMA, PARAM_GAMMA_T)
K_PARAMETERS = (PARAM_A_K, PARAM_GAMMA_K_A, PARAM_GAMMA_K_CA)

STATUS_FOUND = "found"
STATUS_NONE = "none_exists"

DEFAULT_MAX_N = 24
MAX_N_ENV_VAR = "ALLIANCE_MAX_N"
ORACLE_MAX_N = 20


class ResourceLimitError(RuntimeError):
    """Instance exceeds the configured size cap for exponential search."""


@dataclass(frozen=True)
class SearchStats:
    subsets: int
    prunes: int
    millis: int


@dataclass(frozen=True)
class SolveResult:
    parameter: str
    k: int | None
    status: str
    value: int | None
    witness: VertexSet | None
    stats: SearchStats

    @property
    def found(self) -> bool:
        return self.status == STATUS_FOUND

    def witness_members(self) -> tuple[int, ...] | None:
        return None if self.witness is None else self.witness.members

    def to_json_dict(self) -> dict:
        out: dict = {"parameter": self.parameter}
        if self.k is not None:
            out["k"] = self.k
        out["status"] = self.status
        if self.found:
            out["value"] = self.value
            out["witness"] = list(self.witness.members)
        out["stats"] = {
            "subsets": self.stats.subsets,
            "prunes": self.stats.prunes,
            "millis": self.stats.millis,
        }
        return out


def _requirements(parameter: str) -> tuple[bool, bool, bool, bool]:
    """(defensive, dominating, total-dominating, connected-induced) checks."""
    return {
        PARAM_A_K: (True, False, False, False),
        PARAM_GAMMA_K_A: (True, True, False, False),
        PARAM_GAMMA_K_CA: (True, True, False, True),
        PARAM_GAMMA: (False, True, False, False),
        PARAM_GAMMA_T: (False, False, True, False),
    }[parameter]


def _validate_parameter(parameter: str, k: int | None):
    if parameter not in PARAMETERS:
        raise ValueError(f"unknown parameter {parameter!r}")
    if parameter in K_PARAMETERS and k is None:
        raise ValueError(f"parameter {parameter!r} requires k")
    if parameter not in K_PARAMETERS and k is not None:
        raise ValueError(f"parameter {parameter!r} does not take k")


def _resolve_cap(max_n: int | None) -> int:
    if max_n is not None:
        return max_n
    env = os.environ.get(MAX_N_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_MAX_N


class _Search:
    """Fixed-cardinality lexicographic subset search with sound pruning.

    A partial selection is abandoned when some already-chosen vertex can no
    longer reach its required inside-degree even if every remaining slot
    favored it, or when some vertex can no longer be dominated by any
    extension. Both tests are optimistic, so they never cut a feasible
    completion.
    """

    def __init__(self, g: Graph, k: int, needs, pruning: bool):
        self.n = g.n
        self.adj = g.adjacency_bits
        self.deg = g.degrees
        self.k = k
        self.needs_def, self.needs_dom, self.needs_tot, self.needs_conn = needs
        self.pruning = pruning
        self.full = (1 << g.n) - 1
        suffix_all = [0] * (g.n + 1)
        suffix_dom = [0] * (g.n + 1)
        suffix_tot = [0] * (g.n + 1)
        for w in range(g.n - 1, -1, -1):
            suffix_all[w] = suffix_all[w + 1] | (1 << w)
            suffix_dom[w] = suffix_dom[w + 1] | (1 << w) | self.adj[w]
            suffix_tot[w] = suffix_tot[w + 1] | self.adj[w]
        self.suffix_all = suffix_all
        self.suffix_dom = suffix_dom
        self.suffix_tot = suffix_tot

    def run(self, size: int, workers: int) -> tuple[int | None, int, int]:
        """Lex-least feasible subset of the given size (as a bitmask) plus
        (subsets examined, prune events)."""
        firsts = range(0, self.n - size + 1)
        if workers <= 1:
            subsets = prunes = 0
            for v0 in firsts:
                hit, s, p = self._from_first(v0, size)
                subsets += s
                prunes += p
                if hit is not None:
                    return hit, subsets, prunes
            return None, subsets, prunes
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda v0: self._from_first(v0, size), firsts))
        subsets = sum(s for _, s, _ in outcomes)
        prunes = sum(p for _, _, p in outcomes)
        for hit, _, _ in outcomes:  # firsts order == lexicographic order
            if hit is not None:
                return hit, subsets, prunes
        return None, subsets, prunes

    def _from_first(self, v0: int, size: int) -> tuple[int | None, int, int]:
        counters = [0, 0]  # subsets examined, prune events
        bit0 = 1 << v0
        hit = self._extend(
            [v0], bit0, bit0 | self.adj[v0], self.adj[v0], v0 + 1, size - 1, counters
        )
        return hit, counters[0], counters[1]

    def _extend(self, chosen, mask, cover, cover_t, pos, need, counters):
        if need == 0:
            counters[0] += 1
            return mask if self._complete_ok(chosen, mask, cover, cover_t) else None
        if self.pruning and self._prune(chosen, mask, cover, cover_t, pos, need):
            counters[1] += 1
            return None
        for v in range(pos, self.n - need + 1):
            b = 1 << v
            hit = self._extend(
                chosen + [v], mask | b, cover | b | self.adj[v],
                cover_t | self.adj[v], v + 1, need - 1, counters,
            )
            if hit is not None:
                return hit
        return None

    def _prune(self, chosen, mask, cover, cover_t, pos, need) -> bool:
        if self.needs_dom and (cover | self.suffix_dom[pos]) != self.full:
            return True
        if self.needs_tot and (cover_t | self.suffix_tot[pos]) != self.full:
            return True
        if self.needs_def:
            future = self.suffix_all[pos]
            for v in chosen:
                inside = (self.adj[v] & mask).bit_count()
                gain = (self.adj[v] & future).bit_count()
                if gain > need:
                    gain = need
                if 2 * (inside + gain) < self.deg[v] + self.k:
                    return True
        return False

    def _complete_ok(self, chosen, mask, cover, cover_t) -> bool:
        if self.needs_def:
            for v in chosen:
                if 2 * (self.adj[v] & mask).bit_count() < self.deg[v] + self.k:
                    return False
        if self.needs_dom and cover != self.full:
            return False
        if self.needs_tot and cover_t != self.full:
            return False
        if self.needs_conn and not self._connected(mask):
            return False
        return True

    def _connected(self, mask: int) -> bool:
        reached = mask & -mask
        frontier = reached
        while frontier:
            grown = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                grown |= self.adj[b.bit_length() - 1]
            frontier = grown & mask & ~reached
            reached |= frontier
        return reached == mask


def solve(
    g: Graph,
    parameter: str,
    k: int | None = None,
    *,
    use_pruning: bool = True,
    workers: int = 1,
    max_n: int | None = None,
) -> SolveResult:
    """Exact optimum for one parameter; ``none_exists`` is a result, not an
    error.

    With pruning enabled the cardinality scan starts at the best applicable
    lower bound for the parameter; this only skips sizes no feasible set can
    have, so values and witnesses are identical either way.
    """
    _validate_parameter(parameter, k)
    cap = _resolve_cap(max_n)
    if g.n > cap:
        raise ResourceLimitError(
            f"order {g.n} exceeds the search cap {cap}; raise {MAX_N_ENV_VAR} "
            "or pass max_n to override"
        )
    start = time.perf_counter()
    k_eff = k if k is not None else 0
    needs = _requirements(parameter)
    size_floor = 1
    if use_pruning and parameter in (PARAM_GAMMA_K_A, PARAM_GAMMA_K_CA):
        floor = bounds_mod.best_lower(bounds_mod.lower_reports(g, k_eff, parameter))
        if floor is not None:
            size_floor = max(1, min(floor, g.n))
    search = _Search(g, k_eff, needs, use_pruning)
    subsets = prunes = 0
    for size in range(size_floor, g.n + 1):
        hit, s, p = search.run(size, workers)
        subsets += s
        prunes += p
        if hit is not None:
            millis = int((time.perf_counter() - start) * 1000)
            return SolveResult(
                parameter, k, STATUS_FOUND, size, VertexSet(g, hit),
                SearchStats(subsets, prunes, millis),
            )
    millis = int((time.perf_counter() - start) * 1000)
    return SolveResult(parameter, k, STATUS_NONE, None, None, SearchStats(subsets, prunes, millis))


# ---------------------------------------------------------------------------
# Independent oracle
# ---------------------------------------------------------------------------

def _naive_feasible(nbrs, n, members, k, needs) -> bool:
    needs_def, needs_dom, needs_tot, needs_conn = needs
    if needs_def:
        for v in members:
            inside = len(nbrs[v] & members)
            outside = len(nbrs[v]) - inside
            if inside < outside + k:
                return False
    if needs_dom:
        for u in range(n):
            if u not in members and not (nbrs[u] & members):
                return False
    if needs_tot:
        for u in range(n):
            if not (nbrs[u] & members):
                return False
    if needs_conn:
        seen = {min(members)}
        stack = [min(members)]
        while stack:
            v = stack.pop()
            for u in nbrs[v] & members:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if seen != members:
            return False
    return True


def brute_force_oracle(g: Graph, parameter: str, k: int | None = None) -> SolveResult:
    """Unpruned cardinality-then-lex enumeration of all nonempty subsets."""
    _validate_parameter(parameter, k)
    if g.n > ORACLE_MAX_N:
        raise ResourceLimitError(f"oracle is capped at n <= {ORACLE_MAX_N}")
    start = time.perf_counter()
    k_eff = k if k is not None else 0
    needs = _requirements(parameter)
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    examined = 0
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            examined += 1
            if _naive_feasible(nbrs, g.n, set(combo), k_eff, needs):
                millis = int((time.perf_counter() - start) * 1000)
                return SolveResult(
                    parameter, k, STATUS_FOUND, size,
                    VertexSet.from_vertices(g, combo),
                    SearchStats(examined, 0, millis),
                )
    millis = int((time.perf_counter() - start) * 1000)
    return SolveResult(parameter, k, STATUS_NONE, None, None, SearchStats(examined, 0, millis))


def feasibility_profile(g: Graph) -> dict[int, dict[str, bool]]:
    """Existence flags for plain and global defensive k-alliances across the
    meaningful k range (minus-max-degree to max-degree)."""
    d_max = g.max_degree
    profile: dict[int, dict[str, bool]] = {}
    for k in range(-d_max, d_max + 1):
        profile[k] = {
            "exists_defensive": solve(g, PARAM_A_K, k).found,
            "exists_global": solve(g, PARAM_GAMMA_K_A, k).found,
        }
    return profile
