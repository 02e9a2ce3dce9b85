"""Corpus certification: solve every (graph, k, target) cell of a declared
corpus, evaluate every applicable bound, and cross-check the whole web of
identities the solver and bound catalog are supposed to satisfy.

Results are deterministic functions of the corpus spec (all randomness is
seeded), so the CSV artifact is byte-identical across runs and worker
counts.
"""

from __future__ import annotations

import io
import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import bounds as bounds_mod
from .alliances import (
    REQUIRE_DEFENSIVE,
    REQUIRE_GLOBAL,
    REQUIRE_GLOBAL_CONNECTED,
    ConstructionInvariantError,
    VertexSet,
    certify,
    construct_upper_witness,
    cubic_augment_dominating,
    is_dominating,
    is_total_dominating,
)
from .graphs import (
    Graph,
    _FAMILY_PARAMS,
    connected_components_of,
    diameter,
    generate,
    is_connected,
    is_cubic,
    is_regular,
    is_tree,
    random_cubic,
    random_graph,
)
from .solver import (
    PARAM_A_K,
    PARAM_GAMMA,
    PARAM_GAMMA_K_A,
    PARAM_GAMMA_K_CA,
    PARAM_GAMMA_T,
    ResourceLimitError,
    SearchStats,
    SolveResult,
    solve,
)

K_TARGETS = (PARAM_A_K, PARAM_GAMMA_K_A, PARAM_GAMMA_K_CA)
GRAPH_TARGETS = (PARAM_GAMMA, PARAM_GAMMA_T)
ALL_TARGETS = K_TARGETS + GRAPH_TARGETS

DEGREE_RANGE_POLICY = "degree_range"
_SAMPLE_SEED = 94121


@dataclass(frozen=True)
class GraphSpec:
    """One corpus graph: family name plus its exact parameters."""

    family: str
    params: tuple[tuple[str, int | float], ...] = ()

    @classmethod
    def of(cls, family: str, **params) -> "GraphSpec":
        order = _FAMILY_PARAMS.get(family, ())
        return cls(family, tuple((name, params[name]) for name in order))

    def build(self) -> Graph:
        return generate(self.family, **dict(self.params))

    def label(self) -> str:
        parts = [self.family] + [f"{name}{value}" for name, value in self.params]
        return "-".join(parts)

    def to_json_dict(self) -> dict:
        out: dict = {"family": self.family}
        out.update({name: value for name, value in self.params})
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "GraphSpec":
        params = {name: value for name, value in data.items() if name != "family"}
        return cls.of(data["family"], **params)


@dataclass(frozen=True)
class CorpusSpec:
    """Families, k policy, and targets for one certification run."""

    graphs: tuple[GraphSpec, ...]
    k_policy: str | tuple[int, int] = DEGREE_RANGE_POLICY
    targets: tuple[str, ...] = ALL_TARGETS
    constructive: bool = True
    forest_identity_samples: int = 1000
    shrink_samples: int = 200

    def k_range(self, g: Graph) -> range:
        if self.k_policy == DEGREE_RANGE_POLICY:
            d = g.max_degree
            return range(-d, d + 1)
        kmin, kmax = self.k_policy
        return range(kmin, kmax + 1)

    def to_json_dict(self) -> dict:
        return {
            "graphs": [gs.to_json_dict() for gs in self.graphs],
            "k_policy": self.k_policy if isinstance(self.k_policy, str) else list(self.k_policy),
            "targets": list(self.targets),
            "constructive": self.constructive,
            "forest_identity_samples": self.forest_identity_samples,
            "shrink_samples": self.shrink_samples,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CorpusSpec":
        policy = data.get("k_policy", DEGREE_RANGE_POLICY)
        if isinstance(policy, list):
            policy = (int(policy[0]), int(policy[1]))
        return cls(
            graphs=tuple(GraphSpec.from_json_dict(d) for d in data.get("graphs", [])),
            k_policy=policy,
            targets=tuple(data.get("targets", ALL_TARGETS)),
            constructive=bool(data.get("constructive", True)),
            forest_identity_samples=int(data.get("forest_identity_samples", 1000)),
            shrink_samples=int(data.get("shrink_samples", 200)),
        )


@dataclass
class RowEntry:
    """One (target) cell of a certification record."""

    target: str
    status: str
    value: int | None
    best_lower: int | None
    best_upper: int | None
    violations: list[str] = field(default_factory=list)


@dataclass
class CertificationRecord:
    """All targets for one (graph, k) pair; k is None for the per-graph
    domination rows."""

    graph_id: str
    family: str
    n: int
    m: int
    k: int | None
    entries: list[RowEntry]

    def violation_count(self) -> int:
        return sum(len(e.violations) for e in self.entries)


@dataclass
class CorpusResult:
    records: list[CertificationRecord]
    extra_violations: list[str]
    checks_run: dict[str, int] = field(default_factory=dict)

    def all_violations(self) -> list[str]:
        out = []
        for record in self.records:
            for entry in record.entries:
                out.extend(entry.violations)
        out.extend(self.extra_violations)
        return out

    def total_violations(self) -> int:
        return len(self.all_violations())

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("graph,family,n,m,k,target,status,value,best_lower,best_upper,violations\n")
        for record in self.records:
            k_text = "" if record.k is None else str(record.k)
            for entry in record.entries:
                value = "" if entry.value is None else str(entry.value)
                lower = "" if entry.best_lower is None else str(entry.best_lower)
                upper = "" if entry.best_upper is None else str(entry.best_upper)
                buf.write(
                    f"{record.graph_id},{record.family},{record.n},{record.m},"
                    f"{k_text},{entry.target},{entry.status},{value},{lower},{upper},"
                    f"{len(entry.violations)}\n"
                )
        return buf.getvalue()

    def to_json_dict(self) -> dict:
        return {
            "records": [
                {
                    "graph": r.graph_id,
                    "family": r.family,
                    "n": r.n,
                    "m": r.m,
                    "k": r.k,
                    "entries": [
                        {
                            "target": e.target,
                            "status": e.status,
                            "value": e.value,
                            "best_lower": e.best_lower,
                            "best_upper": e.best_upper,
                            "violations": e.violations,
                        }
                        for e in r.entries
                    ],
                }
                for r in self.records
            ],
            "extra_violations": self.extra_violations,
            "checks_run": self.checks_run,
            "total_violations": self.total_violations(),
        }


# ---------------------------------------------------------------------------
# Per-graph certification
# ---------------------------------------------------------------------------

def _dominates(g: Graph, members) -> bool:
    full = (1 << g.n) - 1
    cover = 0
    for v in members:
        cover |= (1 << v) | g.adjacency_bits[v]
    return cover == full


def _min_dominating_subset(g: Graph, s: VertexSet, gamma_witness: VertexSet) -> VertexSet:
    """Smallest W inside s that dominates the whole graph (s itself does)."""
    if len(s) == g.n:
        return gamma_witness
    pool = s.members
    for size in range(1, len(pool) + 1):
        for combo in combinations(pool, size):
            if _dominates(g, combo):
                return VertexSet.from_vertices(g, combo)
    raise AssertionError("a global alliance always contains a dominating subset")


def _gamma_a_at(table, k, gamma_value, kmin):
    """gamma_k_a value with the below-range clamp: for k below the degree
    range every dominating set qualifies, so the value equals gamma."""
    if k < kmin:
        return gamma_value
    entry = table.get(k)
    return None if entry is None else entry[PARAM_GAMMA_K_A].value


@dataclass
class _GraphOutcome:
    spec: GraphSpec
    graph: Graph
    graph_id: str
    ks: list[int]
    table: dict[int, dict[str, SolveResult]]
    gamma: SolveResult
    gamma_t: SolveResult
    records: list[CertificationRecord]
    extras: list[str]
    shrink_pool: list[tuple[int, VertexSet, VertexSet]]  # (k, witness, min dominating W)
    counts: dict[str, int] = field(default_factory=dict)


def _solve_row(g: Graph, target: str, k: int | None = None) -> SolveResult:
    """Solve one corpus cell; oversize instances become a recorded status
    instead of aborting the run."""
    try:
        return solve(g, target, k)
    except ResourceLimitError:
        return SolveResult(target, k, "resource_error", None, None, SearchStats(0, 0, 0))


def _certify_graph(gs: GraphSpec, spec: CorpusSpec) -> _GraphOutcome:
    g = gs.build()
    gid = f"{gs.label()}-{g.content_hash()}"
    ks = list(spec.k_range(g))
    want = set(spec.targets)

    table: dict[int, dict[str, SolveResult]] = {}
    for k in ks:
        table[k] = {t: _solve_row(g, t, k) for t in K_TARGETS if t in want}
    gamma = _solve_row(g, PARAM_GAMMA)
    gamma_t = _solve_row(g, PARAM_GAMMA_T)

    records: list[CertificationRecord] = []
    extras: list[str] = []
    shrink_pool: list[tuple[int, VertexSet, VertexSet]] = []

    d_max = g.max_degree
    d_min = g.min_degree
    connected = is_connected(g)
    diam = diameter(g) if connected else None
    cubic = is_cubic(g)
    requires = {
        PARAM_A_K: REQUIRE_DEFENSIVE,
        PARAM_GAMMA_K_A: REQUIRE_GLOBAL,
        PARAM_GAMMA_K_CA: REQUIRE_GLOBAL_CONNECTED,
    }

    for k in ks:
        entries: list[RowEntry] = []
        for target in K_TARGETS:
            if target not in want:
                continue
            res = table[k][target]
            try:
                reports = bounds_mod.evaluate_all(g, k, target)
            except ResourceLimitError:
                reports = []
            lower = bounds_mod.best_lower(reports)
            upper = bounds_mod.best_upper(reports)
            entry = RowEntry(target, res.status, res.value, lower, upper)

            if res.found:
                # Re-certify through the set-based predicate path.
                if not certify(g, res.witness, k, requires[target]).satisfied:
                    entry.violations.append(
                        f"{gid} k={k} {target}: witness failed re-certification"
                    )
                for report in reports:
                    if not report.applicable:
                        continue
                    if report.kind == bounds_mod.KIND_LOWER and res.value < report.value:
                        entry.violations.append(
                            f"{gid} k={k} {target}: value {res.value} below "
                            f"{report.name}={report.value}"
                        )
                    if report.kind == bounds_mod.KIND_UPPER and res.value > report.value:
                        entry.violations.append(
                            f"{gid} k={k} {target}: value {res.value} above "
                            f"{report.name}={report.value}"
                        )
                if target == PARAM_GAMMA_K_A:
                    size = res.value
                    # Certified witnesses satisfy the quadratic size relation
                    # and the per-vertex outside-degree cap.
                    if size * size - k * size - g.n < 0:
                        entry.violations.append(
                            f"{gid} k={k}: witness size {size} violates s^2 - k s - n >= 0"
                        )
                    if k <= d_max:
                        cap = (d_max - k) // 2
                        members = set(res.witness.members)
                        if any(
                            g.degrees[v] - len(g.adjacency[v] & members) > cap
                            for v in members
                        ):
                            entry.violations.append(
                                f"{gid} k={k}: witness outside-degree exceeds "
                                f"floor((d1 - k) / 2) = {cap}"
                            )
                if target == PARAM_GAMMA_K_CA and connected:
                    if diam > res.value + 1:
                        entry.violations.append(
                            f"{gid} k={k}: diameter {diam} exceeds |S| + 1 = {res.value + 1}"
                        )
            entries.append(entry)
        records.append(CertificationRecord(gid, gs.family, g.n, g.m, k, entries))

    def entry_for(k: int, target: str) -> RowEntry:
        record = records[ks.index(k)]
        return next(e for e in record.entries if e.target == target)

    def value_of(k: int, target: str):
        res = table[k].get(target)
        return res.value if res is not None and res.found else None

    # Cross-k identities.
    has_gka = PARAM_GAMMA_K_A in want
    has_ak = PARAM_A_K in want
    has_gkca = PARAM_GAMMA_K_CA in want
    for k in ks:
        if has_ak and has_gka:
            ak, gka = value_of(k, PARAM_A_K), value_of(k, PARAM_GAMMA_K_A)
            if ak is not None and gka is not None and gka < ak:
                entry_for(k, PARAM_GAMMA_K_A).violations.append(
                    f"{gid} k={k}: gamma_k_a {gka} below a_k {ak}"
                )
            if gka is not None and ak is None:
                entry_for(k, PARAM_A_K).violations.append(
                    f"{gid} k={k}: global alliance exists but plain alliance does not"
                )
        if has_gka and has_gkca:
            gka, gkca = value_of(k, PARAM_GAMMA_K_A), value_of(k, PARAM_GAMMA_K_CA)
            if gka is not None and gkca is not None and gkca < gka:
                entry_for(k, PARAM_GAMMA_K_CA).violations.append(
                    f"{gid} k={k}: gamma_k_ca {gkca} below gamma_k_a {gka}"
                )
        if has_gka and gamma.found:
            gka = value_of(k, PARAM_GAMMA_K_A)
            if gka is not None and gka < gamma.value:
                entry_for(k, PARAM_GAMMA_K_A).violations.append(
                    f"{gid} k={k}: gamma_k_a {gka} below gamma {gamma.value}"
                )
        if k + 1 in table:
            for target in (PARAM_A_K, PARAM_GAMMA_K_A):
                if target not in want:
                    continue
                low, high = value_of(k, target), value_of(k + 1, target)
                if high is not None and (low is None or low > high):
                    entry_for(k + 1, target).violations.append(
                        f"{gid}: {target} not monotone between k={k} and k={k + 1}"
                    )
        collapsed = bounds_mod.parity_collapse(g, k)
        if collapsed != k and collapsed in table:
            for target in (PARAM_A_K, PARAM_GAMMA_K_A):
                if target not in want:
                    continue
                a = table[k][target]
                b = table[collapsed][target]
                if (a.status, a.value) != (b.status, b.value):
                    entry_for(k, target).violations.append(
                        f"{gid}: {target} differs between parity-equivalent "
                        f"k={k} and k={collapsed}"
                    )

    if has_gka and -d_max in table and gamma.found:
        low_end = value_of(-d_max, PARAM_GAMMA_K_A)
        if low_end != gamma.value:
            entry_for(-d_max, PARAM_GAMMA_K_A).violations.append(
                f"{gid}: gamma_k_a at k=-{d_max} is {low_end}, gamma is {gamma.value}"
            )

    if has_gka and d_max in table and not is_regular(g):
        if table[d_max][PARAM_GAMMA_K_A].found:
            entry_for(d_max, PARAM_GAMMA_K_A).violations.append(
                f"{gid}: nonregular graph admits a global defensive {d_max}-alliance"
            )
    if has_gka and is_regular(g) and g.n >= 2:
        for k in (d_max - 1, d_max):
            if k in table and value_of(k, PARAM_GAMMA_K_A) != g.n:
                entry_for(k, PARAM_GAMMA_K_A).violations.append(
                    f"{gid}: regular graph should have gamma_k_a = n at k={k}"
                )

    if cubic and has_gka and -1 in table:
        gka_m1 = value_of(-1, PARAM_GAMMA_K_A)
        if gamma_t.found and gka_m1 != gamma_t.value:
            entry_for(-1, PARAM_GAMMA_K_A).violations.append(
                f"{gid}: cubic identity gamma_k_a(-1)={gka_m1} != gamma_t={gamma_t.value}"
            )
        if gamma.found and gka_m1 is not None and gka_m1 > 2 * gamma.value:
            entry_for(-1, PARAM_GAMMA_K_A).violations.append(
                f"{gid}: cubic bound gamma_k_a(-1)={gka_m1} exceeds 2*gamma={2 * gamma.value}"
            )

    # The shrink trade: dropping r vertices may lower the level by 2r but
    # can save at most r vertices.
    if has_gka and gamma.found:
        kmin = ks[0] if ks else 0
        for k in ks:
            res = table[k][PARAM_GAMMA_K_A]
            if not res.found:
                continue
            w = _min_dominating_subset(g, res.witness, gamma.witness)
            shrink_pool.append((k, res.witness, w))
            for r in range(0, res.value - len(w) + 1):
                lowered = _gamma_a_at(table, k - 2 * r, gamma.value, kmin)
                if lowered is None or lowered + r > res.value:
                    entry_for(k, PARAM_GAMMA_K_A).violations.append(
                        f"{gid} k={k} r={r}: shrink inequality fails "
                        f"(gamma_k_a(k-2r)={lowered})"
                    )

    # Per-graph rows for the domination parameters.
    graph_entries = []
    if PARAM_GAMMA in want:
        graph_entries.append(RowEntry(PARAM_GAMMA, gamma.status, gamma.value, None, None))
        if gamma.found and not is_dominating(g, gamma.witness):
            graph_entries[-1].violations.append(f"{gid}: gamma witness does not dominate")
    if PARAM_GAMMA_T in want:
        entry = RowEntry(PARAM_GAMMA_T, gamma_t.status, gamma_t.value, None, None)
        if gamma_t.found and not is_total_dominating(g, gamma_t.witness):
            entry.violations.append(f"{gid}: gamma_t witness does not totally dominate")
        if connected and g.n >= 3 and gamma_t.found and gamma_t.value > (2 * g.n) // 3:
            entry.violations.append(
                f"{gid}: gamma_t {gamma_t.value} exceeds floor(2n/3) = {(2 * g.n) // 3}"
            )
        graph_entries.append(entry)
    if graph_entries:
        records.append(CertificationRecord(gid, gs.family, g.n, g.m, None, graph_entries))

    # Executable constructions.
    counts = {"upper_witness": 0, "cubic_augment": 0}
    if spec.constructive:
        for k in ks:
            if k >= d_min:
                break
            counts["upper_witness"] += 1
            try:
                witness = construct_upper_witness(g, k)
            except ConstructionInvariantError as exc:
                extras.append(f"{gid} k={k}: upper witness construction failed: {exc}")
                continue
            expected = g.n - (d_min - k) // 2
            if len(witness) != expected:
                extras.append(
                    f"{gid} k={k}: upper witness has size {len(witness)}, expected {expected}"
                )
        if cubic and gamma.found:
            counts["cubic_augment"] += 1
            try:
                augmented = cubic_augment_dominating(g, gamma.witness)
            except ConstructionInvariantError as exc:
                extras.append(f"{gid}: cubic augmentation failed: {exc}")
            else:
                if len(augmented) > 2 * gamma.value:
                    extras.append(
                        f"{gid}: cubic augmentation produced {len(augmented)} vertices, "
                        f"more than 2*gamma={2 * gamma.value}"
                    )

    return _GraphOutcome(
        gs, g, gid, ks, table, gamma, gamma_t, records, extras, shrink_pool, counts
    )


# ---------------------------------------------------------------------------
# Corpus-wide sampled checks
# ---------------------------------------------------------------------------

def _forest_identity_check(outcomes: list[_GraphOutcome], samples: int, rng) -> list[str]:
    """On trees, the induced edge count satisfies
    sum over S of inside-degrees = 2(|S| - components)."""
    trees = [o.graph for o in outcomes if is_tree(o.graph)]
    if not trees:
        return []
    problems = []
    for i in range(samples):
        g = trees[rng.randrange(len(trees))]
        mask = rng.randrange(1, 1 << g.n)
        members = [v for v in range(g.n) if (mask >> v) & 1]
        member_set = set(members)
        inside_sum = sum(len(g.adjacency[v] & member_set) for v in members)
        c = connected_components_of(g, members)
        if inside_sum != 2 * (len(members) - c):
            problems.append(
                f"forest identity sample {i}: sum={inside_sum}, "
                f"|S|={len(members)}, c={c}"
            )
    return problems


def _shrink_sample_check(outcomes: list[_GraphOutcome], samples: int, rng) -> list[str]:
    from .alliances import shrink_to_lower_k

    pool = [
        (o.graph, o.graph_id, k, s, w)
        for o in outcomes
        for (k, s, w) in o.shrink_pool
    ]
    if not pool:
        return []
    problems = []
    for i in range(samples):
        g, gid, k, s, w = pool[rng.randrange(len(pool))]
        r = rng.randint(0, len(s) - len(w))
        try:
            shrunk = shrink_to_lower_k(g, s, k, w, r)
        except ConstructionInvariantError as exc:
            problems.append(f"shrink sample {i} on {gid} k={k} r={r}: {exc}")
            continue
        if len(shrunk) != len(s) - r:
            problems.append(
                f"shrink sample {i} on {gid} k={k} r={r}: size {len(shrunk)}, "
                f"expected {len(s) - r}"
            )
    return problems


def run_corpus(spec: CorpusSpec, *, workers: int = 1) -> CorpusResult:
    """Certify every corpus row; deterministic given the spec's seeds."""
    if workers <= 1:
        outcomes = [_certify_graph(gs, spec) for gs in spec.graphs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda gs: _certify_graph(gs, spec), spec.graphs))

    records: list[CertificationRecord] = []
    extras: list[str] = []
    checks: dict[str, int] = {"upper_witness": 0, "cubic_augment": 0}
    for outcome in outcomes:
        records.extend(outcome.records)
        extras.extend(outcome.extras)
        for name, count in outcome.counts.items():
            checks[name] = checks.get(name, 0) + count

    rng = random.Random(_SAMPLE_SEED)
    has_trees = any(is_tree(o.graph) for o in outcomes)
    checks["forest_identity"] = spec.forest_identity_samples if has_trees else 0
    extras.extend(_forest_identity_check(outcomes, spec.forest_identity_samples, rng))
    has_pool = any(o.shrink_pool for o in outcomes)
    checks["shrink_samples"] = spec.shrink_samples if has_pool else 0
    extras.extend(_shrink_sample_check(outcomes, spec.shrink_samples, rng))
    return CorpusResult(records, extras, checks)


# ---------------------------------------------------------------------------
# Default corpus
# ---------------------------------------------------------------------------

def _connected_random_graph_spec(n: int, p: float, seed0: int) -> GraphSpec:
    seed = seed0
    while True:
        if is_connected(random_graph(n, p, seed)):
            return GraphSpec.of("random_graph", n=n, p=p, seed=seed)
        seed += 1


def _connected_cubic_spec(n: int, seed0: int) -> GraphSpec:
    seed = seed0
    while True:
        try:
            g = random_cubic(n, seed)
        except ValueError:
            seed += 1
            continue
        if is_connected(g):
            return GraphSpec.of("random_cubic", n=n, seed=seed)
        seed += 1


def default_corpus_spec() -> CorpusSpec:
    """Named graphs, 50 random trees (n <= 12), 30 random connected cubic
    graphs (n <= 14), and 50 random connected graphs (n <= 11)."""
    named = [GraphSpec.of("complete", n=n) for n in range(2, 9)]
    named += [
        GraphSpec.of("complete_bipartite", a=2, b=2),
        GraphSpec.of("complete_bipartite", a=2, b=3),
        GraphSpec.of("complete_bipartite", a=3, b=3),
        GraphSpec.of("star", n=5),
        GraphSpec.of("star", n=7),
        GraphSpec.of("path", n=6),
        GraphSpec.of("path", n=9),
        GraphSpec.of("cycle", n=5),
        GraphSpec.of("cycle", n=6),
        GraphSpec.of("hypercube", d=2),
        GraphSpec.of("hypercube", d=3),
        GraphSpec.of("petersen"),
    ]
    trees = [GraphSpec.of("random_tree", n=3 + i % 10, seed=i) for i in range(50)]
    cubic_sizes = (6, 8, 10, 12, 14)
    cubics = [
        _connected_cubic_spec(cubic_sizes[i % len(cubic_sizes)], 100 * i)
        for i in range(30)
    ]
    randoms = [
        _connected_random_graph_spec(4 + i % 8, (0.3, 0.5)[i % 2], 10000 + 100 * i)
        for i in range(50)
    ]
    return CorpusSpec(graphs=tuple(named + trees + cubics + randoms))


def load_corpus_spec(text: str) -> CorpusSpec:
    return CorpusSpec.from_json_dict(json.loads(text))
