"""Depth-first search for long witness-free words.

Words are grown one letter at a time, smallest rank (largest letter) first.
A witness, once present, survives every extension, so a branch is cut as
soon as the newest letter completes one. Only witnesses ending at the last
letter need checking at each step.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .errors import ParameterError
from .witness import PLAIN, STRONG, analyze, decomposable_suffix, power_suffix
from .words import Word, parse_word

EXEMPLAR_CAP = 16
DEFAULT_MAX_DEPTH = 64
DEFAULT_MAX_NODES = 10**7
# Above this many words the frontier check switches from plain enumeration
# to a pruned enumeration driven by full re-analysis.
ENUMERATION_LIMIT = 1 << 16


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int = DEFAULT_MAX_DEPTH
    max_nodes: int = DEFAULT_MAX_NODES

    def __post_init__(self):
        if self.max_depth < 1 or self.max_nodes < 1:
            raise ParameterError("search budget limits must be positive")


@dataclass
class BoundReport:
    m: int
    p: int
    q: int
    mode: str
    longest_witness_free_length: int
    exemplars: list
    exhausted: bool
    nodes_visited: int = 0
    nodes_per_depth: list = field(default_factory=list)

    @property
    def empirical_bound(self) -> int:
        return self.longest_witness_free_length + 1

    @property
    def claim(self) -> str:
        return "upper_bound" if self.exhausted else "lower_bound_only"

    def to_dict(self):
        return {
            "m": self.m,
            "p": self.p,
            "q": self.q,
            "mode": self.mode,
            "longest_witness_free_length": self.longest_witness_free_length,
            "empirical_bound": self.empirical_bound,
            "exhausted": self.exhausted,
            "claim": self.claim,
            "exemplars": [str(w) for w in self.exemplars],
            "nodes_visited": self.nodes_visited,
            "nodes_per_depth": list(self.nodes_per_depth),
        }

    @classmethod
    def from_dict(cls, d):
        m = d["m"]
        return cls(
            m=m,
            p=d["p"],
            q=d["q"],
            mode=d["mode"],
            longest_witness_free_length=d["longest_witness_free_length"],
            exemplars=[parse_word(t, m) for t in d["exemplars"]],
            exhausted=d["exhausted"],
            nodes_visited=d.get("nodes_visited", 0),
            nodes_per_depth=list(d.get("nodes_per_depth", [])),
        )


def completes_witness(s: tuple, p: int, q: int, strong: bool) -> bool:
    """True iff some witness of ``s`` ends at its final letter."""
    if power_suffix(s, p) is not None:
        return True
    return decomposable_suffix(s, q, strong) is not None


class _Partial:
    """Search state for one subtree; mergeable in child order."""

    def __init__(self):
        self.longest = 0
        self.exemplars = []
        self.per_depth = []
        self.nodes = 0
        self.truncated = False  # node or depth budget cut the search short

    def visit(self, s):
        depth = len(s)
        self.nodes += 1
        while len(self.per_depth) < depth:
            self.per_depth.append(0)
        self.per_depth[depth - 1] += 1

    def record(self, s):
        depth = len(s)
        if depth > self.longest:
            self.longest = depth
            self.exemplars = [s]
        elif depth == self.longest and len(self.exemplars) < EXEMPLAR_CAP:
            self.exemplars.append(s)


def _search(m, p, q, strong, max_depth, max_nodes, root: tuple) -> _Partial:
    state = _Partial()
    if root:
        state.visit(root)
        if completes_witness(root, p, q, strong):
            return state
        state.record(root)
    # explicit stack keeps Python's recursion limit out of the picture
    stack = [(root, 1)]
    while stack:
        s, nxt = stack.pop()
        if nxt > m:
            continue
        stack.append((s, nxt + 1))
        if len(s) >= max_depth:
            state.truncated = True
            stack.pop()
            continue
        if state.nodes >= max_nodes:
            state.truncated = True
            break
        child = s + (nxt,)
        state.visit(child)
        if completes_witness(child, p, q, strong):
            continue
        state.record(child)
        stack.append((child, 1))
    return state


def _merge(parts):
    total = _Partial()
    for part in parts:
        if part.longest > total.longest:
            total.longest = part.longest
            total.exemplars = list(part.exemplars)
        elif part.longest == total.longest and part.longest > 0:
            room = EXEMPLAR_CAP - len(total.exemplars)
            total.exemplars.extend(part.exemplars[:room])
        for d, c in enumerate(part.per_depth):
            if d < len(total.per_depth):
                total.per_depth[d] += c
            else:
                total.per_depth.append(c)
        total.nodes += part.nodes
        total.truncated = total.truncated or part.truncated
    return total


def _search_job(args):
    return _search(*args)


def longest_witness_free(
    m: int,
    p: int,
    q: int,
    mode: str = PLAIN,
    budget: Optional[SearchBudget] = None,
    threads: int = 1,
    trace=None,
) -> BoundReport:
    """Deepest witness-free words reachable within ``budget``.

    ``threads > 1`` searches the first-letter subtrees in separate
    processes. Results are merged in subtree order, and a subtree that would
    have run out of node budget in a sequential run is redone sequentially
    with what budget remains, so the report never depends on ``threads``.
    """
    if m < 1:
        raise ParameterError(f"alphabet size must be >= 1, got {m}")
    if p < 2 or q < 2:
        raise ParameterError(f"need p >= 2 and q >= 2, got p={p}, q={q}")
    if mode not in (PLAIN, STRONG):
        raise ParameterError(f"mode must be 'plain' or 'strong', got {mode!r}")
    budget = budget or SearchBudget()
    strong = mode == STRONG

    if threads > 1 and m > 1:
        jobs = [(m, p, q, strong, budget.max_depth, budget.max_nodes, (r,)) for r in range(1, m + 1)]
        with ProcessPoolExecutor(max_workers=min(threads, m)) as pool:
            parts = list(pool.map(_search_job, jobs))
        used, kept = 0, []
        for job, part in zip(jobs, parts):
            left = budget.max_nodes - used
            if left <= 0:
                kept.append(_Partial())
                kept[-1].truncated = True
                break
            if part.nodes > left or (part.truncated and part.nodes >= left):
                part = _search(*job[:5], left, job[6])
            kept.append(part)
            used += part.nodes
        state = _merge(kept)
    else:
        state = _search(m, p, q, strong, budget.max_depth, budget.max_nodes, ())

    if trace is not None:
        for depth, count in enumerate(state.per_depth, start=1):
            print(f"depth {depth}: {count} nodes", file=trace)

    return BoundReport(
        m=m,
        p=p,
        q=q,
        mode=mode,
        longest_witness_free_length=state.longest,
        exemplars=[Word(s, m) for s in state.exemplars],
        exhausted=not state.truncated,
        nodes_visited=state.nodes,
        nodes_per_depth=list(state.per_depth),
    )


def _witness_free(s: tuple, report: BoundReport) -> bool:
    result = analyze(Word(s, report.m), report.p, report.q, report.mode)
    return result.outcome_kind == "none"


def verify_frontier(report: BoundReport) -> bool:
    """Independently re-check a report with full (non-incremental) analysis."""
    for w in report.exemplars:
        if len(w) != report.longest_witness_free_length or w.m != report.m:
            return False
        if analyze(w, report.p, report.q, report.mode).outcome_kind != "none":
            return False
    if not report.exhausted:
        return True
    depth = report.empirical_bound
    if report.m**depth <= ENUMERATION_LIMIT:
        return not any(_witness_free(s, report) for s in product(range(1, report.m + 1), repeat=depth))
    # Extensions of a word with a witness keep it, so only witness-free
    # prefixes need growing.
    level = [()]
    for _ in range(depth):
        level = [s + (r,) for s in level for r in range(1, report.m + 1)]
        level = [s for s in level if _witness_free(s, report)]
        if not level:
            return True
    return False
