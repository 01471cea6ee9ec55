"""Seeded experiment harness: corpus x algorithms -> CSV of trial records.

Config files are flat ``key = value`` text; ``#`` starts a comment and every
``algo`` line adds one algorithm stanza::

    corpus = process
    n = 24
    seeds = 0..9
    budget = 100000000
    algo = peel t=1
    algo = greedy

Keys other than ``corpus``, ``seeds``, ``budget``, ``output`` and ``algo`` are
corpus parameters.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from . import approx
from .exact import DEFAULT_BUDGET, max_independent_set
from .generators import (
    BlowupParams,
    blowup,
    clique_free_process,
    gap_instance,
    gnp,
    random_cograph,
    triangle_free_process,
)
from .graph import Graph, read_graph
from .patterns import Pattern, pattern_by_name, split_pattern

CSV_VERSION = "hfree-mis trials v1"
CSV_COLUMNS = ["seed", "instance", "n", "m", "algorithm", "found", "alpha", "ratio", "wall_ms", "certificate"]


@dataclass(frozen=True)
class AlgoSpec:
    name: str
    params: tuple[tuple[str, str], ...] = ()

    @property
    def label(self) -> str:
        return " ".join([self.name, *(f"{k}={v}" for k, v in self.params)])

    def get(self, key: str, default=None):
        return dict(self.params).get(key, default)

    @classmethod
    def parse(cls, text: str) -> AlgoSpec:
        name, *rest = text.split()
        params = []
        for item in rest:
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"algorithm parameter {item!r} is not key=value")
            params.append((key, value))
        return cls(name, tuple(params))


@dataclass
class ExperimentConfig:
    corpus: str
    corpus_params: dict[str, str] = field(default_factory=dict)
    seeds: list[int] = field(default_factory=lambda: [0])
    algorithms: list[AlgoSpec] = field(default_factory=list)
    budget: int = DEFAULT_BUDGET
    output: str | None = None

    def validate(self) -> None:
        if not self.algorithms:
            raise ValueError("no algorithms")
        if not self.seeds:
            raise ValueError("empty seed range")
        if self.corpus not in CORPORA:
            raise KeyError(f"unknown corpus kind {self.corpus!r}")
        for spec in self.algorithms:
            if spec.name not in ALGORITHMS:
                raise KeyError(f"unknown algorithm {spec.name!r}")
            for key in ("pattern",):
                if spec.get(key):
                    pattern_by_name(spec.get(key))
        if "base" in self.corpus_params:
            _load_base(self.corpus_params["base"])


@dataclass(frozen=True)
class TrialRecord:
    seed: int
    instance: str
    n: int
    m: int
    algorithm: str
    found: int
    alpha: int | None
    wall_ms: float
    certificate: str

    @property
    def ratio(self) -> float | None:
        if self.alpha is None or self.found == 0:
            return None
        return self.alpha / self.found

    def row(self, with_time: bool = True) -> list[str]:
        ratio = self.ratio
        return [
            str(self.seed),
            self.instance,
            str(self.n),
            str(self.m),
            self.algorithm,
            str(self.found),
            "timeout" if self.alpha is None else str(self.alpha),
            "" if ratio is None else f"{ratio:.6f}",
            f"{self.wall_ms:.3f}" if with_time else "",
            self.certificate,
        ]


# -- config parsing -------------------------------------------------------------------


def _parse_seeds(text: str) -> list[int]:
    seeds: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition("..")
        if sep:
            seeds.extend(range(int(lo), int(hi) + 1))
        else:
            seeds.append(int(part))
    return seeds


def parse_config(text: str) -> ExperimentConfig:
    corpus = None
    params: dict[str, str] = {}
    seeds = [0]
    algos: list[AlgoSpec] = []
    budget = DEFAULT_BUDGET
    output = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        key, value = key.strip(), value.strip()
        if key == "corpus":
            corpus = value
        elif key == "seeds":
            seeds = _parse_seeds(value)
        elif key == "budget":
            budget = int(value)
        elif key == "output":
            output = value
        elif key == "algo":
            algos.append(AlgoSpec.parse(value))
        else:
            params[key] = value
    if corpus is None:
        raise ValueError("missing 'corpus' key")
    config = ExperimentConfig(corpus, params, seeds, algos, budget, output)
    config.validate()
    return config


# -- corpus ---------------------------------------------------------------------------


def _load_base(spec: str) -> Graph:
    if Path(spec).is_file():
        return read_graph(spec)
    return pattern_by_name(spec).graph


def _describe(kind: str, params: dict[str, str]) -> str:
    return f"{kind}(" + ",".join(f"{k}={params[k]}" for k in sorted(params)) + ")"


def _corpus_edgeless(p, seed):
    return Graph.empty(int(p["n"]))


def _corpus_gnp(p, seed):
    return gnp(int(p["n"]), float(p["p"]), seed)


def _corpus_process(p, seed):
    return triangle_free_process(int(p["n"]), seed)


def _corpus_clique_free(p, seed):
    return clique_free_process(int(p["n"]), int(p.get("t", 4)), seed)


def _corpus_cograph(p, seed):
    return random_cograph(int(p["n"]), seed)


def _corpus_blowup(p, seed):
    return blowup(_load_base(p["base"]), int(p["s"]), float(p["p"]), seed)


def _corpus_gap(p, seed):
    params = BlowupParams(int(p["s"]), float(p["p"]), int(p.get("gamma", 3)), seed)
    return gap_instance(_load_base(p["base"]), params)[0]


def _corpus_file(p, seed):
    return read_graph(p["path"])


CORPORA = {
    "edgeless": _corpus_edgeless,
    "gnp": _corpus_gnp,
    "process": _corpus_process,
    "clique-free": _corpus_clique_free,
    "cograph": _corpus_cograph,
    "blowup": _corpus_blowup,
    "gap": _corpus_gap,
    "file": _corpus_file,
}


def make_instance(kind: str, params: dict[str, str], seed: int) -> tuple[Graph, str]:
    return CORPORA[kind](params, seed), _describe(kind, params)


# -- algorithms -------------------------------------------------------------------------


def _int(spec: AlgoSpec, key: str, default: int) -> int:
    return int(spec.get(key, default))


def split_for_substitution(pattern: Pattern) -> tuple[Pattern, Pattern]:
    parts = split_pattern(pattern)
    if parts is None:
        raise ValueError(f"pattern {pattern} is prime; it is not a substitution")
    return parts


def _run_subst(g: Graph, spec: AlgoSpec, seed: int) -> approx.Solution:
    pattern = pattern_by_name(spec.get("pattern", "K4"))
    h1, h2 = split_for_substitution(pattern)
    s1, s2 = approx.default_solver(h1), approx.default_solver(h2)
    params = approx.SubstitutionParams.from_solvers(s1, s2, h1.n, h2.n)
    if spec.get("eps"):
        params = approx.SubstitutionParams(float(spec.get("eps")), h1.n, h2.n)
    return approx.substitution_approx(
        g, h1, h2, s1, s2, params, seed=seed, mode=spec.get("mode", "faithful"), retries=_int(spec, "retries", 3)
    )


def _run_exact(g: Graph, spec: AlgoSpec, seed: int) -> approx.Solution:
    res = max_independent_set(g, _int(spec, "budget", DEFAULT_BUDGET))
    return approx.Solution(res.best, "exact", approx.ReturnedSet("exact-timeout" if res.timed_out else "exact"))


ALGORITHMS = {
    "greedy": lambda g, spec, seed: approx.greedy_min_degree(g),
    "ramsey": lambda g, spec, seed: approx.ramsey_is(g, _int(spec, "t", 3)),
    "eh": lambda g, spec, seed: approx.eh_wrapper(
        g, approx.cograph_eh_oracle, approx.EHParams(float(spec.get("delta", 0.5)), float(spec.get("eps", 0.01)))
    ),
    "peel": lambda g, spec, seed: approx.peel_iterate(g, approx.EDGELESS_EXACT, _int(spec, "t", 1)),
    "ls": lambda g, spec, seed: approx.local_search(g, _int(spec, "t", 2)),
    "subst": _run_subst,
    "exact": _run_exact,
}


def run_algorithm(g: Graph, spec: AlgoSpec, seed: int = 0) -> approx.Solution:
    return ALGORITHMS[spec.name](g, spec, seed)


# -- trials ------------------------------------------------------------------------------


def run_trials(config: ExperimentConfig) -> Iterator[TrialRecord]:
    """Yield one record per (seed, algorithm), ordered by seed then algorithm label."""
    config.validate()
    specs = sorted(config.algorithms, key=lambda s: s.label)
    for seed in sorted(config.seeds):
        g, descriptor = make_instance(config.corpus, config.corpus_params, seed)
        oracle = max_independent_set(g, config.budget)
        alpha = None if oracle.timed_out else oracle.value
        for spec in specs:
            t0 = time.perf_counter()
            sol = run_algorithm(g, spec, seed)
            wall = (time.perf_counter() - t0) * 1000
            if not sol.failed and not g.is_independent(sol.vertices):
                raise AssertionError(f"{spec.label} returned a dependent set on seed {seed}")
            yield TrialRecord(seed, descriptor, g.n, g.m, spec.label, sol.size, alpha, wall, sol.tag)


def write_csv(records: Iterable[TrialRecord], out: TextIO, with_time: bool = True) -> int:
    out.write(f"# {CSV_VERSION}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    count = 0
    for rec in records:
        writer.writerow(rec.row(with_time))
        count += 1
    return count


def records_to_csv(records: Iterable[TrialRecord], with_time: bool = True) -> str:
    buf = io.StringIO()
    write_csv(records, buf, with_time)
    return buf.getvalue()


def run_config_file(path, out_path=None, seeds: list[int] | None = None) -> list[TrialRecord]:
    with open(path, encoding="utf-8") as f:
        config = parse_config(f.read())
    if seeds is not None:
        config.seeds = seeds
    records = list(run_trials(config))
    target = out_path or config.output
    if target:
        with open(target, "w", encoding="utf-8", newline="") as f:
            write_csv(records, f)
    return records
