"""Experiment harness: metric time series, coin-grid sweeps, figure data.

The harness turns walk configurations into reproducible data files.  Metric
names are compact strings such as ``entropy(G)``, ``logneg(PC)``,
``concurrence``, ``concurrence_postselected(pi/2,0)`` or
``closeness(graph)``; angles inside them accept the same ``k*pi/m`` tokens
as the command line.  All emitted CSV/JSON files are byte-identical across
reruns.
"""

from __future__ import annotations

import json
import math
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from .conditioning import CoinProjection, postselect_coin, unconditioned_vertex_state
from .errors import ZeroProbabilityError
from .metrics import closeness, log_negativity, n_concurrence, von_neumann_entropy
from .states import ghz, graph_state, w_state
from .walk import CoinParams, GraphTopology, PureState, WalkConfig, evolve

# The four coin parameter sets used by every time-series figure dataset
# (fig2 through fig5).
STANDARD_COINS = (
    CoinParams(3 * math.pi / 20, 0.0, 7 * math.pi / 20),
    CoinParams(math.pi / 5, 0.0, math.pi / 5),
    CoinParams(math.pi / 4, 0.0, 2 * math.pi / 5),
    CoinParams(2 * math.pi / 5, 0.0, 3 * math.pi / 10),
)

# The four best-performing coin sets for cluster-state closeness on the
# four-site cycle (fig7).
BEST_CLUSTER_COINS = (
    CoinParams(math.pi / 10, 0.0, 0.0),
    CoinParams(math.pi / 2, 0.0, math.pi / 2),
    CoinParams(math.pi / 20, 0.0, 0.0),
    CoinParams(7 * math.pi / 20, 0.0, 0.0),
)

FIGURE_IDS = ("fig2", "fig3", "fig4", "fig5", "fig6", "fig7")

TARGET_KINDS = ("ghz", "w", "graph")

_ANGLE_RE = re.compile(
    r"^(?P<sign>[+-])?\s*(?P<k>\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*pi\s*"
    r"(?:/\s*(?P<d>\d+(?:\.\d*)?))?$",
    re.IGNORECASE,
)


def parse_angle(token: str | float) -> float:
    """Parse an angle given as a float or an exact multiple of pi.

    Accepts plain numbers ("1.57"), "pi", "pi/2", "3*pi/20", "3pi/20",
    "-pi/4", "0.5*pi".
    """
    if isinstance(token, (int, float)):
        return float(token)
    text = str(token).strip()
    m = _ANGLE_RE.match(text)
    if m:
        k = float(m.group("k")) if m.group("k") else 1.0
        if m.group("sign") == "-":
            k = -k
        d = float(m.group("d")) if m.group("d") else 1.0
        if d == 0:
            raise ValueError(f"zero denominator in angle token {token!r}")
        return k * math.pi / d
    try:
        return float(text)
    except ValueError:
        raise ValueError(f"cannot parse angle {token!r}; use a float or a "
                         "'k*pi/m' token") from None


def parse_angles(text: str, count: int) -> tuple[float, ...]:
    """Parse ``count`` comma-separated angle tokens."""
    parts = str(text).split(",")
    if len(parts) != count:
        raise ValueError(f"expected {count} comma-separated angles, got {text!r}")
    return tuple(parse_angle(p) for p in parts)


def _fmt(x: float) -> str:
    """12 significant digits, no trailing noise: the file format's number."""
    return format(float(x), ".12g")


@dataclass(frozen=True)
class MetricSeries:
    """A metric evaluated at every step t = 0..T of one walk."""

    metric: str
    times: tuple[int, ...]
    values: tuple[float, ...]
    provenance: dict

    def __post_init__(self):
        if len(self.times) != len(self.values):
            raise ValueError("times and values must have equal length")
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError("metric values must be finite")


def _subsystem_indices(label: str, n: int) -> tuple[int, ...]:
    groups = {"P": (0,), "C": (1,), "G": tuple(range(2, n + 2))}
    letters = list(label)
    if not letters or len(set(letters)) != len(letters) \
            or any(ch not in groups for ch in letters):
        raise ValueError(f"bad subsystem label {label!r}; use letters from P, C, G")
    if set(letters) == {"P", "C", "G"}:
        raise ValueError("bipartition must be a proper subset of the subsystems")
    idx: tuple[int, ...] = ()
    for ch in sorted(set(letters), key="PCG".index):
        idx += groups[ch]
    return idx


def reference_density(kind: str, topology: GraphTopology) -> np.ndarray:
    """Density matrix of the named reference state on ``topology.n`` qubits."""
    if kind == "ghz":
        amps = ghz(topology.n).amplitudes
    elif kind == "w":
        amps = w_state(topology.n).amplitudes
    elif kind == "graph":
        amps = graph_state(topology).amplitudes
    else:
        raise ValueError(f"unknown reference state {kind!r}; pick from {TARGET_KINDS}")
    return np.outer(amps, amps.conj())


def _parse_metric(metric: str, topology: GraphTopology) \
        -> tuple[str, Callable[[PureState], float], dict]:
    """Resolve a metric name to (canonical name, per-state evaluator, extras)."""
    m = re.match(r"^\s*([a-z_]+)\s*(?:\((.*)\))?\s*$", metric)
    if not m:
        raise ValueError(f"cannot parse metric name {metric!r}")
    head, arg = m.group(1), (m.group(2) or "").strip()
    n = topology.n

    if head == "entropy":
        if not arg:
            raise ValueError("entropy needs a subsystem label, e.g. entropy(G)")
        keep = _subsystem_indices(arg, n)
        label = "".join(sorted(set(arg), key="PCG".index))
        return (f"entropy({label})",
                lambda s: von_neumann_entropy(s.reduced(keep)), {})

    if head == "logneg":
        if arg not in ("", "PC"):
            raise ValueError("only the walker-coin bipartition logneg(PC) is supported")
        return ("logneg(PC)",
                lambda s: log_negativity(s.reduced((0, 1)), (n, 2), (1,)), {})

    if head == "concurrence":
        if arg:
            raise ValueError("concurrence takes no arguments; use "
                             "concurrence_postselected(mu,nu) for conditioning")
        return ("concurrence",
                lambda s: n_concurrence(unconditioned_vertex_state(s), n), {})

    if head == "concurrence_postselected":
        if not arg:
            raise ValueError("concurrence_postselected needs (mu,nu)")
        mu, nu = parse_angles(arg, 2)
        proj = CoinProjection(mu, nu)

        def postselected(s: PureState) -> float:
            # A (numerically) impossible outcome contributes no conditional
            # state; the series records 0 there.
            try:
                rho, _ = postselect_coin(s, proj)
            except ZeroProbabilityError:
                return 0.0
            return n_concurrence(rho, n)

        return (f"concurrence_postselected({_fmt(mu)},{_fmt(nu)})",
                postselected, {"mu": mu, "nu": nu})

    if head == "closeness":
        if not arg:
            raise ValueError("closeness needs a reference state, e.g. closeness(graph)")
        target = reference_density(arg, topology)
        return (f"closeness({arg})",
                lambda s: closeness(unconditioned_vertex_state(s), target),
                {"target": arg})

    raise ValueError(f"unknown metric {metric!r}")


def run_metric_series(config: WalkConfig, metric: str) -> MetricSeries:
    """Evaluate one metric at every step of the configured walk."""
    name, evaluate, extras = _parse_metric(metric, config.topology)
    trajectory = evolve(config, trajectory=True)
    values = tuple(float(evaluate(s)) for s in trajectory)
    provenance = {
        "metric": name,
        "graph": config.topology.kind,
        "n": config.topology.n,
        "theta": config.coin.theta,
        "phi1": config.coin.phi1,
        "phi2": config.coin.phi2,
        **extras,
    }
    return MetricSeries(name, tuple(range(len(values))), values, provenance)


def default_angle_grid() -> tuple[float, ...]:
    """k*pi/20 for k = 0..20: every angle the figure datasets use."""
    return tuple(k * math.pi / 20 for k in range(21))


@dataclass(frozen=True)
class SweepSpec:
    """Exhaustive (theta, phi1, phi2, t) closeness maximization target."""

    topology: GraphTopology
    target: str
    thetas: tuple[float, ...] = ()
    phi1s: tuple[float, ...] = (0.0,)
    phi2s: tuple[float, ...] = ()
    steps: int = 100

    def __post_init__(self):
        if self.target not in TARGET_KINDS:
            raise ValueError(f"target must be one of {TARGET_KINDS}, got {self.target!r}")
        if self.steps < 1:
            raise ValueError("sweep needs steps >= 1")
        if not self.thetas:
            object.__setattr__(self, "thetas", default_angle_grid())
        if not self.phi2s:
            object.__setattr__(self, "phi2s", default_angle_grid())
        if not self.phi1s:
            object.__setattr__(self, "phi1s", (0.0,))

    def coins(self) -> list[CoinParams]:
        """Grid points in lexicographic (theta, phi1, phi2) order."""
        return [CoinParams(th, p1, p2)
                for th in self.thetas for p1 in self.phi1s for p2 in self.phi2s]


@dataclass(frozen=True)
class SweepResult:
    best_value: float
    best_coin: CoinParams
    best_t: int
    table: tuple[tuple[float, float, float, int, float], ...] | None = None


def _coin_best(task: tuple[GraphTopology, CoinParams, int, str]) -> tuple[float, int]:
    """Best closeness over t for one coin (earliest t on exact ties)."""
    topology, coin, steps, target_kind = task
    target = reference_density(target_kind, topology)
    trajectory = evolve(WalkConfig(topology, coin, steps), trajectory=True)
    values = np.array([closeness(unconditioned_vertex_state(s), target)
                       for s in trajectory])
    t = int(np.argmax(values))
    return float(values[t]), t


def run_sweep(spec: SweepSpec, *, jobs: int = 1, keep_table: bool = False) -> SweepResult:
    """Exhaustive grid maximization of closeness to the target state.

    The reduction is deterministic and independent of evaluation order:
    grid points are ranked by value with exact ties broken toward the
    lexicographically smallest (theta, phi1, phi2, t).
    """
    coins = spec.coins()
    tasks = [(spec.topology, coin, spec.steps, spec.target) for coin in coins]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_coin_best, tasks, chunksize=8))
    else:
        results = [_coin_best(t) for t in tasks]

    best_value, best_coin, best_t = -1.0, coins[0], 0
    table = []
    for coin, (value, t) in zip(coins, results):
        table.append((coin.theta, coin.phi1, coin.phi2, t, value))
        if value > best_value:
            best_value, best_coin, best_t = value, coin, t
    return SweepResult(best_value, best_coin, best_t,
                       tuple(table) if keep_table else None)


# ---------------------------------------------------------------------------
# File output

def series_csv(series: MetricSeries) -> str:
    p = series.provenance
    lines = [
        f"# iqwalk v1, metric={p['metric']}, graph={p['graph']}, n={p['n']}, "
        f"theta={_fmt(p['theta'])}, phi1={_fmt(p['phi1'])}, phi2={_fmt(p['phi2'])}",
        "t,value",
    ]
    lines += [f"{t},{_fmt(v)}" for t, v in zip(series.times, series.values)]
    return "\n".join(lines) + "\n"


def series_json(series: MetricSeries) -> str:
    payload = dict(series.provenance)
    payload["times"] = list(series.times)
    payload["values"] = [float(_fmt(v)) for v in series.values]
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def sweep_json(spec: SweepSpec, result: SweepResult) -> str:
    payload = {
        "target": spec.target,
        "graph": spec.topology.kind,
        "n": spec.topology.n,
        "steps": spec.steps,
        "grid_size": len(spec.thetas) * len(spec.phi1s) * len(spec.phi2s),
        "delta_tilde": float(_fmt(result.best_value)),
        "argmax": {
            "theta": float(_fmt(result.best_coin.theta)),
            "phi1": float(_fmt(result.best_coin.phi1)),
            "phi2": float(_fmt(result.best_coin.phi2)),
            "t": result.best_t,
        },
    }
    if result.table is not None:
        payload["table"] = [
            {"theta": float(_fmt(th)), "phi1": float(_fmt(p1)), "phi2": float(_fmt(p2)),
             "t": t, "value": float(_fmt(v))}
            for th, p1, p2, t, v in result.table
        ]
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _write(path: Path, text: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return path


def _series_file(out_dir: Path, fig: str, graph: str, coin_index: int,
                 suffix: str, config: WalkConfig, metric: str) -> Path:
    series = run_metric_series(config, metric)
    name = f"{fig}_{graph}_coin{coin_index}_{suffix}.csv"
    return _write(out_dir / name, series_csv(series))


def reproduce_figure(fig_id: str, out_dir: str | Path, *,
                     steps: int = 100, jobs: int = 1) -> list[Path]:
    """Write the CSV curves and JSON manifest for one figure dataset.

    fig2: entropy of the vertex, coin, and walker reductions, both graphs,
    four standard coins.  fig3: walker-coin log negativity, both graphs.
    fig4: vertex concurrence on the path graph (the cycle series is the
    degenerate all-zero one).  fig5: conditional vertex concurrence on the
    path graph for the two computational-basis coin projections.  fig6:
    grid-sweep closeness maxima for every target and both graphs.  fig7:
    cluster-state closeness on the cycle for the four best coins.
    """
    if fig_id not in FIGURE_IDS:
        raise ValueError(f"unknown figure id {fig_id!r}; pick from {FIGURE_IDS}")
    out = Path(out_dir)
    n = 4
    cycle, path = GraphTopology("cycle", n), GraphTopology("path", n)
    files: list[Path] = []
    manifest: dict = {"figure": fig_id, "n": n, "steps": steps}

    if fig_id == "fig2":
        for topology in (cycle, path):
            for i, coin in enumerate(STANDARD_COINS, start=1):
                cfg = WalkConfig(topology, coin, steps)
                for label in ("G", "C", "P"):
                    files.append(_series_file(out, fig_id, topology.kind, i,
                                              f"entropy_{label}", cfg, f"entropy({label})"))
    elif fig_id == "fig3":
        for topology in (cycle, path):
            for i, coin in enumerate(STANDARD_COINS, start=1):
                cfg = WalkConfig(topology, coin, steps)
                files.append(_series_file(out, fig_id, topology.kind, i,
                                          "logneg_PC", cfg, "logneg(PC)"))
    elif fig_id == "fig4":
        for i, coin in enumerate(STANDARD_COINS, start=1):
            cfg = WalkConfig(path, coin, steps)
            files.append(_series_file(out, fig_id, "path", i,
                                      "concurrence", cfg, "concurrence"))
    elif fig_id == "fig5":
        for i, coin in enumerate(STANDARD_COINS, start=1):
            cfg = WalkConfig(path, coin, steps)
            for tag, mu in (("mu0", "0"), ("muhalfpi", "pi/2")):
                files.append(_series_file(
                    out, fig_id, "path", i, f"concurrence_{tag}",
                    cfg, f"concurrence_postselected({mu},0)"))
    elif fig_id == "fig6":
        rows = ["target,graph,delta_tilde,theta,phi1,phi2,t"]
        summary = []
        for target in ("ghz", "graph", "w"):
            for topology in (cycle, path):
                spec = SweepSpec(topology, target, steps=steps)
                res = run_sweep(spec, jobs=jobs)
                rows.append(f"{target},{topology.kind},{_fmt(res.best_value)},"
                            f"{_fmt(res.best_coin.theta)},{_fmt(res.best_coin.phi1)},"
                            f"{_fmt(res.best_coin.phi2)},{res.best_t}")
                summary.append({"target": target, "graph": topology.kind,
                                "delta_tilde": float(_fmt(res.best_value))})
        files.append(_write(out / "fig6_sweep_summary.csv", "\n".join(rows) + "\n"))
        manifest["sweeps"] = summary
    elif fig_id == "fig7":
        for i, coin in enumerate(BEST_CLUSTER_COINS, start=1):
            cfg = WalkConfig(cycle, coin, steps)
            files.append(_series_file(out, fig_id, "cycle", i,
                                      "closeness_graph", cfg, "closeness(graph)"))

    manifest["files"] = sorted(f.name for f in files)
    manifest_path = _write(out / f"{fig_id}_manifest.json",
                           json.dumps(manifest, sort_keys=True, indent=2) + "\n")
    return files + [manifest_path]
