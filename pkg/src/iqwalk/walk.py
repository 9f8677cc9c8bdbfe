"""Interacting discrete-time quantum walk on path and cycle graphs.

The total Hilbert space is position (x) coin (x) one qubit per vertex, with
subsystem ordering ``(P, C, q_0, ..., q_{n-1})`` and big-endian flat
indexing.  One walk step applies, in order: the SU(2) coin on the coin
qubit, the conditional shift of the walker, and a controlled-Z between the
coin and the vertex qubit at the walker's new position.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import SubsystemShape, kron_all, reduced_density

# Ceiling on the site count for dense simulation; at n = 12 the vertex
# register's density matrix is already 4096 x 4096.
MAX_SITES = 12

GRAPH_KINDS = ("path", "cycle")


@dataclass(frozen=True)
class GraphTopology:
    """Path (L_n) or cycle (C_n) graph with ``n >= 2`` sites."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in GRAPH_KINDS:
            raise ValueError(f"kind must be one of {GRAPH_KINDS}, got {self.kind!r}")
        if self.n < 2:
            raise ValueError(f"need at least 2 sites, got n={self.n}")
        if self.n > MAX_SITES:
            raise ValueError(f"n={self.n} exceeds the dense-simulation ceiling "
                             f"MAX_SITES={MAX_SITES}")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Simple-graph edge list: n-1 chain edges, plus the wraparound edge
        for cycles (which collapses onto the chain edge when n=2)."""
        chain = [(i, i + 1) for i in range(self.n - 1)]
        if self.kind == "cycle" and self.n > 2:
            chain.append((self.n - 1, 0))
        return tuple(chain)


@dataclass(frozen=True)
class CoinParams:
    """Angles (theta, phi1, phi2) of the general SU(2) coin, in radians."""

    theta: float
    phi1: float = 0.0
    phi2: float = 0.0

    def astuple(self) -> tuple[float, float, float]:
        return (self.theta, self.phi1, self.phi2)


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized state vector together with its subsystem dimensions."""

    amplitudes: np.ndarray
    shape: SubsystemShape

    def __post_init__(self):
        amps = np.ascontiguousarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "amplitudes", amps)
        self.shape.check_vector(amps)
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-10:
            raise ValueError(f"state is not normalized: ||psi|| = {norm:.12g}")

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one axis per subsystem."""
        return self.amplitudes.reshape(self.shape.dims)

    def reduced(self, keep) -> np.ndarray:
        """Reduced density matrix on the subsystems in ``keep``."""
        return reduced_density(self.amplitudes, self.shape, keep)


def walk_shape(topology: GraphTopology) -> SubsystemShape:
    """Subsystem dims (n, 2, 2, ..., 2): position, coin, n vertex qubits."""
    return SubsystemShape((topology.n, 2) + (2,) * topology.n)


@dataclass(frozen=True)
class WalkConfig:
    """Everything needed to run a walk: graph, coin angles, step count, and
    the initial state (``None`` selects |0>_P |0>_C |+>^n)."""

    topology: GraphTopology
    coin: CoinParams
    steps: int
    initial: PureState | None = None

    def __post_init__(self):
        if self.steps < 0:
            raise ValueError(f"steps must be >= 0, got {self.steps}")
        if self.initial is not None and self.initial.shape != walk_shape(self.topology):
            raise ValueError("explicit initial state does not live on the walk's "
                             f"Hilbert space {walk_shape(self.topology).dims}")


def standard_initial_state(topology: GraphTopology) -> PureState:
    """|0>_P |0>_C (x) |+>^(n): walker at site 0, coin 0, all vertex qubits
    in the +1 eigenstate of sigma_x."""
    n = topology.n
    pos0 = np.zeros(n, dtype=complex)
    pos0[0] = 1.0
    coin0 = np.array([1.0, 0.0], dtype=complex)
    plus = np.full(2 ** n, 2.0 ** (-n / 2), dtype=complex)
    amps = np.kron(np.kron(pos0, coin0), plus)
    return PureState(amps, walk_shape(topology))


def build_coin(coin: CoinParams) -> np.ndarray:
    """General SU(2) coin matrix C(theta, phi1, phi2)."""
    th, p1, p2 = coin.theta, coin.phi1, coin.phi2
    c, s = np.cos(th / 2), np.sin(th / 2)
    return np.array([
        [np.exp(-0.5j * (p1 + p2)) * c, -np.exp(0.5j * (p2 - p1)) * s],
        [np.exp(0.5j * (p1 - p2)) * s, np.exp(0.5j * (p1 + p2)) * c],
    ])


def build_shift(topology: GraphTopology) -> np.ndarray:
    """Conditional shift on H_P (x) H_C, indexed as ``p*2 + c``.

    Coin 0 moves the walker one site down, coin 1 one site up.  On the
    cycle both moves wrap around; on the path the two boundary moves
    instead keep the walker in place and flip the coin, which is what
    keeps the operator unitary.
    """
    n = topology.n
    s = np.zeros((2 * n, 2 * n), dtype=complex)
    if topology.kind == "cycle":
        for i in range(n):
            s[((i - 1) % n) * 2 + 0, i * 2 + 0] = 1.0
            s[((i + 1) % n) * 2 + 1, i * 2 + 1] = 1.0
    else:
        for i in range(1, n):
            s[(i - 1) * 2 + 0, i * 2 + 0] = 1.0
        for i in range(n - 1):
            s[(i + 1) * 2 + 1, i * 2 + 1] = 1.0
        s[0 * 2 + 1, 0 * 2 + 0] = 1.0              # reflect at site 0, coin 0 -> 1
        s[(n - 1) * 2 + 0, (n - 1) * 2 + 1] = 1.0  # reflect at site n-1, coin 1 -> 0
    return s


def interaction_diagonal(topology: GraphTopology) -> np.ndarray:
    """Diagonal (+-1 entries) of the position-controlled CZ.

    A basis state |i>_P |c>_C |b_0 ... b_{n-1}> picks up phase -1 exactly
    when the coin is 1 and the vertex qubit at the walker's position is 1.
    """
    n = topology.n
    g_dim = 2 ** n
    g = np.arange(g_dim)
    diag = np.ones((n, 2, g_dim))
    for i in range(n):
        bit_i = (g >> (n - 1 - i)) & 1
        diag[i, 1, :] = 1.0 - 2.0 * bit_i
    return diag.reshape(-1).astype(complex)


def build_interaction(topology: GraphTopology) -> np.ndarray:
    """Position-controlled CZ as a dense diagonal matrix on the full space."""
    return np.diag(interaction_diagonal(topology))


def build_step(config: WalkConfig) -> np.ndarray:
    """One-step propagator U = CZ . (S (x) 1_G) . (1_P (x) C (x) 1_G).

    Both shift and coin act as identity on the vertex register, so their
    product is ``(S . (1_P (x) C)) (x) 1_G``; only the final CZ couples
    walker and register.
    """
    n = config.topology.n
    coin_mat = build_coin(config.coin)
    shift = build_shift(config.topology)
    walker_part = shift @ kron_all([np.eye(n), coin_mat])
    step = np.kron(walker_part, np.eye(2 ** n))
    return interaction_diagonal(config.topology)[:, None] * step


def _apply_step(tensor: np.ndarray, coin_mat: np.ndarray, shift: np.ndarray,
                diag: np.ndarray) -> np.ndarray:
    """Apply one walk step to the state tensor of shape (n, 2, 2**n)."""
    n, _, g_dim = tensor.shape
    t = np.einsum("cd,pdg->pcg", coin_mat, tensor)
    t = (shift @ t.reshape(2 * n, g_dim)).reshape(n, 2, g_dim)
    t = t.reshape(-1) * diag
    return t.reshape(n, 2, g_dim)


def evolve(config: WalkConfig, *, trajectory: bool = False) -> PureState | list[PureState]:
    """Run the walk for ``config.steps`` steps.

    Applies the step operator to the state vector factor by factor (coin,
    shift, CZ) rather than ever forming its ``t``-th power.  Returns the
    final state, or the whole trajectory ``[psi(0), ..., psi(T)]`` when
    ``trajectory=True``.
    """
    shape = walk_shape(config.topology)
    state = config.initial if config.initial is not None \
        else standard_initial_state(config.topology)

    coin_mat = build_coin(config.coin)
    shift = build_shift(config.topology)
    diag = interaction_diagonal(config.topology)

    tensor = state.amplitudes.reshape(config.topology.n, 2, -1).copy()
    states = [state]
    for _ in range(config.steps):
        tensor = _apply_step(tensor, coin_mat, shift, diag)
        if trajectory:
            states.append(PureState(tensor.reshape(-1).copy(), shape))
    if trajectory:
        return states
    if config.steps == 0:
        return state
    return PureState(tensor.reshape(-1), shape)
