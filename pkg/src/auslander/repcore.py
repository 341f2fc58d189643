"""Representations of the Auslander algebra of k[x]/(x^t).

The quiver has vertices 1..t, forward arrows alpha_j: j -> j+1 and backward
arrows beta_j: j+1 -> j (j = 1..t-1), bound by beta_1 alpha_1 = 0 at vertex 1
and alpha_{j-1} beta_{j-1} = beta_j alpha_j at vertices 2..t-1.

Storage is 0-based: ``rep.alpha[j - 1]`` is the matrix of alpha_j, shape
(m_{j+1}, m_j), and ``rep.beta[j - 1]`` is beta_j, shape (m_j, m_{j+1}).
Vertex arguments to public functions are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import exact
from .exact import identity, zeros

__all__ = [
    "QuiverAlgebra", "Representation", "Morphism", "ThinModule",
    "make_algebra", "check_relations", "simple", "projective", "injective",
    "delta", "nabla", "rank", "direct_sum", "zero_rep", "thin_canonical_form",
    "worm_to_rep", "subrepresentation", "quotient", "path_action",
]


@dataclass(frozen=True)
class QuiverAlgebra:
    t: int

    def __post_init__(self):
        if not isinstance(self.t, int) or self.t < 1:
            raise ValueError(f"t must be a positive integer, got {self.t!r}")

    @property
    def vertices(self) -> range:
        return range(1, self.t + 1)

    @property
    def arrows(self) -> list[tuple[str, int, int]]:
        """(name, source, target) for every arrow."""
        out = [(f"alpha{j}", j, j + 1) for j in range(1, self.t)]
        out += [(f"beta{j}", j + 1, j) for j in range(1, self.t)]
        return out

    @property
    def relations(self) -> list[str]:
        if self.t == 1:
            return []
        out = ["beta1*alpha1 = 0"]
        out += [f"alpha{j - 1}*beta{j - 1} = beta{j}*alpha{j}" for j in range(2, self.t)]
        return out


def make_algebra(t: int) -> QuiverAlgebra:
    return QuiverAlgebra(t)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=object)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class Representation:
    """A finite-dimensional representation; immutable after construction."""

    algebra: QuiverAlgebra
    dims: tuple[int, ...]
    alpha: tuple[np.ndarray, ...]
    beta: tuple[np.ndarray, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        t = self.algebra.t
        dims = tuple(int(d) for d in self.dims)
        if len(dims) != t or any(d < 0 for d in dims):
            raise ValueError(f"bad dimension vector {self.dims} for t={t}")
        if len(self.alpha) != t - 1 or len(self.beta) != t - 1:
            raise ValueError("need t-1 alpha and t-1 beta matrices")
        alpha = tuple(_frozen(a) for a in self.alpha)
        beta = tuple(_frozen(b) for b in self.beta)
        for j in range(t - 1):
            if alpha[j].shape != (dims[j + 1], dims[j]):
                raise ValueError(f"alpha{j + 1} has shape {alpha[j].shape}, "
                                 f"expected {(dims[j + 1], dims[j])}")
            if beta[j].shape != (dims[j], dims[j + 1]):
                raise ValueError(f"beta{j + 1} has shape {beta[j].shape}, "
                                 f"expected {(dims[j], dims[j + 1])}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def t(self) -> int:
        return self.algebra.t

    @property
    def udim(self) -> tuple[int, ...]:
        return self.dims

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.algebra == other.algebra and self.dims == other.dims
                and all(np.array_equal(a, b) for a, b in zip(self.alpha, other.alpha))
                and all(np.array_equal(a, b) for a, b in zip(self.beta, other.beta)))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Representation{label} t={self.t} udim={self.dims}>"


def zero_rep(algebra: QuiverAlgebra) -> Representation:
    t = algebra.t
    return Representation(algebra, (0,) * t,
                          tuple(zeros(0, 0) for _ in range(t - 1)),
                          tuple(zeros(0, 0) for _ in range(t - 1)), name="0")


def check_relations(rep: Representation) -> bool:
    t = rep.t
    if t == 1:
        return True
    a, b = rep.alpha, rep.beta
    if not exact.is_zero(b[0] @ a[0]):
        return False
    for v in range(2, t):
        lhs = a[v - 2] @ b[v - 2]
        rhs = b[v - 1] @ a[v - 1]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def rank(rep: Representation) -> int:
    return rep.dims[-1]


def _check_vertex(algebra: QuiverAlgebra, i: int) -> None:
    if not 1 <= i <= algebra.t:
        raise ValueError(f"vertex {i} out of range 1..{algebra.t}")


def _from_maps(algebra, dims, alpha, beta, name="") -> Representation:
    return Representation(algebra, tuple(dims), tuple(alpha), tuple(beta), name=name)


def simple(algebra: QuiverAlgebra, i: int) -> Representation:
    _check_vertex(algebra, i)
    t = algebra.t
    dims = [1 if v == i else 0 for v in range(1, t + 1)]
    alpha = [zeros(dims[j + 1], dims[j]) for j in range(t - 1)]
    beta = [zeros(dims[j], dims[j + 1]) for j in range(t - 1)]
    return _from_maps(algebra, dims, alpha, beta, f"S({i})")


def _valley_maps(t: int, i: int):
    """Path-basis maps for P(i).

    A basis of e_j A e_i is given by the paths that go down from i to a valley
    m and then up to j, for m = 1..min(i, j). Post-composing with alpha keeps
    the valley; post-composing with beta pushes the valley down by one (and
    kills it at m = 1), except on the purely descending path.
    """
    dims = [min(i, j) for j in range(1, t + 1)]
    up, down = [], []
    for j in range(1, t):
        a = zeros(dims[j], dims[j - 1])
        for m in range(1, dims[j - 1] + 1):
            a[m - 1, m - 1] = 1
        b = zeros(dims[j - 1], dims[j])
        for m in range(1, dims[j] + 1):
            if m == j + 1:
                b[j - 1, m - 1] = 1
            elif m >= 2:
                b[m - 2, m - 1] = 1
        up.append(a)
        down.append(b)
    return dims, up, down


def projective(algebra: QuiverAlgebra, i: int) -> Representation:
    """P(i) = A e_i built from its path basis; generator at vertex i is the last basis vector."""
    _check_vertex(algebra, i)
    dims, up, down = _valley_maps(algebra.t, i)
    return _from_maps(algebra, dims, up, down, f"P({i})")


def injective(algebra: QuiverAlgebra, i: int) -> Representation:
    """I(i) = D(e_i A); the dual path basis turns precomposition into transposes."""
    _check_vertex(algebra, i)
    dims, up, down = _valley_maps(algebra.t, i)
    alpha = [b.T.copy() for b in down]
    beta = [a.T.copy() for a in up]
    return _from_maps(algebra, dims, alpha, beta, f"I({i})")


def _thin_rep(algebra: QuiverAlgebra, start: int, end: int, word: str, name="") -> Representation:
    t = algebra.t
    dims = [1 if start <= v <= end else 0 for v in range(1, t + 1)]
    alpha = [zeros(dims[j + 1], dims[j]) for j in range(t - 1)]
    beta = [zeros(dims[j], dims[j + 1]) for j in range(t - 1)]
    for k, letter in enumerate(word):
        j = start + k  # edge between vertices j and j+1
        if letter == "A":
            alpha[j - 1][0, 0] = 1
        else:
            beta[j - 1][0, 0] = 1
    return _from_maps(algebra, dims, alpha, beta, name)


def delta(algebra: QuiverAlgebra, i: int) -> Representation:
    """Delta(i): i-dimensional, supported on t+1-i..t, every alpha the identity."""
    _check_vertex(algebra, i)
    t = algebra.t
    return _thin_rep(algebra, t + 1 - i, t, "A" * (i - 1), f"Delta({i})")


def nabla(algebra: QuiverAlgebra, i: int) -> Representation:
    """Nabla(i): same support as Delta(i), every beta the identity."""
    _check_vertex(algebra, i)
    t = algebra.t
    return _thin_rep(algebra, t + 1 - i, t, "B" * (i - 1), f"Nabla({i})")


def direct_sum(a: Representation, b: Representation) -> Representation:
    if a.algebra != b.algebra:
        raise ValueError("representations over different algebras")
    t = a.t
    dims = [x + y for x, y in zip(a.dims, b.dims)]
    alpha = [exact.block_diag([a.alpha[j], b.alpha[j]]) for j in range(t - 1)]
    beta = [exact.block_diag([a.beta[j], b.beta[j]]) for j in range(t - 1)]
    name = f"{a.name}+{b.name}" if a.name and b.name else ""
    return _from_maps(a.algebra, dims, alpha, beta, name)


def path_action(rep: Representation, source: int, valley: int, target: int,
                vectors: np.ndarray) -> np.ndarray:
    """Apply the path source -> valley (betas) -> target (alphas) to columns in M_source."""
    x = vectors
    for j in range(source - 1, valley - 1, -1):
        x = rep.beta[j - 1] @ x
    for j in range(valley, target):
        x = rep.alpha[j - 1] @ x
    return x


# -- morphisms, sub- and quotient representations ---------------------------

@dataclass(frozen=True, eq=False)
class Morphism:
    """comps[v-1]: M_v -> N_v, shape (n_v, m_v)."""

    source: Representation
    target: Representation
    comps: tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.source.algebra != self.target.algebra:
            raise ValueError("morphism between different algebras")
        comps = tuple(_frozen(c) for c in self.comps)
        for v, c in enumerate(comps):
            if c.shape != (self.target.dims[v], self.source.dims[v]):
                raise ValueError(f"component {v + 1} has wrong shape {c.shape}")
        if len(comps) != self.source.t:
            raise ValueError("need one component per vertex")
        object.__setattr__(self, "comps", comps)

    def commutes(self) -> bool:
        m, n, f = self.source, self.target, self.comps
        for j in range(m.t - 1):
            if not np.array_equal(f[j + 1] @ m.alpha[j], n.alpha[j] @ f[j]):
                return False
            if not np.array_equal(f[j] @ m.beta[j], n.beta[j] @ f[j + 1]):
                return False
        return True

    def is_zero(self) -> bool:
        return all(exact.is_zero(c) for c in self.comps)

    def is_injective(self) -> bool:
        return all(exact.rank(c) == c.shape[1] for c in self.comps)

    def is_surjective(self) -> bool:
        return all(exact.rank(c) == c.shape[0] for c in self.comps)

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def then(self, other: "Morphism") -> "Morphism":
        """Composite other . self."""
        return Morphism(self.source, other.target,
                        tuple(g @ f for f, g in zip(self.comps, other.comps)))

    def vector(self) -> list:
        return exact.flatten(self.comps)

    def kernel(self) -> tuple[Representation, "Morphism"]:
        spaces = []
        for c in self.comps:
            basis = exact.nullspace(c)
            mat = zeros(c.shape[1], len(basis))
            for k, v in enumerate(basis):
                mat[:, k] = v
            spaces.append(mat)
        return subrepresentation(self.source, spaces)

    def image_spaces(self) -> list[np.ndarray]:
        return [exact.column_space(c) for c in self.comps]

    def cokernel(self) -> tuple[Representation, "Morphism"]:
        return quotient(self.target, self.image_spaces())


def identity_morphism(rep: Representation) -> Morphism:
    return Morphism(rep, rep, tuple(identity(d) for d in rep.dims))


def subrepresentation(rep: Representation, spaces: Sequence[np.ndarray]
                      ) -> tuple[Representation, Morphism]:
    """Subrepresentation spanned by the columns of ``spaces[v-1]`` (independent)."""
    t = rep.t
    dims = [s.shape[1] for s in spaces]
    alpha, beta = [], []
    try:
        for j in range(t - 1):
            alpha.append(exact.solve(spaces[j + 1], rep.alpha[j] @ spaces[j]))
            beta.append(exact.solve(spaces[j], rep.beta[j] @ spaces[j + 1]))
    except ValueError:
        raise ValueError("subspaces are not closed under the arrows") from None
    sub = _from_maps(rep.algebra, dims, alpha, beta)
    return sub, Morphism(sub, rep, tuple(spaces))


def quotient(rep: Representation, spaces: Sequence[np.ndarray]
             ) -> tuple[Representation, Morphism]:
    """rep / U where U is spanned by the columns of ``spaces``; returns (quotient, projection)."""
    t = rep.t
    frames, proj, dims = [], [], []
    for v in range(t):
        u = spaces[v]
        n = rep.dims[v]
        extra = exact.complete_basis(u)
        e = zeros(n, len(extra))
        for k, idx in enumerate(extra):
            e[idx, k] = 1
        frame = exact.hstack([u, e], n)
        frames.append((u.shape[1], frame, e))
        coords = exact.solve(frame, identity(n)) if n else zeros(0, 0)
        proj.append(coords[u.shape[1]:, :])
        dims.append(len(extra))
    alpha, beta = [], []
    for j in range(t - 1):
        k1, f1, e0 = frames[j + 1][0], frames[j + 1][1], frames[j][2]
        alpha.append(exact.solve(f1, rep.alpha[j] @ e0)[k1:, :])
        k0, f0, e1 = frames[j][0], frames[j][1], frames[j + 1][2]
        beta.append(exact.solve(f0, rep.beta[j] @ e1)[k0:, :])
    quo = _from_maps(rep.algebra, dims, alpha, beta)
    return quo, Morphism(rep, quo, tuple(proj))


# -- thin modules -----------------------------------------------------------

_THIN_RE = re.compile(r"^\s*(\d+)(?:-(\d+))?:([AB]*)\s*$")


@dataclass(frozen=True, order=True)
class ThinModule:
    """Indecomposable thin module: k on vertices start..end, one arrow per edge.

    ``word[k]`` names the nonzero map on the edge between vertices start+k and
    start+k+1: ``A`` for alpha, ``B`` for beta.
    """

    t: int
    start: int
    end: int
    word: str

    def __post_init__(self):
        if not 1 <= self.start <= self.end <= self.t:
            raise ValueError(f"need 1 <= start <= end <= t, got {self.start}, {self.end}, t={self.t}")
        if len(self.word) != self.end - self.start or set(self.word) - {"A", "B"}:
            raise ValueError(f"word {self.word!r} must have length {self.end - self.start} over A,B")

    @classmethod
    def parse(cls, text: str, t: int) -> "ThinModule":
        """Parse ``"<start>:<word>"`` (ends at t) or ``"<start>-<end>:<word>"``."""
        m = _THIN_RE.match(text)
        if not m:
            raise ValueError(f"malformed worm string {text!r}")
        start = int(m.group(1))
        word = m.group(3)
        end = int(m.group(2)) if m.group(2) else start + len(word)
        if m.group(2) is None and end != t:
            raise ValueError(f"worm {text!r} must end at vertex t={t}; use start-end:word")
        return cls(t, start, end, word)

    def __str__(self) -> str:
        if self.end == self.t:
            return f"{self.start}:{self.word}"
        return f"{self.start}-{self.end}:{self.word}"

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def udim(self) -> tuple[int, ...]:
        return tuple(1 if self.start <= v <= self.end else 0 for v in range(1, self.t + 1))

    @property
    def rank(self) -> int:
        return 1 if self.end == self.t else 0

    @property
    def is_exceptional(self) -> bool:
        return self.end == self.t

    def letter(self, j: int) -> str | None:
        """Letter on the edge between vertices j and j+1, or None outside the support."""
        if self.start <= j < self.end:
            return self.word[j - self.start]
        return None

    def to_rep(self, algebra: QuiverAlgebra | None = None) -> Representation:
        algebra = algebra or QuiverAlgebra(self.t)
        if algebra.t != self.t:
            raise ValueError("algebra size mismatch")
        return _thin_rep(algebra, self.start, self.end, self.word, str(self))


def worm_to_rep(m: ThinModule) -> Representation:
    return m.to_rep()


def thin_canonical_form(rep: Representation) -> ThinModule | None:
    """Word encoding of ``rep`` if it is an indecomposable thin module, else None."""
    dims = rep.dims
    if any(d > 1 for d in dims):
        return None
    support = [v for v in range(1, rep.t + 1) if dims[v - 1] == 1]
    if not support:
        return None
    start, end = support[0], support[-1]
    if end - start + 1 != len(support):
        return None
    word = []
    for j in range(start, end):
        a = rep.alpha[j - 1][0, 0] != 0
        b = rep.beta[j - 1][0, 0] != 0
        if a == b:
            return None
        word.append("A" if a else "B")
    return ThinModule(rep.t, start, end, "".join(word))
