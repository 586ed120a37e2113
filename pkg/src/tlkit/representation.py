"""Generators of TL_N(d), ideal partition of the basis and the matrix
representation of left multiplication.

Sidedness: the product U.D stacks the generator ON TOP of the diagram
(``compose(D, U)``), the operator order in which the right factor acts
first.  Under this convention the bottom-to-bottom pairs of D survive
into U.D, so grouping diagrams by their bottom pairing pattern and
closing the groups under the generator action partitions the
identity-free basis into left ideals (8 + 5 diagrams for dimension 4).

Basis order for matrices: with the identity excluded, the ideal blocks
are sorted by their canonically smallest member and each block is sorted
canonically inside ("ideal-refined order"); generator matrices are then
block diagonal.  With the identity included, the plain canonical order of
the full basis is used.  Entry (j, i) of the matrix of U_k is d^m exactly
when U_k . D_i = d^m . D_j, so every column holds a single monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .composition import compose
from .diagrams import PlanarDiagram, ScaledDiagram
from .enumeration import DiagramBasis, identity_diagram
from .laurent import LaurentPoly
from .matrices import PolyMatrix


@dataclass(frozen=True)
class Generator:
    """U_k: a cup joining bottom nodes k, k+1, the matching top cap, and
    straight strands elsewhere."""

    index: int
    diagram: PlanarDiagram


def generator_diagram(dimension: int, k: int) -> PlanarDiagram:
    n = dimension
    if not 1 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range 1..{n - 1}")
    pairing = list(range(n + 1, 2 * n + 1)) + list(range(1, n + 1))
    pairing[k - 1] = k + 1
    pairing[k] = k
    pairing[n + k - 1] = n + k + 1
    pairing[n + k] = n + k
    return PlanarDiagram(n, tuple(pairing))


def generators(dimension: int) -> list[Generator]:
    """The N-1 generators U_1 .. U_{N-1}."""
    if dimension < 2:
        raise ValueError("generators exist only for dimension >= 2")
    return [
        Generator(k, generator_diagram(dimension, k))
        for k in range(1, dimension)
    ]


def left_multiply(generator: Generator, diagram: PlanarDiagram) -> ScaledDiagram:
    """U_k . D with the generator stacked on top."""
    return compose(diagram, generator.diagram)


@dataclass(frozen=True)
class IdealPartition:
    """Disjoint blocks of basis diagrams, each closed under left
    multiplication by every generator."""

    dimension: int
    blocks: tuple[tuple[PlanarDiagram, ...], ...]

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_of(self, diagram: PlanarDiagram) -> int:
        for i, block in enumerate(self.blocks):
            if diagram in block:
                return i
        raise KeyError(diagram)


def ideal_partition(basis: DiagramBasis, include_identity: bool = False) -> IdealPartition:
    """Group diagrams by bottom pairing pattern, then merge groups until
    each is closed under the generator action.

    The identity has no bottom pairs and multiplies into every ideal, so
    including it collapses the partition to a single block; excluded (the
    default), dimension 4 splits 8 + 5.
    """
    n = basis.dimension
    ident = identity_diagram(n)
    members = [d for d in basis if include_identity or d != ident]
    gens = generators(n) if n >= 2 else []

    parent = {d.bottom_pairs(): d.bottom_pairs() for d in members}

    def find(k):
        while parent[k] != k:
            k = parent[k]
        return k

    for d in members:
        for g in gens:
            image = left_multiply(g, d).diagram
            ra, rb = find(d.bottom_pairs()), find(image.bottom_pairs())
            if ra != rb:
                parent[rb] = ra

    grouped: dict[frozenset, list[PlanarDiagram]] = {}
    for d in members:
        grouped.setdefault(find(d.bottom_pairs()), []).append(d)
    blocks = tuple(
        tuple(sorted(block)) for block in grouped.values()
    )
    return IdealPartition(n, tuple(sorted(blocks, key=lambda b: b[0].pairing)))


def representation_basis(
    basis: DiagramBasis, include_identity: bool = False
) -> tuple[PlanarDiagram, ...]:
    """The documented basis order for generator matrices (see module
    docstring)."""
    if include_identity:
        return tuple(basis)
    partition = ideal_partition(basis, include_identity=False)
    return tuple(d for block in partition.blocks for d in block)


@dataclass(frozen=True)
class GeneratorMatrix:
    """Matrix of left multiplication by one generator over the ordered
    diagram basis; entries are Laurent polynomials in d."""

    generator_index: int
    include_identity: bool
    basis_order: tuple[PlanarDiagram, ...]
    matrix: PolyMatrix


def generator_matrix(
    k: int, basis: DiagramBasis, include_identity: bool = False
) -> GeneratorMatrix:
    """Build the matrix of U_k: column i holds d^m in the row of the
    product diagram, where U_k . D_i = d^m . D_j."""
    n = basis.dimension
    gen = Generator(k, generator_diagram(n, k))
    order = representation_basis(basis, include_identity)
    index = {d: i for i, d in enumerate(order)}
    size = len(order)
    zero = LaurentPoly.zero("d")
    grid = [[zero] * size for _ in range(size)]
    for i, d in enumerate(order):
        scaled = left_multiply(gen, d)
        j = index.get(scaled.diagram)
        if j is None:
            raise ValueError(
                "product left the chosen basis; identity excluded but reached"
            )
        grid[j][i] = LaurentPoly.monomial("d", scaled.loop_exponent)
    return GeneratorMatrix(
        k, include_identity, order, PolyMatrix.from_rows("d", grid)
    )


def generator_matrices(
    basis: DiagramBasis, include_identity: bool = False
) -> list[GeneratorMatrix]:
    return [
        generator_matrix(k, basis, include_identity)
        for k in range(1, basis.dimension)
    ]


@dataclass(frozen=True)
class RelationReport:
    """Named pass/fail results of a family of relation checks."""

    title: str
    entries: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.entries)

    def lines(self) -> list[str]:
        out = [self.title]
        for name, ok in self.entries:
            out.append(f"{name}: {'PASS' if ok else 'FAIL'}")
        out.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return out


def verify_tl_relations(matrices: Sequence[GeneratorMatrix]) -> RelationReport:
    """Check the defining relations on the generator matrices by exact
    polynomial arithmetic:

        U_i^2           = d U_i
        U_i U_{i+1} U_i = U_i
        U_i U_{i-1} U_i = U_i
        U_i U_j         = U_j U_i   for |i - j| >= 2
    """
    if not matrices:
        raise ValueError("no matrices given")
    sizes = {m.matrix.size for m in matrices}
    orders = {m.basis_order for m in matrices}
    if len(sizes) != 1 or len(orders) != 1:
        raise ValueError("matrices must share one basis and ordering")
    by_index = {m.generator_index: m.matrix for m in matrices}
    d = LaurentPoly.monomial("d", 1)
    entries: list[tuple[str, bool]] = []
    indices = sorted(by_index)
    for i in indices:
        u = by_index[i]
        entries.append((f"U_{i}^2 = d*U_{i}", u * u == u.scaled(d)))
    for i in indices:
        if i + 1 in by_index:
            u, v = by_index[i], by_index[i + 1]
            entries.append((f"U_{i}*U_{i + 1}*U_{i} = U_{i}", u * v * u == u))
    for i in indices:
        if i - 1 in by_index:
            u, v = by_index[i], by_index[i - 1]
            entries.append((f"U_{i}*U_{i - 1}*U_{i} = U_{i}", u * v * u == u))
    for i in indices:
        for j in indices:
            if j - i >= 2:
                u, v = by_index[i], by_index[j]
                entries.append((f"U_{i}*U_{j} = U_{j}*U_{i}", u * v == v * u))
    size = next(iter(sizes))
    return RelationReport(
        f"Temperley-Lieb relations, matrix level ({size}x{size})",
        tuple(entries),
    )


def verify_tl_relations_diagrams(dimension: int) -> RelationReport:
    """The same relations checked directly on diagrams via composition,
    independently of any matrix."""
    gens = {g.index: g.diagram for g in generators(dimension)}
    entries: list[tuple[str, bool]] = []
    indices = sorted(gens)
    for i in indices:
        u = gens[i]
        product = compose(u, u)
        entries.append(
            (
                f"U_{i}^2 = d*U_{i}",
                product.diagram == u and product.loop_exponent == 1,
            )
        )
    for i in indices:
        for j in (i + 1, i - 1):
            if j in gens:
                inner = compose(gens[i], gens[j])
                outer = compose(inner.diagram, gens[i])
                ok = (
                    outer.diagram == gens[i]
                    and inner.loop_exponent + outer.loop_exponent == 0
                )
                entries.append((f"U_{i}*U_{j}*U_{i} = U_{i}", ok))
    for i in indices:
        for j in indices:
            if j - i >= 2:
                left = compose(gens[j], gens[i])
                right = compose(gens[i], gens[j])
                entries.append((f"U_{i}*U_{j} = U_{j}*U_{i}", left == right))
    return RelationReport(
        "Temperley-Lieb relations, diagram level", tuple(entries)
    )
