"""Compute Hermite and Smith normal forms with unimodular certificates."""
import itertools
from typing import Final, Generic, List, Optional, Sequence, Tuple, TypeVar

import icontract
from icontract import ensure, require

from bezoutkit import grammar, kernel
from bezoutkit.classifier import (
    SEARCH_RADIUS,
    SMALL_RADIUS,
    constant_term,
    grid,
    grid_pairs,
    primes_not_dividing,
)
from bezoutkit.common import (
    MatrixTooLarge,
    NotUnimodular,
    RingMismatch,
    SearchExhausted,
)
from bezoutkit.exact import DEFAULT_FACTOR_BOUND, int_gcd_ext
from bezoutkit.henriksen import HenriksenRing, HSeries
from bezoutkit.integers import IntegerRing
from bezoutkit.kernel import Ring, Term

E = TypeVar("E")

#: Largest number of rows and columns accepted by the minor oracle
MAX_MINOR_DIMENSION = 5

#: Bound on the elimination rounds per pivot
_MAX_ROUNDS = 64


class Matrix(Generic[E]):
    """Represent an immutable rectangular matrix over a single ring."""

    ring: Final[Ring[E]]
    rows: Final[Tuple[Tuple[E, ...], ...]]

    @require(lambda rows: len(rows) >= 1 and len(rows[0]) >= 1)
    @require(lambda rows: all(len(row) == len(rows[0]) for row in rows))
    def __init__(self, ring: Ring[E], rows: Sequence[Sequence[E]]) -> None:
        """Initialize with the given values."""
        self.ring = ring
        self.rows = tuple(tuple(row) for row in rows)

    @property
    def row_count(self) -> int:
        """Return the number of rows."""
        return len(self.rows)

    @property
    def column_count(self) -> int:
        """Return the number of columns."""
        return len(self.rows[0])

    def __getitem__(self, index: Tuple[int, int]) -> E:
        return self.rows[index[0]][index[1]]

    def render(self) -> List[List[str]]:
        """Render the entries in the element grammar."""
        return [[self.ring.render(entry) for entry in row] for row in self.rows]

    def __repr__(self) -> str:
        return f"Matrix({'; '.join(', '.join(row) for row in self.render())})"


def identity(ring: Ring[E], size: int) -> Matrix[E]:
    """Build the identity matrix."""
    return Matrix(
        ring,
        [
            [ring.one() if i == j else ring.zero() for j in range(size)]
            for i in range(size)
        ],
    )


def parse_matrix(ring: Ring[E], text: str) -> Matrix[E]:
    """Parse the matrix text (``x,0;2,3`` or a JSON array of arrays)."""
    rows = grammar.split_matrix(text)
    matrix = Matrix(ring, [[ring.parse(entry) for entry in row] for row in rows])
    _check_size(matrix)
    return matrix


def _check_size(matrix: Matrix[E]) -> None:
    if max(matrix.row_count, matrix.column_count) > MAX_MINOR_DIMENSION:
        raise MatrixTooLarge(
            f"The matrix is {matrix.row_count}x{matrix.column_count}, "
            f"but at most {MAX_MINOR_DIMENSION}x{MAX_MINOR_DIMENSION} is supported"
        )


def _product_terms(factors: Sequence[Matrix[E]], i: int, j: int) -> List[Term[E]]:
    """List the terms of the (i, j) entry of the product of the factors."""
    terms = []  # type: List[Term[E]]
    dimensions = [factor.column_count for factor in factors[:-1]]
    for path in itertools.product(*(range(dimension) for dimension in dimensions)):
        indices = (i, *path, j)
        terms.append(
            (
                1,
                [
                    factor[indices[k], indices[k + 1]]
                    for k, factor in enumerate(factors)
                ],
            )
        )
    return terms


def multiply(*factors: Matrix[E]) -> Matrix[E]:
    """Multiply the matrices, evaluating each entry in one pass."""
    ring = factors[0].ring
    for left, right in zip(factors, factors[1:]):
        if right.ring is not ring:
            raise RingMismatch(
                f"Can not multiply a matrix over {ring} by one over {right.ring}"
            )
        if left.column_count != right.row_count:
            raise ValueError(
                f"Can not multiply a {left.row_count}x{left.column_count} matrix "
                f"by a {right.row_count}x{right.column_count} matrix"
            )

    return Matrix(
        ring,
        [
            [
                ring.linear_form(_product_terms(factors, i, j))
                for j in range(factors[-1].column_count)
            ]
            for i in range(factors[0].row_count)
        ],
    )


def _permutation_sign(permutation: Sequence[int]) -> int:
    inversions = sum(
        1
        for i in range(len(permutation))
        for j in range(i + 1, len(permutation))
        if permutation[i] > permutation[j]
    )
    return -1 if inversions % 2 == 1 else 1


@require(lambda matrix: matrix.row_count == matrix.column_count)
def determinant(matrix: Matrix[E]) -> E:
    """Compute the determinant by the permutation expansion."""
    _check_size(matrix)
    size = matrix.row_count
    return matrix.ring.linear_form(
        [
            (
                _permutation_sign(permutation),
                [matrix[i, permutation[i]] for i in range(size)],
            )
            for permutation in itertools.permutations(range(size))
        ]
    )


def minors(matrix: Matrix[E], order: int) -> List[E]:
    """List the determinants of all the ``order``×``order`` submatrices."""
    result = []  # type: List[E]
    for row_indices in itertools.combinations(range(matrix.row_count), order):
        for column_indices in itertools.combinations(
            range(matrix.column_count), order
        ):
            result.append(
                determinant(
                    Matrix(
                        matrix.ring,
                        [[matrix[i, j] for j in column_indices] for i in row_indices],
                    )
                )
            )
    return result


@ensure(
    lambda matrix, result: len(result)
    == min(matrix.row_count, matrix.column_count)
)
def minor_gcd_chain(matrix: Matrix[E]) -> List[E]:
    """
    Compute the determinantal divisors: the k-th entry is the gcd of the k×k minors.

    The chain is increasing in divisibility and independent of the algorithm which
    computes the Smith form, so it serves as the oracle for it.
    """
    _check_size(matrix)
    return [
        kernel.gcd_many(matrix.ring, minors(matrix, order))
        for order in range(1, min(matrix.row_count, matrix.column_count) + 1)
    ]


class _Workspace(Generic[E]):
    """Track P, D and Q with P·A·Q = D under elementary operations."""

    def __init__(self, ring: Ring[E], matrix: Matrix[E]) -> None:
        self.ring = ring
        self.d = [list(row) for row in matrix.rows]
        self.p = [list(row) for row in identity(ring, matrix.row_count).rows]
        self.q = [list(row) for row in identity(ring, matrix.column_count).rows]

    @property
    def row_count(self) -> int:
        return len(self.d)

    @property
    def column_count(self) -> int:
        return len(self.d[0])

    def _combine(self, first: E, second: E, x: E, y: E) -> E:
        return self.ring.linear_form([(1, [x, first]), (1, [y, second])])

    def combine_rows(
        self,
        i: int,
        j: int,
        alpha: E,
        beta: E,
        gamma: E,
        delta: E,
        settled: Sequence[int] = (),
    ) -> None:
        """
        Replace the rows with (α·row_i + β·row_j, γ·row_i + δ·row_j).

        The entries of D in the ``settled`` columns are left for the caller to set.
        """
        for grid in (self.d, self.p):
            skipped = settled if grid is self.d else ()
            first, second = grid[i], grid[j]
            grid[i] = [
                self._combine(x, y, alpha, beta) if k not in skipped else x
                for k, (x, y) in enumerate(zip(first, second))
            ]
            grid[j] = [
                self._combine(x, y, gamma, delta) if k not in skipped else y
                for k, (x, y) in enumerate(zip(first, second))
            ]

    def combine_columns(
        self,
        i: int,
        j: int,
        alpha: E,
        beta: E,
        gamma: E,
        delta: E,
        settled: Sequence[int] = (),
    ) -> None:
        """
        Replace the columns with (α·col_i + β·col_j, γ·col_i + δ·col_j).

        The entries of D in the ``settled`` rows are left for the caller to set.
        """
        for grid in (self.d, self.q):
            skipped = settled if grid is self.d else ()
            for k, row in enumerate(grid):
                if k in skipped:
                    continue
                first, second = row[i], row[j]
                row[i] = self._combine(first, second, alpha, beta)
                row[j] = self._combine(first, second, gamma, delta)

    def swap_rows(self, i: int, j: int) -> None:
        for grid in (self.d, self.p):
            grid[i], grid[j] = grid[j], grid[i]

    def swap_columns(self, i: int, j: int) -> None:
        for grid in (self.d, self.q):
            for row in grid:
                row[i], row[j] = row[j], row[i]

    def scale_row(self, i: int, unit: E) -> None:
        for grid in (self.d, self.p):
            grid[i] = [self.ring.multiply(unit, value) for value in grid[i]]

    def scale_column(self, j: int, unit: E) -> None:
        for grid in (self.d, self.q):
            for row in grid:
                row[j] = self.ring.multiply(row[j], unit)

    def eliminate_below(self, t: int, i: int) -> None:
        """Clear d[i][t] into the pivot d[t][t] by row operations."""
        ring = self.ring
        a, b = self.d[t][t], self.d[i][t]
        if ring.is_zero(b):
            return

        if kernel.divides(ring, a, b):
            factor = ring.div_exact(b, a)
            self.combine_rows(
                t,
                i,
                ring.one(),
                ring.zero(),
                ring.negate(factor),
                ring.one(),
                settled=[t],
            )
        else:
            cert = ring.gcd_ext(a, b)
            self.combine_rows(
                t, i, cert.u, cert.v, ring.negate(cert.b1), cert.a1, settled=[t]
            )
            self.d[t][t] = cert.g

        self.d[i][t] = ring.zero()

    def eliminate_right(self, t: int, j: int) -> None:
        """Clear d[t][j] into the pivot d[t][t] by column operations."""
        ring = self.ring
        a, b = self.d[t][t], self.d[t][j]
        if ring.is_zero(b):
            return

        if kernel.divides(ring, a, b):
            factor = ring.div_exact(b, a)
            self.combine_columns(
                t,
                j,
                ring.one(),
                ring.zero(),
                ring.negate(factor),
                ring.one(),
                settled=[t],
            )
        else:
            cert = ring.gcd_ext(a, b)
            self.combine_columns(
                t, j, cert.u, cert.v, ring.negate(cert.b1), cert.a1, settled=[t]
            )
            self.d[t][t] = cert.g

        self.d[t][j] = ring.zero()

    def freeze(self) -> Tuple[Matrix[E], Matrix[E], Matrix[E]]:
        return (
            Matrix(self.ring, self.p),
            Matrix(self.ring, self.d),
            Matrix(self.ring, self.q),
        )


def _is_lower_triangular(matrix: Matrix[E]) -> bool:
    return all(
        matrix.ring.is_zero(matrix[i, j])
        for i in range(matrix.row_count)
        for j in range(i + 1, matrix.column_count)
    )


def verify_hermite(
    matrix: Matrix[E], transform: Matrix[E], triangular: Matrix[E]
) -> List[Tuple[str, bool]]:
    """List the identities of a Hermite reduction with their verification outcome."""
    ring = matrix.ring
    return [
        (
            "A*U = T",
            all(
                ring.vanishes(
                    _product_terms([matrix, transform], i, j)
                    + [(-1, [triangular[i, j]])]
                )
                for i in range(triangular.row_count)
                for j in range(triangular.column_count)
            ),
        ),
        ("det(U) is a unit", ring.is_unit(determinant(transform))),
        ("T is lower triangular", _is_lower_triangular(triangular)),
    ]


@ensure(
    lambda matrix, result: all(
        passed for _, passed in verify_hermite(matrix, result[0], result[1])
    ),
    enabled=icontract.SLOW,
)
def hermite(matrix: Matrix[E]) -> Tuple[Matrix[E], Matrix[E]]:
    """
    Triangularize by column operations: return (U, T) with A·U = T.

    T is in column echelon form with canonical pivots and U is unimodular.
    """
    _check_size(matrix)
    ring = matrix.ring
    workspace = _Workspace(ring, matrix)

    pivot = 0
    for i in range(workspace.row_count):
        if pivot >= workspace.column_count:
            break

        for j in range(pivot + 1, workspace.column_count):
            a, b = workspace.d[i][pivot], workspace.d[i][j]
            if ring.is_zero(b):
                continue
            cert = ring.gcd_ext(a, b)
            workspace.combine_columns(
                pivot,
                j,
                cert.u,
                cert.v,
                ring.negate(cert.b1),
                cert.a1,
                settled=[i],
            )
            workspace.d[i][pivot] = cert.g
            workspace.d[i][j] = ring.zero()

        leading = workspace.d[i][pivot]
        if ring.is_zero(leading):
            continue

        if not ring.equal(leading, ring.canonical(leading)):
            workspace.scale_column(pivot, ring.unit_inverse(ring.unit_part(leading)))
            workspace.d[i][pivot] = ring.canonical(leading)

        pivot += 1

    _, triangular, transform = workspace.freeze()
    return transform, triangular


@require(lambda ring, a, b: not (ring.is_zero(a) and ring.is_zero(b)))
def diagonal_gcd_lcm(
    ring: Ring[E], a: E, b: E
) -> Tuple[Matrix[E], Matrix[E], Tuple[E, E]]:
    """
    Transform diag(a, b) into diag(g, a1·b) where g = gcd(a, b) and a = g·a1.

    Return (P, Q, (g, a1·b)) with P = [[u, v], [-b1, a1]] and
    Q = [[1, -v·b1], [1, u·a1]], both of determinant u·a1 + v·b1 = 1.
    """
    cert = ring.gcd_ext(a, b)
    one = ring.one()
    p = Matrix(ring, [[cert.u, cert.v], [ring.negate(cert.b1), cert.a1]])
    q = Matrix(
        ring,
        [
            [one, ring.negate(ring.multiply(cert.v, cert.b1))],
            [one, ring.multiply(cert.u, cert.a1)],
        ],
    )
    return p, q, (cert.g, ring.multiply(cert.a1, b))


class SmithCert(Generic[E]):
    """Certify P·A·Q = D with unimodular P and Q and a divisibility chain on D."""

    p: Final[Matrix[E]]
    q: Final[Matrix[E]]
    d: Final[Matrix[E]]

    #: Smallest precision of a truncated entry over H, None if all entries are exact
    verified_precision: Final[Optional[int]]

    def __init__(
        self,
        p: Matrix[E],
        q: Matrix[E],
        d: Matrix[E],
        verified_precision: Optional[int],
    ) -> None:
        """Initialize with the given values."""
        self.p = p
        self.q = q
        self.d = d
        self.verified_precision = verified_precision

    def diagonal(self) -> List[E]:
        """List the diagonal entries of D."""
        return [
            self.d[i, i] for i in range(min(self.d.row_count, self.d.column_count))
        ]


def _verified_precision(*matrices: Matrix[E]) -> Optional[int]:
    precisions = [
        entry.prec
        for matrix in matrices
        for row in matrix.rows
        for entry in row
        if isinstance(entry, HSeries) and entry.prec is not None
    ]
    return min(precisions) if len(precisions) > 0 else None


def verify_smith(matrix: Matrix[E], cert: SmithCert[E]) -> List[Tuple[str, bool]]:
    """
    List the identities of the Smith certificate with their verification outcome.

    Besides P·A·Q = D this checks every product of the leading diagonal entries
    against the determinantal divisor of the same order.
    """
    ring = matrix.ring
    d = cert.d
    diagonal = cert.diagonal()

    result = [
        (
            "P*A*Q = D",
            all(
                ring.vanishes(
                    _product_terms([cert.p, matrix, cert.q], i, j) + [(-1, [d[i, j]])]
                )
                for i in range(d.row_count)
                for j in range(d.column_count)
            ),
        ),
        (
            "D is diagonal",
            all(
                ring.is_zero(d[i, j])
                for i in range(d.row_count)
                for j in range(d.column_count)
                if i != j
            ),
        ),
        ("det(P) is a unit", ring.is_unit(determinant(cert.p))),
        ("det(Q) is a unit", ring.is_unit(determinant(cert.q))),
        (
            "d_ii divides d_(i+1)(i+1)",
            all(
                kernel.divides(ring, diagonal[i], diagonal[i + 1])
                for i in range(len(diagonal) - 1)
            ),
        ),
        (
            "diagonal entries are canonical",
            all(ring.equal(entry, ring.canonical(entry)) for entry in diagonal),
        ),
    ]  # type: List[Tuple[str, bool]]

    chain = minor_gcd_chain(matrix)
    product = ring.one()
    for order, (entry, divisor) in enumerate(zip(diagonal, chain), start=1):
        product = ring.multiply(product, entry)
        result.append(
            (
                f"d_11*...*d_kk ~ gcd of the {order}x{order} minors",
                kernel.associates(ring, product, divisor),
            )
        )

    return result


def verify_kaplansky(
    ring: Ring[E], a: E, b: E, c: E, p: E, q: E
) -> List[Tuple[str, bool]]:
    """List the identities of a Kaplansky reduction with their outcome."""
    left = ring.multiply(p, a)
    right = ring.linear_form([(1, [p, b]), (1, [q, c])])
    cert = kernel.gcd_ext(ring, left, right)
    return [
        ("gcd(p*a, p*b + q*c) is a unit", ring.is_unit(cert.g)),
        *kernel.verify_gcd_cert(ring, left, right, cert),
    ]


def _kaplansky_direct(
    ring: Ring[E], a: E, b: E, c: E, factor_bound: int
) -> Optional[Tuple[E, E]]:
    if ring.is_zero(a):
        cert = ring.gcd_ext(b, c)
        return cert.u, cert.v

    if not isinstance(ring, (IntegerRing, HenriksenRing)):
        return None

    alpha, beta, gamma = (constant_term(ring, element) for element in (a, b, c))
    if alpha == 0:
        # a lies in the radical, so p*b + q*c has to be a unit.
        _, p, q = int_gcd_ext(beta, gamma)
        return ring.from_int(p), ring.from_int(q)

    return ring.one(), ring.from_int(primes_not_dividing(alpha, beta, factor_bound))


def kaplansky_solve(
    ring: Ring[E], a: E, b: E, c: E, factor_bound: int = DEFAULT_FACTOR_BOUND
) -> Tuple[E, E]:
    """
    Find (p, q) with (p·a)R + (p·b + q·c)R = R for the unimodular triple (a, b, c).

    This is the reduction which makes a Bezout domain an elementary divisor ring.
    """
    if not kernel.is_unimodular(ring, [a, b, c]):
        raise NotUnimodular(
            f"The elements {ring.render(a)}, {ring.render(b)} and {ring.render(c)} "
            f"do not generate the unit ideal of {ring}"
        )

    def works(p: E, q: E) -> bool:
        return kernel.is_comaximal(
            ring,
            ring.multiply(p, a),
            ring.linear_form([(1, [p, b]), (1, [q, c])]),
        )

    if ring.is_unit(a):
        return ring.one(), ring.zero()

    for value in grid(SMALL_RADIUS):
        if works(ring.one(), ring.from_int(value)):
            return ring.one(), ring.from_int(value)

    direct = _kaplansky_direct(ring, a, b, c, factor_bound)
    if direct is not None and works(*direct):
        return direct

    for q_value, p_value in grid_pairs(SEARCH_RADIUS):
        p, q = ring.from_int(p_value), ring.from_int(q_value)
        if p_value != 0 and works(p, q):
            return p, q

    raise SearchExhausted(
        f"No (p, q) with |p|, |q| <= {SEARCH_RADIUS} solves the reduction of "
        f"({ring.render(a)}, {ring.render(b)}, {ring.render(c)}) in {ring}"
    )




def _diagonalize(workspace: _Workspace[E]) -> None:
    """Clear everything off the diagonal by alternating row and column gcd steps."""
    ring = workspace.ring
    d = workspace.d
    for t in range(min(workspace.row_count, workspace.column_count)):
        candidates = [
            (i, j)
            for i in range(t, workspace.row_count)
            for j in range(t, workspace.column_count)
            if not ring.is_zero(d[i][j])
        ]
        if len(candidates) == 0:
            return

        i, j = min(
            candidates, key=lambda index: ring.descent_measure(d[index[0]][index[1]])
        )
        workspace.swap_rows(t, i)
        workspace.swap_columns(t, j)

        for _ in range(_MAX_ROUNDS):
            for below in range(t + 1, workspace.row_count):
                workspace.eliminate_below(t, below)
            for right in range(t + 1, workspace.column_count):
                workspace.eliminate_right(t, right)

            if all(
                ring.is_zero(d[below][t])
                for below in range(t + 1, workspace.row_count)
            ):
                break
        else:
            raise SearchExhausted(
                f"The elimination at the pivot {t} did not settle "
                f"in {_MAX_ROUNDS} rounds"
            )


def _reduce_block(workspace: _Workspace[E], i: int, j: int, factor_bound: int) -> None:
    """
    Reduce the block [[a, 0], [b, c]] at rows and columns (i, j) so that its top-left
    entry divides the rest.

    The gcd g of the block is pulled out and the cofactors (a', b', c') are reduced
    by the Kaplansky pair (p, q): the column (p·a', p·b' + q·c') is unimodular, so
    one row gcd step leaves g in the corner.
    """
    ring = workspace.ring
    d = workspace.d
    a, b, c = d[i][i], d[j][i], d[j][j]
    g = kernel.gcd_many(ring, [a, b, c])
    if ring.is_zero(g):
        return

    reduced = [ring.div_exact(value, g) for value in (a, b, c)]
    p, q = kaplansky_solve(ring, *reduced, factor_bound=factor_bound)

    completion = ring.gcd_ext(p, q)
    workspace.combine_columns(i, j, p, q, ring.negate(completion.v), completion.u)

    workspace.eliminate_below(i, j)
    workspace.eliminate_right(i, j)


def _reduce_by_gcd_lcm(workspace: _Workspace[E], i: int, j: int) -> None:
    ring = workspace.ring
    p, q, (g, l) = diagonal_gcd_lcm(ring, workspace.d[i][i], workspace.d[j][j])
    workspace.combine_rows(
        i, j, p[0, 0], p[0, 1], p[1, 0], p[1, 1], settled=[i, j]
    )
    workspace.combine_columns(
        i, j, q[0, 0], q[1, 0], q[0, 1], q[1, 1], settled=[i, j]
    )
    workspace.d[i][i], workspace.d[j][j] = g, l
    workspace.d[i][j] = workspace.d[j][i] = ring.zero()


@ensure(
    lambda matrix, result: all(passed for _, passed in verify_smith(matrix, result)),
    enabled=icontract.SLOW,
)
def smith(matrix: Matrix[E], factor_bound: int = DEFAULT_FACTOR_BOUND) -> SmithCert[E]:
    """
    Compute the Smith normal form with its certificate.

    The matrix is triangularized, diagonalized by gcd steps, and the diagonal is
    brought into a divisibility chain by the Kaplansky block reduction (falling back
    to the gcd/lcm identity if the search for the Kaplansky pair fails).
    Finally the diagonal entries are made canonical.
    """
    _check_size(matrix)
    ring = matrix.ring

    transform, triangular = hermite(matrix)
    workspace = _Workspace(ring, triangular)
    workspace.q = [list(row) for row in transform.rows]

    _diagonalize(workspace)

    d = workspace.d
    rank = sum(
        1
        for t in range(min(workspace.row_count, workspace.column_count))
        if not ring.is_zero(d[t][t])
    )
    for i in range(rank):
        for j in range(i + 1, rank):
            if kernel.divides(ring, d[i][i], d[j][j]):
                continue
            try:
                _reduce_block(workspace, i, j, factor_bound)
            except SearchExhausted:
                _reduce_by_gcd_lcm(workspace, i, j)

    for t in range(rank):
        entry = d[t][t]
        canonical = ring.canonical(entry)
        if not ring.equal(entry, canonical):
            workspace.scale_row(t, ring.unit_inverse(ring.unit_part(entry)))
            d[t][t] = canonical

    p, diagonal, q = workspace.freeze()
    return SmithCert(p, q, diagonal, _verified_precision(p, q, diagonal))
