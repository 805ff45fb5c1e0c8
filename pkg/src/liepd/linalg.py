"""Exact dense linear algebra over QQ or GF(p) on keyed coordinate spaces.

Every subspace lives in an :class:`Ambient`, an ordered finite list of basis
keys (Lyndon words, module words, tagged PD keys ...).  Vectors travel as
``{key: coefficient}`` dicts; internally rows are dense lists kept in reduced
row echelon form, so two subspaces are equal iff their rows are equal.
"""


class Ambient:
    __slots__ = ("keys", "index")

    def __init__(self, keys):
        self.keys = tuple(keys)
        self.index = {k: i for i, k in enumerate(self.keys)}
        if len(self.index) != len(self.keys):
            raise ValueError("duplicate ambient keys")

    def __len__(self):
        return len(self.keys)

    def __eq__(self, other):
        return isinstance(other, Ambient) and self.keys == other.keys

    def __hash__(self):
        return hash(self.keys)

    def __contains__(self, key):
        return key in self.index

    def dense(self, vec, field):
        row = [field.zero] * len(self.keys)
        for k, c in vec.items():
            try:
                row[self.index[k]] = field(c)
            except KeyError:
                raise KeyError(f"{k!r} is outside the ambient slice") from None
        return row

    def sparse(self, row):
        return {self.keys[i]: c for i, c in enumerate(row) if c}


def _rref(rows, ncols):
    """Reduced row echelon form of ``rows`` (consumed).  Returns (rows, pivots)."""
    out = []
    pivots = []
    r = 0
    rows = [list(row) for row in rows if any(row)]
    for col in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        if lead != 1:
            inv = 1 / lead
            rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    out = [tuple(row) for row in rows[:r]]
    return out, pivots


class Subspace:
    """Finite-dimensional subspace of ``field^ambient`` in canonical RREF."""

    __slots__ = ("ambient", "field", "rows", "pivots")

    def __init__(self, ambient, field, vectors=()):
        self.ambient = ambient
        self.field = field
        dense = [ambient.dense(v, field) for v in vectors]
        self.rows, self.pivots = _rref(dense, len(ambient))

    @classmethod
    def _from_rows(cls, ambient, field, rows):
        obj = cls.__new__(cls)
        obj.ambient = ambient
        obj.field = field
        obj.rows, obj.pivots = _rref(rows, len(ambient))
        return obj

    @classmethod
    def full(cls, ambient, field):
        return cls(ambient, field, [{k: field.one} for k in ambient.keys])

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [self.ambient.sparse(row) for row in self.rows]

    def _reduce(self, row):
        row = list(row)
        for prow, col in zip(self.rows, self.pivots):
            f = row[col]
            if f:
                row = [a - f * b for a, b in zip(row, prow)]
        return row

    def contains(self, vec):
        try:
            row = self.ambient.dense(vec, self.field)
        except KeyError:
            return False
        return not any(self._reduce(row))

    __contains__ = contains

    def _check(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise ValueError("subspaces live in different ambients")

    def issubset(self, other):
        self._check(other)
        return all(not any(other._reduce(row)) for row in self.rows)

    __le__ = issubset

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient == other.ambient and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient, tuple(self.rows)))

    def join(self, other):
        self._check(other)
        return Subspace._from_rows(self.ambient, self.field, list(self.rows) + list(other.rows))

    def intersection(self, other):
        self._check(other)
        if not self.rows or not other.rows:
            return Subspace(self.ambient, self.field)
        # (a, b) with sum a_i u_i = sum b_j w_j
        n = len(self.ambient)
        cols = [list(r) for r in self.rows] + [[-x for x in r] for r in other.rows]
        mat = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
        null = nullspace(mat, len(cols), self.field)
        vecs = []
        for coeffs in null:
            row = [self.field.zero] * n
            for a, r in zip(coeffs[:len(self.rows)], self.rows):
                if a:
                    row = [x + a * y for x, y in zip(row, r)]
            vecs.append(row)
        return Subspace._from_rows(self.ambient, self.field, vecs)

    def restrict(self, sub_ambient):
        """Intersection with the coordinate subspace spanned by ``sub_ambient``,
        re-expressed in ``sub_ambient`` coordinates."""
        outside = [k for k in self.ambient.keys if k not in sub_ambient.index]
        order = Ambient(outside + list(sub_ambient.keys))
        moved = Subspace(order, self.field, self.basis())
        keep = []
        for row, col in zip(moved.rows, moved.pivots):
            if col >= len(outside):
                keep.append(order.sparse(row))
        return Subspace(sub_ambient, self.field, keep)

    def extend(self, big_ambient):
        """The same vectors viewed inside a larger ambient."""
        return Subspace(big_ambient, self.field, self.basis())

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {len(self.ambient)})"


def nullspace(matrix, ncols, field):
    """Basis (list of dense rows) of {x : matrix x = 0}."""
    rows, pivots = _rref([list(r) for r in matrix], ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        vec = [field.zero] * ncols
        vec[f] = field.one
        for row, p in zip(rows, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def kernel(ambient, field, images):
    """Kernel of the linear map sending ``ambient.keys[i]`` to ``images[i]``.

    ``images`` are sparse dicts over arbitrary hashable target keys.
    """
    targets = sorted({t for img in images for t in img}, key=repr)
    tindex = {t: i for i, t in enumerate(targets)}
    n = len(ambient)
    mat = [[field.zero] * n for _ in targets]
    for j, img in enumerate(images):
        for t, c in img.items():
            mat[tindex[t]][j] = field(c)
    null = nullspace(mat, n, field) if targets else [
        [field.one if i == j else field.zero for i in range(n)] for j in range(n)]
    return Subspace._from_rows(ambient, field, null)


def rank(vectors, field):
    """Rank of a list of sparse vectors."""
    keys = sorted({k for v in vectors for k in v}, key=repr)
    amb = Ambient(keys)
    return Subspace(amb, field, vectors).dim


def inverse(columns, ambient, field):
    """Inverse of the square matrix whose k-th column is the sparse vector
    ``columns[k]`` over ``ambient``; returned as a function mapping a sparse
    vector to its coefficient list.  None when the matrix is singular."""
    n = len(ambient)
    if len(columns) != n:
        return None
    rows = [[field.zero] * (2 * n) for _ in range(n)]
    for j, col in enumerate(columns):
        for key, c in col.items():
            rows[ambient.index[key]][j] = field(c)
    for i in range(n):
        rows[i][n + i] = field.one
    red, pivots = _rref(rows, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        return None
    inv = [row[n:] for row in red[:n]]

    def apply(vec):
        v = ambient.dense(vec, field)
        return [sum((a * b for a, b in zip(row, v) if a and b), field.zero) for row in inv]

    return apply
