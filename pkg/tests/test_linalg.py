from hypothesis import given, strategies as st

from liepd.linalg import Ambient, Subspace, inverse, kernel
from liepd.scalars import GF, QQ

AMB = Ambient(["a", "b", "c", "d"])
vectors = st.lists(st.dictionaries(st.sampled_from(AMB.keys), st.integers(-2, 2), max_size=4), max_size=3)


@given(vectors, vectors, st.sampled_from([QQ, GF(2), GF(3)]))
def test_dimension_formula(us, vs, field):
    U, V = Subspace(AMB, field, us), Subspace(AMB, field, vs)
    I = U.intersection(V)
    assert U.join(V).dim + I.dim == U.dim + V.dim
    assert I <= U and I <= V and U <= U.join(V)
    for u in us:
        assert U.contains(u)


def test_kernel_of_projection():
    # images of a, b, c, d under (a, b, c, d) -> a + b in a one-dimensional target
    K = kernel(AMB, QQ, [{0: 1}, {0: 1}, {}, {}])
    assert K.dim == 3
    assert K.contains({"a": 1, "b": -1}) and not K.contains({"a": 1})


def test_inverse():
    amb = Ambient(["a", "b"])
    inv = inverse([{"a": 1, "b": 1}, {"b": 2}], amb, QQ)
    assert inv({"a": 1, "b": 3}) == [1, 1]
    assert inverse([{"a": 1}, {"a": 2}], amb, QQ) is None
    assert inverse([{"a": 1, "b": 1}, {"a": 1, "b": 3}], amb, GF(2)) is None
