import os
import sys

from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from oracles import transitive_closure  # noqa: E402

from eulercat import builders  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@st.composite
def posets(draw, max_size=6):
    """Random finite posets: the closure of a random relation i < j."""
    n = draw(st.integers(1, max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    leq = transitive_closure(n, chosen)
    perm = draw(st.permutations(range(n)))
    els = [f"x{perm[i]}" for i in range(n)]
    return builders.thin_category("RandP", els, {(els[i], els[j]) for i, j in leq})


SMALL_CATALOG = [
    ("discrete", (2,)), ("codiscrete", (2,)), ("cyclic_group", (3,)), ("idempotent_monoid", ()),
    ("split_epi_category", ()), ("chain", (3,)), ("subsets_poset", (2,)), ("delta_inj", (2,)),
    ("delta_surj", (3,)), ("fin_sets", (2,)), ("sphere_poset", (1,)), ("pushout_shape", ()),
    ("parallel_pair", ()), ("terminal", ()),
]


@st.composite
def small_categories(draw):
    name, params = draw(st.sampled_from(SMALL_CATALOG))
    return builders.build(name, *params)
