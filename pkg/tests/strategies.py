from hypothesis import strategies as st

from src.generators import GenSpec, Model, generate


@st.composite
def problems(draw, max_n: int = 8, max_cap: int = 4, models=(Model.SRI_UNIFORM, Model.SMI_UNIFORM)):
    n = draw(st.integers(min_value=0, max_value=max_n))
    spec = GenSpec(
        n=n,
        model=draw(st.sampled_from(models)),
        list_cap=draw(st.integers(min_value=1, max_value=max_cap)),
        num_deviators=draw(st.integers(min_value=0, max_value=min(n, 4))),
        density=draw(st.sampled_from([0.3, 0.6, 1.0])),
        seed=draw(st.integers(min_value=0, max_value=2**32)),
    )
    return generate(spec)
