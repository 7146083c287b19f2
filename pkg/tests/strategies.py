from hypothesis import strategies as st


def signed_parts(max_part: int = 3):
    return st.integers(1, max_part).flatmap(lambda a: st.sampled_from((a, -a)))


def words(max_depth: int = 3, max_part: int = 3, min_depth: int = 1):
    return st.lists(signed_parts(max_part), min_size=min_depth, max_size=max_depth).map(tuple)
