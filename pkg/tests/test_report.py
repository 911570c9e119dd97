import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from egstab.verifier.report import SCHEMA, CensusReport, merge, merge_all

g6 = st.sampled_from(["A_", "B?", "Bw", "C~", "D?{", "DQw"])


@st.composite
def reports(draw):
    r = CensusReport("demo", {"n": 5})
    r.scanned = draw(st.integers(0, 50))
    r.filtered = draw(st.integers(0, r.scanned))
    for key in draw(st.lists(st.sampled_from(["a", "b", "c"]), max_size=5)):
        r.tally(key, draw(st.integers(1, 4)))
    for key in draw(st.lists(st.sampled_from(["x", "y"]), max_size=3)):
        r.note_max(key, draw(st.integers(0, 40)))
    for key in draw(st.lists(st.sampled_from(["f", "g"]), max_size=3)):
        r.flag(key, draw(st.booleans()))
    r.witnesses = draw(st.lists(g6, max_size=4))
    r.counterexamples = draw(st.lists(g6, max_size=2))
    return r


def body(r):
    return r.to_dict(timing=False)


class TestMerge:
    @given(reports(), reports(), reports())
    def test_associative_and_commutative(self, a, b, c):
        assert body(merge(merge(a, b), c)) == body(merge(a, merge(b, c)))
        assert body(merge(a, b)) == body(merge(b, a))

    @given(reports(), reports())
    def test_counts_add(self, a, b):
        m = merge(a, b)
        assert m.scanned == a.scanned + b.scanned
        assert set(m.witnesses) == set(a.witnesses) | set(b.witnesses)
        assert m.confirmed == (a.confirmed and b.confirmed)

    def test_mismatch(self):
        with pytest.raises(ValueError):
            merge(CensusReport("a", {}), CensusReport("b", {}))
        with pytest.raises(ValueError):
            merge_all([])


class TestRendering:
    def test_json_and_text(self):
        r = CensusReport("demo", {"n": 5, "k": 4}, scanned=3, filtered=2)
        r.tally("ok", 2)
        r.add_counterexample("C~")
        r.add_counterexample("C~")
        d = json.loads(r.to_json(timing=False))
        assert d["schema"] == SCHEMA and d["counterexamples"] == ["C~"] and not d["confirmed"]
        assert "wall_time" not in d
        text = r.to_text()
        assert "status = COUNTEREXAMPLE" in text and "param k = 4" in text.splitlines()[1]
