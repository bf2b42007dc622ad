import pytest
from augtree.core import gen_random, load_instance, loads_instance, save_instance, dumps_instance
from augtree.exceptions import CostFormatError, CostOverflowError, DoatParseError, EdgeCountError, HeaderError
from augtree.lowerbound import gen_lb
from augtree.schemas import LowerBoundParams, Variant


def test_save_then_load(tmp_path):
    inst = gen_random(10, 2, 7)
    path = tmp_path / "a.doat"
    save_instance(inst, path)
    assert load_instance(path) == inst


def test_explicit_matrix_text():
    text = "DOAT 1\nn=3 k=1 oracle=explicit\nT 0 1 2\nT 1 2 3\n0 2 5\n2 0 3\n5 3 0\n"
    inst = loads_instance(text)
    assert inst.n == 3 and inst.k == 1
    assert inst.oracle.cost(0, 2) == 5
    assert dumps_instance(inst) == text


def test_comments_and_blank_lines_are_skipped():
    text = "# header\nDOAT 1\n\nn=2 k=0 oracle=l1\nT 0 1 3\n0 0\n# points\n1 2\n"
    assert loads_instance(text).oracle.cost(0, 1) == 3


def test_edge_count_error():
    text = "DOAT 1\nn=5 k=1 oracle=l1\nT 0 1 1\nT 1 2 1\nT 2 3 1\n" + "0 0\n" * 5
    with pytest.raises(EdgeCountError, match="edge count"):
        loads_instance(text)


@pytest.mark.parametrize("text, error", [
    ("", HeaderError),
    ("DOAT 2\nn=2 k=1 oracle=l1\n", HeaderError),
    ("DOAT 1\nn=2 k=1\n", HeaderError),
    ("DOAT 1\nn=2 k=1 oracle=weird\n", HeaderError),
    ("DOAT 1\nn=2 k=1 oracle=l1\nT 0 1 x\n0 0\n1 1\n", CostFormatError),
    ("DOAT 1\nn=2 k=1 oracle=l1\nT 0 1 4611686018427387904\n0 0\n1 1\n", CostOverflowError),
    ("DOAT 1\nn=2 k=1 oracle=explicit\nT 0 1 1\n0 1\n", DoatParseError),
    ("DOAT 1\nn=2 k=1 oracle=explicit\nT 0 1 1\n0 1\n2 0\n", CostFormatError),
])
def test_malformed_files(text, error):
    with pytest.raises(error):
        loads_instance(text)


def test_lower_bound_file_rebuilds_instance():
    inst = gen_lb(LowerBoundParams(n_star=6, k=5, variant=Variant.I))
    loaded = loads_instance(dumps_instance(inst))
    assert loaded.n == 4 * 6 + 6
    assert loaded == inst
    assert loaded.oracle.params.variant == Variant.I


def test_lower_bound_file_with_foreign_tree():
    text = dumps_instance(gen_lb(LowerBoundParams(n_star=3)))
    tampered = text.replace("T 0 1 2", "T 0 1 3", 1)
    with pytest.raises(DoatParseError):
        loads_instance(tampered)
