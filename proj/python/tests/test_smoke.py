import os
from fractions import Fraction
from pathlib import Path

import pytest

import torusforge as tf

CORPUS = Path(os.environ.get("TORUSFORGE_CORPUS_DIR", Path(__file__).resolve().parents[2] / "corpus"))


def load(name):
    return tf.load(str(CORPUS / name))


def test_load_and_bracket():
    n9 = load("n9.alg")
    assert n9.dim == 9
    assert n9.bracket("e4", "e3") == [(Fraction(1), "e9")]
    assert tf.validate(n9)["valid"]


def test_round_trip():
    text = (CORPUS / "heisenberg3.alg").read_text()
    assert tf.parse(text).to_json() == text


def test_parse_error_has_code():
    bad = (CORPUS / "heisenberg3.alg").read_text().replace('"1"', '"2/4"')
    with pytest.raises(tf.TorusforgeError) as info:
        tf.parse(bad)
    assert info.value.code == "PARSE_ERROR"


def test_torus_and_rank():
    n9 = load("n9.alg")
    torus = tf.diagonal_torus(n9)
    assert len(torus) == 2
    assert tf.rank(n9) == 2
    s = tf.s_system(n9)
    assert s["rank"] + len(torus) == n9.dim


def test_dld_verdicts():
    rep = tf.dld(load("n9.alg"))
    assert rep["condition_i"] and not rep["condition_ii"] and not rep["condition_iii"]
    assert rep["zero_root"] == ["e1"]
    assert tf.dld(load("filiform_model_8.alg"))["overall"]


def test_roots_of_n9():
    roots = tf.roots(load("n9.alg"))
    assert roots["zero_root"]


def test_extension_and_normalization():
    ext = tf.extend(load("filiform_model_8.alg"))
    assert ext.dim == 10
    assert ext.center_dim() == 0
    assert tf.verify_nilradical(ext, 8)["ok"]
    normal, iso = tf.normalize(ext, 8)
    assert normal == ext
    assert iso == [[Fraction(int(r == c)) for c in range(10)] for r in range(10)]


def test_cohomology_and_compare():
    r = load("r46_n8.alg")
    assert tf.cohomology(r, 1) == 0
    assert tf.cohomology(r, 2) >= 1
    h = load("heisenberg3.alg")
    assert tf.compare(h, h) == {"distinguished": False, "field": None}
    assert tf.compare(h, load("abelian_3.alg"))["distinguished"]
    assert tf.fingerprint(h)["center"] == 1


def test_subtorus_extension():
    l8 = load("filiform_model_8.alg")
    t1 = tf.diagonal_torus(l8)[0]
    matrix = [[t1[r] if r == c else 0 for c in range(8)] for r in range(8)]
    ext = tf.extend(l8, [matrix])
    assert ext.dim == 9
    assert tf.verify_nilradical(ext, 8)["ok"]
