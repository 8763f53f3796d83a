"""End-to-end checks of the python bindings against known small graphs."""

import os

import pytest

import flab

DATA = os.path.join(os.path.dirname(__file__), "..", "data", "path5.txt")


@pytest.fixture
def path5():
    return flab.load_text(DATA)


def test_load_text_shape(path5):
    assert path5.n == 5
    assert path5.m == 4
    assert not path5.directed
    assert path5.external_ids == [1, 2, 3, 4, 5]
    assert path5.internal_id(2) == 1
    with pytest.raises(ValueError):
        path5.internal_id(99)


def test_masked_kernel_counts(path5):
    run = flab.bfs(path5, source=path5.internal_id(2), algo="submatrix")
    assert run.levels == [4, 0, 2, 3, 1]
    assert run.frontier_sizes == [1, 1, 1, 1, 1]
    assert run.reached == 5
    assert run.semiring_evals == 8
    assert run.nonzeros_touched == 4
    assert run.steps == 5
    assert run.variant == "submatrix"


def test_baseline_counts(path5):
    src = path5.internal_id(2)
    assert flab.bfs(path5, src, algo="spmv").semiring_evals == 80
    assert flab.bfs(path5, src, algo="spmmspv").semiring_evals == 16
    assert flab.bfs(path5, src, algo="submatrix-allnz").semiring_evals == 8


def test_semiring_choice_does_not_change_levels(path5):
    src = path5.internal_id(2)
    want = flab.bfs(path5, src, semiring="boolean").levels
    for semiring in ("arithmetic", "tropical"):
        assert flab.bfs(path5, src, semiring=semiring).levels == want


def test_oracle_equivalence_random():
    g = flab.random_gnp(60, 0.08, seed=11, connected=True)
    expect = flab.bfs_levels(g, 7)
    assert expect.reached == 60
    for algo in ("spmv", "spmspv", "spmmspv", "submatrix", "submatrix-allnz"):
        assert flab.bfs(g, 7, algo=algo).levels == expect.levels


def test_parallel_matches_sequential():
    g = flab.random_gnp(120, 0.05, seed=3, connected=True)
    seq = flab.bfs(g, 0, algo="submatrix")
    for workers in (1, 2, 4):
        par = flab.bfs(g, 0, algo="parallel", workers=workers)
        assert par.levels == seq.levels
        assert par.duplicates <= 2 * g.m
    one = flab.bfs(g, 0, algo="parallel", workers=1)
    assert one.semiring_evals == seq.semiring_evals
    assert one.parents == seq.parents


def test_from_edges_and_stats():
    g = flab.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 1)])
    assert g.m == 3  # duplicate collapsed
    st = flab.stats(g, source=0)
    assert st["n"] == 4
    assert st["m"] == 3
    assert st["eccentricity_from_source"] == 3
    assert st["reached_from_source"] == 4


def test_unreached_marker():
    g = flab.from_edges(3, [(1, 2)])
    run = flab.bfs(g, 0)
    assert run.levels[0] == 0
    assert run.levels[1] == flab.UNREACHED
    assert run.reached == 1
