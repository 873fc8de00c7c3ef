import os
import subprocess
import sys

import numpy as np
import pytest

from idealgraph.enumeration import (
    KNOWN_COUNTS,
    _enumerate_py,
    count_semigroups,
    enumerate_semigroups,
    enumerate_tables,
)
from idealgraph.semigroup import validate


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_counts_match_reference(order):
    assert count_semigroups(order) == KNOWN_COUNTS[order]


@pytest.mark.parametrize("order", [1, 2, 3])
def test_all_results_associative(order):
    tables = list(enumerate_semigroups(order))
    assert len(tables) == KNOWN_COUNTS[order]
    for t in tables:
        assert validate(t)


@pytest.mark.parametrize("order", [2, 3])
def test_results_distinct_and_sorted(order):
    flats = enumerate_tables(order)
    tuples = [tuple(row) for row in flats]
    assert tuples == sorted(set(tuples))


@pytest.mark.parametrize("order", [2, 3, 4])
def test_numba_and_python_paths_agree(order):
    compiled = enumerate_tables(order)
    pure = np.array(list(_enumerate_py(order)), dtype=np.int8).reshape(
        -1, order * order
    )
    assert compiled.shape == pure.shape
    assert (compiled == pure).all()


def test_env_flag_selects_python_path():
    env = dict(os.environ, IDEALGRAPH_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from idealgraph.enumeration import count_semigroups;"
         "print(count_semigroups(3))"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "113"


def test_order_out_of_range():
    with pytest.raises(ValueError):
        enumerate_tables(6)
    with pytest.raises(ValueError):
        enumerate_tables(0)
