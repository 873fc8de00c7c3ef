import pytest

from idealgraph import all_left_ideals, build_gamma, generate, parse_family


def family_graph(spec: str):
    table = generate(parse_family(spec))
    fam = all_left_ideals(table)
    return table, fam, build_gamma(fam)


@pytest.fixture(scope="session")
def rz3():
    return family_graph("right-zero:3")


@pytest.fixture(scope="session")
def rz4():
    return family_graph("right-zero:4")


@pytest.fixture(scope="session")
def rz5():
    return family_graph("right-zero:5")


@pytest.fixture(scope="session")
def z6():
    return family_graph("zn-multiplication:6")


@pytest.fixture(scope="session")
def order3_corpus():
    from idealgraph import enumerate_semigroups

    return list(enumerate_semigroups(3))
