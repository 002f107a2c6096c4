import pytest

from coxcay import fixtures

# Graphs named by the acceptance criteria.
CORE = ["k2", "p4", "delta", "c4", "c5", "k4_minus_edge", "triangle_pendant", "one_ended"]


@pytest.fixture
def load():
    return fixtures.load


@pytest.fixture
def graph_file(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.graph"
        path.write_text(fixtures.TEXTS[name], encoding="utf-8")
        return str(path)

    return write
