import os

import pytest

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture
def fixture_path():
    return lambda name: os.path.join(FIXTURES, name)


@pytest.fixture
def reference_project():
    from fshom.project import load_project_file

    return load_project_file(os.path.join(FIXTURES, "reference.json"))


@pytest.fixture
def reference_mu(reference_project):
    return reference_project.mu
