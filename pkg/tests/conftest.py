import pytest

from genuslab.quadratic import ClassNumberCache


@pytest.fixture(scope="session")
def shared_cache(tmp_path_factory):
    """One class-number cache for the whole run; repeat lookups are free."""
    path = tmp_path_factory.mktemp("cache") / "class_numbers.tsv"
    return ClassNumberCache(str(path))
