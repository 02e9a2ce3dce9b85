import pytest
from hypothesis import settings

from kalliance.corpus import default_corpus_spec, run_corpus

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def default_corpus():
    """The default certification corpus, solved once per session."""
    spec = default_corpus_spec()
    return spec, run_corpus(spec)
