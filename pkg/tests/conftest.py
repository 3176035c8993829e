import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from centauts.corpus import catalog


@pytest.fixture(scope="session")
def groups():
    """All catalog groups, built once and shared (automorphism caches persist)."""
    return {name: make() for name, make in catalog().items()}


def in_acceptance_range(group) -> bool:
    """Corpus bounds used by the acceptance criteria: p=2 up to order 64,
    p=3 up to order 81 (other primes excluded)."""
    p = group.p_group_prime()
    if p == 2:
        return group.n <= 64
    if p == 3:
        return group.n <= 81
    return False


@pytest.fixture(scope="session")
def corpus(groups):
    """Catalog groups inside the acceptance bounds, in catalog order."""
    return [g for g in groups.values() if in_acceptance_range(g)]


@pytest.fixture(scope="session")
def class2_corpus(corpus):
    from centauts.errors import NotNilpotent

    keep = []
    for g in corpus:
        try:
            if g.nilpotency_class() == 2:
                keep.append(g)
        except NotNilpotent:
            pass
    return keep


@pytest.fixture(scope="session")
def nonabelian_corpus(corpus):
    return [g for g in corpus if not g.is_abelian()]
