from __future__ import annotations

import pytest

from graphstego.codebook import bundled_codebook_text, code_from_codebook
from graphstego.decoder import build_coset_table_bruteforce, build_coset_table_tjoin


@pytest.fixture(scope="session")
def k5_code():
    """The worked reference code: K5 with the pinned path tree."""
    return code_from_codebook(bundled_codebook_text("k5"))


@pytest.fixture(scope="session")
def k5_table(k5_code):
    return build_coset_table_bruteforce(k5_code)


@pytest.fixture(scope="session")
def k5_table_tjoin(k5_code):
    return build_coset_table_tjoin(k5_code)
