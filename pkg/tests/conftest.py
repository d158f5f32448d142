import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def corpus():
    """Full generated corpus at the default oracle budget (built once)."""
    from entailkit.pipeline import build_dataset

    return build_dataset()


@pytest.fixture(scope="session")
def snapshot():
    """Vendored released-data snapshot, ingested via the column adapter."""
    from entailkit.pipeline import ingest_dataset, parse_column_config

    columns = parse_column_config((FIXTURES / "sicck_columns.toml").read_text())
    return ingest_dataset(FIXTURES / "released_snapshot.csv", columns)
