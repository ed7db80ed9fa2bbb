import pytest

from bibrank.corpus import Corpus, record_from_dict
from bibrank.engine import Engine

import synthetic

# Hand-written six-document corpus used across the unit tests.
SMALL_DOCS = [
    {
        "id": "d1",
        "title": "Data quality in survey interviews",
        "abstract": "Measurement error and data quality in panel surveys.",
        "descriptors": ["Data Quality", "Measurement Error", "Survey"],
        "authors": ["Keller, Anna", "Brandt, Jonas"],
        "journal": "Survey Methodology",
        "year": 2008,
    },
    {
        "id": "d2",
        "title": "Nonresponse rates in panel studies",
        "abstract": "Data quality suffers when nonresponse grows.",
        "descriptors": ["Nonresponse", "Data Quality", "Panel Study"],
        "authors": ["Brandt, Jonas", "Fischer, Lena"],
        "journal": "Survey Methodology",
        "year": 2010,
    },
    {
        "id": "d3",
        "title": "Party system change in Europe",
        "abstract": "Electoral volatility and party system fragmentation.",
        "descriptors": ["Party System", "Election"],
        "authors": ["Novak, Petra"],
        "journal": "Party Politics Review",
        "year": 2012,
    },
    {
        "id": "d4",
        "title": "Survey data quality and incentives",
        "abstract": "Incentives improve response without hurting data quality.",
        "descriptors": ["Data Quality", "Incentive"],
        "authors": ["Fischer, Lena", "Sommer, Nils"],
        "journal": "Journal of Official Statistics",
        "year": 2011,
    },
    {
        "id": "d5",
        "title": "Urban lifestyles and social milieus",
        "abstract": "City neighborhoods shape lifestyle choices.",
        "descriptors": ["Urban Sociology", "Lifestyle"],
        "authors": ["Schulz, Marie", "Wagner, Felix", "Becker, Laura"],
        "journal": "Urban Studies Journal",
        "year": 2009,
    },
    {
        "id": "d6",
        "title": "Measuring education outcomes",
        "abstract": "Quality of administrative data in education research.",
        "descriptors": ["Education Research", "Data Quality"],
        "authors": [],
        "journal": "",
        "year": 0,
    },
]


def corpus_from_dicts(dicts) -> Corpus:
    return Corpus(tuple(record_from_dict(d) for d in dicts))


@pytest.fixture(scope="session")
def small_corpus() -> Corpus:
    return corpus_from_dicts(SMALL_DOCS)


@pytest.fixture(scope="session")
def small_corpus_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("small") / "small.jsonl"
    synthetic.write_jsonl(path, SMALL_DOCS)
    return path


@pytest.fixture(scope="session")
def corpus200_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("corpus") / "corpus200.jsonl"
    synthetic.write_jsonl(path, synthetic.make_records(200, seed=7))
    return path


@pytest.fixture(scope="session")
def engine200(corpus200_path) -> Engine:
    return Engine.open(corpus200_path)


@pytest.fixture(scope="session")
def corpus50() -> Corpus:
    return corpus_from_dicts(synthetic.make_records(50, seed=13))


def pytest_runtest_logreport(report):
    """One visible pass/fail line per acceptance criterion."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    outcome = "PASS" if report.passed else "FAIL"
    print(f"\n[{outcome}] {name}")
