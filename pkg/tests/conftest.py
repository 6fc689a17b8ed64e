from pathlib import Path

import pytest

from hdran.services.experiment_service import ExperimentService
from hdran.services.generator_service import GeneratorService
from hdran.services.metrics_service import MetricsService
from hdran.services.theory_service import TheoryService

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture
def generator_service():
    return GeneratorService()


@pytest.fixture
def theory_service():
    return TheoryService()


@pytest.fixture
def metrics_service():
    return MetricsService()


@pytest.fixture
def experiment_service(theory_service):
    return ExperimentService(theory_service, workers=1)


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR
