import warnings

import pytest

from drivenqubit import RegimeWarning


@pytest.fixture(autouse=True)
def _silence_regime_warnings():
    # Many tests probe edge regimes on purpose; warnings are tested
    # explicitly where they matter.
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        yield
