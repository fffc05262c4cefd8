from __future__ import annotations

import pytest

from blowuplab._kernels import available_backends, use_backend


@pytest.fixture(params=available_backends())
def backend(request):
    prev = use_backend(request.param)
    yield request.param
    use_backend(prev)
