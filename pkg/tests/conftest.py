import sys

import pytest


@pytest.fixture
def report_line(request):
    """Write a line to the real terminal, past pytest's capture."""
    capman = request.config.pluginmanager.getplugin("capturemanager")

    def _write(line: str) -> None:
        if capman is not None:
            with capman.global_and_fixture_disabled():
                sys.stdout.write(line)
                sys.stdout.flush()
        else:
            sys.stdout.write(line)

    return _write
