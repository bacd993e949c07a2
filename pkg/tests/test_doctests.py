import doctest
import importlib

import pytest

MODULES = ["algebra", "weyl", "operators", "polynomials", "cfunctions", "inner", "serialize", "verify", "cli"]


@pytest.mark.parametrize("name", MODULES)
def test_module_examples(name):
    mod = importlib.import_module(f"macdonald.{name}")
    result = doctest.testmod(mod)
    assert result.failed == 0
